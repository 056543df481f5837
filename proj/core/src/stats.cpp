#include "tsa/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>

namespace tsa::stats {

namespace {

void require_finite(std::span<const double> v, std::string_view what)
{
    for (double x : v)
        if (!std::isfinite(x))
            throw StatsError(std::string(what) + ": non-finite value");
}

// Counts of every achievable doubled positive-rank sum over all 2^n sign
// assignments. Doubling makes mid-ranks integral.
std::vector<std::uint64_t> signed_rank_counts(std::span<const long> doubled_ranks)
{
    const long total = std::accumulate(doubled_ranks.begin(), doubled_ranks.end(), 0L);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(total) + 1, 0);
    counts[0] = 1;
    long reach = 0;
    for (long r : doubled_ranks) {
        for (long s = reach; s >= 0; --s)
            if (counts[static_cast<std::size_t>(s)] != 0)
                counts[static_cast<std::size_t>(s + r)] += counts[static_cast<std::size_t>(s)];
        reach += r;
    }
    return counts;
}

double gamma_series(double a, double x)
{
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 1; n < 10000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-17)
            break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x), modified Lentz.
double gamma_continued_fraction(double a, double x)
{
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-17)
            break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

std::string_view to_string(Direction d)
{
    switch (d) {
    case Direction::better: return "+";
    case Direction::worse: return "-";
    case Direction::tie: return "=";
    }
    return "?";
}

std::vector<double> midranks(std::span<const double> values)
{
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]])
            ++j;
        const double r = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

double regularized_gamma_q(double a, double x)
{
    if (!(a > 0.0) || x < 0.0 || std::isnan(x))
        throw StatsError("regularized_gamma_q: requires a > 0 and x >= 0");
    if (x == 0.0)
        return 1.0;
    if (std::isinf(x))
        return 0.0;
    if (x < a + 1.0)
        return 1.0 - gamma_series(a, x);
    return gamma_continued_fraction(a, x);
}

double chi_square_sf(double x, double dof)
{
    if (x <= 0.0)
        return 1.0;
    return regularized_gamma_q(0.5 * dof, 0.5 * x);
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

StatTestResult wilcoxon_signed_rank(const SampleSet& a, const SampleSet& b, double alpha)
{
    if (a.values.size() != b.values.size())
        throw StatsError("wilcoxon_signed_rank: samples must be paired (equal length)");
    if (a.values.size() < 5)
        throw StatsError("wilcoxon_signed_rank: at least 5 pairs required");
    require_finite(a.values, "wilcoxon_signed_rank");
    require_finite(b.values, "wilcoxon_signed_rank");

    StatTestResult res;
    res.alpha = alpha;

    std::vector<double> diffs;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double d = a.values[i] - b.values[i];
        if (d != 0.0)
            diffs.push_back(d);
    }
    if (diffs.empty()) {
        res.degenerate = true;
        res.mean_ranks = {0.0, 0.0};
        return res;
    }

    std::vector<double> magnitudes(diffs.size());
    std::transform(diffs.begin(), diffs.end(), magnitudes.begin(), [](double d) { return std::abs(d); });
    const auto ranks = midranks(magnitudes);

    double w_plus = 0.0;
    double w_minus = 0.0;
    std::size_t n_plus = 0;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i] > 0.0) {
            w_plus += ranks[i];
            ++n_plus;
        } else {
            w_minus += ranks[i];
        }
    }
    const std::size_t n = diffs.size();
    const std::size_t n_minus = n - n_plus;
    res.statistic = std::min(w_plus, w_minus);
    res.mean_ranks = {n_plus ? w_plus / static_cast<double>(n_plus) : 0.0,
                      n_minus ? w_minus / static_cast<double>(n_minus) : 0.0};

    if (n <= kWilcoxonExactLimit) {
        std::vector<long> doubled(n);
        std::transform(ranks.begin(), ranks.end(), doubled.begin(), [](double r) { return std::lround(2.0 * r); });
        const auto counts = signed_rank_counts(doubled);
        const long total = static_cast<long>(counts.size()) - 1;
        const long observed = std::lround(2.0 * res.statistic);
        std::uint64_t extreme = 0;
        for (long s = 0; s <= total; ++s)
            if (std::min(s, total - s) <= observed)
                extreme += counts[static_cast<std::size_t>(s)];
        res.p_value = std::ldexp(static_cast<double>(extreme), -static_cast<int>(n));
    } else {
        const double nn = static_cast<double>(n);
        double tie_term = 0.0;
        std::vector<double> sorted = ranks;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n;) {
            std::size_t j = i;
            while (j + 1 < n && sorted[j + 1] == sorted[i])
                ++j;
            const double t = static_cast<double>(j - i + 1);
            tie_term += t * t * t - t;
            i = j + 1;
        }
        const double mean = nn * (nn + 1.0) / 4.0;
        const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - tie_term / 48.0;
        const double z = std::max(0.0, std::abs(w_plus - mean) - 0.5) / std::sqrt(var);
        res.p_value = 2.0 * normal_sf(z);
    }
    res.p_value = std::clamp(res.p_value, 0.0, 1.0);
    res.reject = res.p_value < alpha;
    if (res.reject)
        res.direction = w_plus < w_minus ? Direction::better : Direction::worse;
    return res;
}

StatTestResult kruskal_wallis(std::span<const SampleSet> groups, double alpha)
{
    if (groups.size() < 2)
        throw StatsError("kruskal_wallis: at least two groups required");
    std::vector<double> pooled;
    for (const auto& g : groups) {
        if (g.values.empty())
            throw StatsError("kruskal_wallis: empty group '" + g.label + "'");
        require_finite(g.values, "kruskal_wallis");
        pooled.insert(pooled.end(), g.values.begin(), g.values.end());
    }
    const auto ranks = midranks(pooled);
    const double n = static_cast<double>(pooled.size());

    StatTestResult res;
    res.alpha = alpha;
    double weighted = 0.0;
    std::size_t offset = 0;
    for (const auto& g : groups) {
        double r = 0.0;
        for (std::size_t i = 0; i < g.values.size(); ++i)
            r += ranks[offset + i];
        offset += g.values.size();
        const double ng = static_cast<double>(g.values.size());
        weighted += r * r / ng;
        res.mean_ranks.push_back(r / ng);
    }

    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i])
            ++j;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    const double correction = 1.0 - tie_term / (n * n * n - n);
    if (correction <= 0.0) {
        res.degenerate = true;
        return res;
    }

    const double h = 12.0 / (n * (n + 1.0)) * weighted - 3.0 * (n + 1.0);
    res.statistic = std::max(0.0, h / correction);
    res.p_value = std::clamp(chi_square_sf(res.statistic, static_cast<double>(groups.size() - 1)), 0.0, 1.0);
    res.reject = res.p_value < alpha;
    if (res.reject) {
        const auto best = std::min_element(res.mean_ranks.begin(), res.mean_ranks.end());
        res.direction = best == res.mean_ranks.begin() ? Direction::better : Direction::worse;
    }
    return res;
}

std::vector<std::vector<double>> normalize_scores(const std::vector<std::vector<double>>& rows)
{
    std::vector<std::vector<double>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        require_finite(row, "normalize_scores");
        std::vector<double> r(row.size(), 0.0);
        if (!row.empty()) {
            const auto [lo_it, hi_it] = std::minmax_element(row.begin(), row.end());
            const double lo = *lo_it;
            const double hi = *hi_it;
            if (hi > lo) {
                double range = hi - lo;
                // Halve everything when the spread itself overflows.
                const double scale = std::isfinite(range) ? 1.0 : 0.5;
                range = hi * scale - lo * scale;
                for (std::size_t i = 0; i < row.size(); ++i)
                    r[i] = std::clamp((row[i] * scale - lo * scale) / range, 0.0, 1.0);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

Summary summarize(std::span<const double> values)
{
    if (values.empty())
        throw StatsError("summarize: empty sample");
    Summary s;
    const double n = static_cast<double>(values.size());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    s.best = *std::min_element(values.begin(), values.end());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values)
            ss += (v - s.mean) * (v - s.mean);
        s.std = std::sqrt(ss / (n - 1.0));
    }
    return s;
}

}  // namespace tsa::stats
