#include "tsa/harness/compare.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <set>

#include "tsa/errors.hpp"

namespace tsa::harness {

namespace {

std::string join(const std::vector<std::string>& v)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : ", ") + x;
    return s.empty() ? "(none)" : s;
}

std::string fmt(double v, const char* spec = "%.6g")
{
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

}  // namespace

FunctionSetMismatch::FunctionSetMismatch(std::string reference_, std::string other_,
                                         std::vector<std::string> only_in_reference_,
                                         std::vector<std::string> only_in_other_)
    : std::runtime_error("function sets differ between '" + reference_ + "' and '" + other_ + "'; only in '"
                         + reference_ + "': " + join(only_in_reference_) + "; only in '" + other_
                         + "': " + join(only_in_other_)),
      reference(std::move(reference_)), other(std::move(other_)), only_in_reference(std::move(only_in_reference_)),
      only_in_other(std::move(only_in_other_))
{
}

ComparisonReport compare_results(const std::vector<ExperimentResults>& sets, double alpha)
{
    if (sets.size() < 2)
        throw ConfigError("compare needs at least two result sets");

    const auto ids_of = [](const ExperimentResults& r) {
        std::set<std::string> ids;
        for (const auto& f : r.functions)
            ids.insert(f.function_id);
        return ids;
    };
    const auto reference_ids = ids_of(sets[0]);
    for (std::size_t k = 1; k < sets.size(); ++k) {
        const auto ids = ids_of(sets[k]);
        std::vector<std::string> only_ref, only_other;
        std::set_difference(reference_ids.begin(), reference_ids.end(), ids.begin(), ids.end(),
                            std::back_inserter(only_ref));
        std::set_difference(ids.begin(), ids.end(), reference_ids.begin(), reference_ids.end(),
                            std::back_inserter(only_other));
        if (!only_ref.empty() || !only_other.empty())
            throw FunctionSetMismatch(sets[0].label, sets[k].label, only_ref, only_other);
    }

    ComparisonReport rep;
    rep.alpha = alpha;
    for (const auto& s : sets)
        rep.labels.push_back(s.label);
    for (const auto& f : sets[0].functions)
        rep.function_ids.push_back(f.function_id);

    for (const auto& id : rep.function_ids) {
        std::vector<double> row;
        for (const auto& s : sets) {
            std::vector<double> best;
            for (const auto& r : s.find(id)->runs)
                best.push_back(r.summary.best_fitness);
            row.push_back(stats::summarize(best).mean);
        }
        rep.means.push_back(std::move(row));
    }
    rep.normalized = stats::normalize_scores(rep.means);

    std::vector<stats::SampleSet> columns(sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k) {
        columns[k].label = rep.labels[k];
        for (const auto& row : rep.normalized)
            columns[k].values.push_back(row[k]);
    }

    for (std::size_t k = 1; k < sets.size(); ++k) {
        PairwiseRow row{rep.labels[0], rep.labels[k], std::nullopt, {}};
        if (rep.function_ids.size() < 5) {
            row.note = "fewer than 5 functions";
        } else {
            row.test = stats::wilcoxon_signed_rank(columns[0], columns[k], alpha);
            if (row.test->degenerate)
                row.note = "all differences zero";
        }
        rep.wilcoxon.push_back(std::move(row));
    }
    rep.kruskal = stats::kruskal_wallis(columns, alpha);
    return rep;
}

void write_comparison(std::ostream& out, const ComparisonReport& rep)
{
    out << "# normalized scores (0 = best mean on the function)\n";
    out << "function_id";
    for (const auto& l : rep.labels)
        out << ',' << l;
    out << '\n';
    for (std::size_t i = 0; i < rep.function_ids.size(); ++i) {
        out << rep.function_ids[i];
        for (double v : rep.normalized[i])
            out << ',' << fmt(v);
        out << '\n';
    }

    out << "\n# wilcoxon signed-rank, alpha " << fmt(rep.alpha) << "\n";
    out << "reference,other,P,H,ranks,statistic,note\n";
    for (const auto& w : rep.wilcoxon) {
        out << w.reference << ',' << w.other << ',';
        if (w.test)
            out << fmt(w.test->p_value, "%.6e") << ',' << (w.test->reject ? 1 : 0) << ','
                << stats::to_string(w.test->direction) << ',' << fmt(w.test->statistic);
        else
            out << ",,,";
        out << ',' << w.note << '\n';
    }

    out << "\n# kruskal-wallis, alpha " << fmt(rep.alpha) << "\n";
    out << "H,P,reject";
    for (const auto& l : rep.labels)
        out << ",mean_rank_" << l;
    out << '\n';
    out << fmt(rep.kruskal.statistic) << ',' << fmt(rep.kruskal.p_value, "%.6e") << ','
        << (rep.kruskal.reject ? 1 : 0);
    for (std::size_t k = 0; k < rep.labels.size(); ++k)
        out << ',' << (k < rep.kruskal.mean_ranks.size() ? fmt(rep.kruskal.mean_ranks[k]) : std::string());
    out << '\n';
}

}  // namespace tsa::harness
