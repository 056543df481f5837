#include "tsa/harness/scatter.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "tsa/errors.hpp"
#include "tsa/rng.hpp"

namespace tsa::harness {

ScatterMode parse_scatter_mode(std::string_view name)
{
    if (name == "raw_tangent")
        return ScatterMode::raw_tangent;
    if (name == "decayed")
        return ScatterMode::decayed;
    throw ConfigError("unknown scatter mode '" + std::string(name) + "' (expected raw_tangent or decayed)");
}

std::vector<double> scatter_samples(const ScatterOptions& options)
{
    if (options.samples == 0)
        throw ConfigError("samples must be >= 1");
    if (!(options.theta_max > 0.0 && options.theta_max < std::numbers::pi / 2))
        throw ConfigError("theta_max must lie in (0, pi/2)");

    RngStream rng(options.seed);
    std::vector<double> out;
    out.reserve(options.samples);
    const double ten_d = 10.0 * static_cast<double>(options.dimension);
    for (std::size_t i = 0; i < options.samples; ++i) {
        if (options.mode == ScatterMode::raw_tangent) {
            out.push_back(std::tan(rng.uniform(0.0, options.theta_max)));
        } else {
            const double s = rng.sign();
            const double t = static_cast<double>(i + 1);
            out.push_back(s * std::tan(rng.uniform(0.0, options.theta_max)) * std::log(1.0 + ten_d / t));
        }
    }
    return out;
}

void write_scatter_csv(std::ostream& out, std::span<const double> values)
{
    out << "index,value\n";
    char buf[48];
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, values[i]);
        out << buf;
    }
}

}  // namespace tsa::harness
