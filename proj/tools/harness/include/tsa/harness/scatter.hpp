#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace tsa::harness {

enum class ScatterMode { raw_tangent, decayed };

ScatterMode parse_scatter_mode(std::string_view name);  // throws ConfigError

struct ScatterOptions {
    ScatterMode mode = ScatterMode::raw_tangent;
    std::size_t samples = 10'000;
    std::uint64_t seed = 0;
    double theta_max = std::numbers::pi / 2.1;
    std::size_t dimension = 30;  ///< D in the decay factor
};

/// raw_tangent: tan(theta), theta ~ U[0, theta_max).
/// decayed: sign * tan(theta) * ln(1 + 10 D / t) with t = index + 1.
std::vector<double> scatter_samples(const ScatterOptions& options);

/// `index,value` rows.
void write_scatter_csv(std::ostream& out, std::span<const double> values);

}  // namespace tsa::harness
