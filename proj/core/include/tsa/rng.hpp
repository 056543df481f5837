#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace tsa {

/// Seeded random stream shared by every stochastic component.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard, so a seed reproduces bit-identical draws on every platform.
/// The conversions to real and integer ranges are done here rather than
/// through <random> distributions, whose algorithms are implementation
/// defined.
///
/// A stream can also be built in replay mode from a fixed list of uniform
/// values. Every draw then consumes the next listed value; integer draws
/// map u to lo + floor(u * (hi - lo + 1)). Replay exists so tests can force
/// exact draws through the real code paths.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed = 0);

    /// Stream that returns `uniforms` in order and throws std::out_of_range
    /// once they run out.
    static RngStream replay(std::vector<double> uniforms);

    std::uint64_t seed() const noexcept { return seed_; }

    /// Raw 64-bit output of the generator (not available in replay mode).
    std::uint64_t next_u64();

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform real in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform integer in the closed range [lo, hi].
    std::size_t uniform_index(std::size_t lo, std::size_t hi);

    /// +1 when a fresh uniform draw is >= 0.5, else -1.
    double sign() { return uniform() >= 0.5 ? 1.0 : -1.0; }

    /// Number of replayed values not yet consumed (0 for seeded streams).
    std::size_t replay_remaining() const noexcept;

private:
    std::uint64_t seed_ = 0;
    std::mt19937_64 engine_;
    std::vector<double> script_;
    std::size_t cursor_ = 0;
    bool scripted_ = false;
};

/// Mixes a seed into a well separated child seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) noexcept;

}  // namespace tsa
