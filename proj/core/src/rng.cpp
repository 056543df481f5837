#include "tsa/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace tsa {

namespace {
__extension__ typedef unsigned __int128 u128;
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RngStream RngStream::replay(std::vector<double> uniforms)
{
    RngStream s(0);
    s.script_ = std::move(uniforms);
    s.scripted_ = true;
    return s;
}

std::uint64_t RngStream::next_u64()
{
    if (scripted_)
        throw std::logic_error("RngStream: raw draws are unavailable in replay mode");
    return engine_();
}

double RngStream::uniform()
{
    if (scripted_) {
        if (cursor_ >= script_.size())
            throw std::out_of_range("RngStream: replay sequence exhausted");
        return script_[cursor_++];
    }
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t RngStream::uniform_index(std::size_t lo, std::size_t hi)
{
    if (hi < lo)
        throw std::invalid_argument("RngStream::uniform_index: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (scripted_) {
        const auto k = static_cast<std::uint64_t>(std::floor(uniform() * static_cast<double>(span)));
        return lo + static_cast<std::size_t>(k < span ? k : span - 1);
    }
    if (span == 0)  // full 64-bit range
        return static_cast<std::size_t>(engine_());

    // Lemire's multiply-and-reject method, unbiased.
    std::uint64_t x = engine_();
    u128 m = static_cast<u128>(x) * span;
    auto low = static_cast<std::uint64_t>(m);
    if (low < span) {
        const std::uint64_t threshold = (0 - span) % span;
        while (low < threshold) {
            x = engine_();
            m = static_cast<u128>(x) * span;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return lo + static_cast<std::size_t>(m >> 64);
}

std::size_t RngStream::replay_remaining() const noexcept
{
    return scripted_ ? script_.size() - cursor_ : 0;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) noexcept
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace tsa
