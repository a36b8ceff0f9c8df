#pragma once

#include <cstdint>

namespace rocopula {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based SplitMix64 stream. Output i is mix64(key + (i+1)·γ), so a
/// substream is fully determined by its key. Keys are derived from
/// (seed, stream, block), which makes every block of samples reproducible
/// no matter which thread draws it.
class RandomStream {
public:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    explicit RandomStream(std::uint64_t key) : state_(key) {}

    static RandomStream substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t block)
    {
        const std::uint64_t k1 = mix64(seed + kGamma * (stream + 1));
        return RandomStream(mix64(k1 ^ mix64(block * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL)));
    }

    std::uint64_t next_u64()
    {
        state_ += kGamma;
        return mix64(state_);
    }

    /// Uniform on the open interval (0,1): (k + 0.5)·2⁻⁵³.
    double uniform()
    {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double exponential();
    double standard_normal();
    /// Gamma(shape, 1) by Marsaglia-Tsang.
    double gamma(double shape);
    /// Positive stable with Laplace transform exp(−s^alpha), 0 < alpha <= 1 (Kanter).
    double positive_stable(double alpha);

private:
    std::uint64_t state_;
};

}  // namespace rocopula
