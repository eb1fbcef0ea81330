#pragma once

// Portable random streams. The generator and every variate algorithm are
// fixed so that a seed reproduces the same stream on any platform:
//
//   xoshiro256** seeded from splitmix64,
//   uniform doubles from the top 53 bits,
//   Box-Muller (cosine branch only, two uniforms per normal),
//   log-normal as exp of a normal,
//   Marsaglia-Tsang for gamma (with the u^(1/k) boost when k < 1).

#include <array>
#include <cstdint>

namespace nnssim {

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept;

    /// Uniform in [0, 1).
    double uniform() noexcept;
    double normal(double mean, double std_dev) noexcept;
    double log_normal(double mean_log, double sigma_log) noexcept;
    /// Gamma with shape k and scale theta (mean k * theta).
    double gamma(double shape, double scale) noexcept;

private:
    double standard_normal() noexcept;

    std::array<std::uint64_t, 4> s_;
};

}  // namespace nnssim
