#include "nnssim/random.hpp"

#include <cmath>
#include <numbers>

namespace nnssim {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) noexcept {
    SplitMix64 seeder(seed);
    for (auto& word : s_) word = seeder.next();
}

Xoshiro256StarStar::result_type Xoshiro256StarStar::operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256StarStar::uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double Xoshiro256StarStar::standard_normal() noexcept {
    // 1 - u lies in (0, 1], keeping the log finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Xoshiro256StarStar::normal(double mean, double std_dev) noexcept {
    return mean + std_dev * standard_normal();
}

double Xoshiro256StarStar::log_normal(double mean_log, double sigma_log) noexcept {
    return std::exp(normal(mean_log, sigma_log));
}

double Xoshiro256StarStar::gamma(double shape, double scale) noexcept {
    if (shape < 1.0) {
        const double boosted = gamma(shape + 1.0, 1.0);
        const double u = 1.0 - uniform();
        return scale * boosted * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        const double x = standard_normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        const double u = 1.0 - uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
}

}  // namespace nnssim
