#include "orthopara/random.hpp"

#include "orthopara/error.hpp"

#include <cmath>

namespace orthopara {

namespace {
constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t SplitMix64::mix(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SplitMix64 SplitMix64::for_stream(std::uint64_t seed, std::uint64_t stream)
{
    return SplitMix64(mix(seed ^ mix(stream * golden_gamma + 0x632BE59BD9B4E019ULL)));
}

SplitMix64::result_type SplitMix64::operator()()
{
    state_ += golden_gamma;
    return mix(state_);
}

double SplitMix64::uniform()
{
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

PoissonSampler::PoissonSampler(double mean) : mean_(mean)
{
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw Error(ErrorCode::NegativeRate, "Poisson mean must be non-negative and finite");
    if (mean_ < inversion_threshold) {
        exp_neg_mean_ = std::exp(-mean_);
    }
    else {
        sqrt_mean_ = std::sqrt(mean_);
        log_mean_ = std::log(mean_);
        b_ = 0.931 + 2.53 * sqrt_mean_;
        a_ = -0.059 + 0.02483 * b_;
        inv_alpha_ = 1.1239 + 1.1328 / (b_ - 3.4);
        v_r_ = 0.9277 - 3.6224 / (b_ - 2.0);
    }
}

std::uint64_t PoissonSampler::operator()(SplitMix64& rng) const
{
    if (mean_ == 0.0)
        return 0;
    return mean_ < inversion_threshold ? sample_inversion(rng) : sample_ptrs(rng);
}

std::uint64_t PoissonSampler::sample_inversion(SplitMix64& rng) const
{
    const double u = rng.uniform();
    double p = exp_neg_mean_;
    double cdf = p;
    std::uint64_t k = 0;
    // Rounding can leave cdf a hair below 1; the k cap bounds the walk.
    while (u > cdf && k < 1000) {
        ++k;
        p *= mean_ / static_cast<double>(k);
        cdf += p;
    }
    return k;
}

std::uint64_t PoissonSampler::sample_ptrs(SplitMix64& rng) const
{
    while (true) {
        const double u = rng.uniform() - 0.5;
        const double v = rng.uniform();
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2.0 * a_ / us + b_) * u + mean_ + 0.43);
        if (us >= 0.07 && v <= v_r_)
            return static_cast<std::uint64_t>(k);
        if (k < 0.0 || (us < 0.013 && v > us))
            continue;
        const double lhs = std::log(v) + std::log(inv_alpha_) - std::log(a_ / (us * us) + b_);
        const double rhs = -mean_ + k * log_mean_ - std::lgamma(k + 1.0);
        if (lhs <= rhs)
            return static_cast<std::uint64_t>(k);
    }
}

}  // namespace orthopara
