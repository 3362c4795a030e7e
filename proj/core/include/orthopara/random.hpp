#pragma once

#include <cstdint>

namespace orthopara {

/**
 * SplitMix64 (Steele, Lea & Flood 2014) used as a keyed stream generator.
 *
 * The state advances by the golden-ratio increment 0x9E3779B97F4A7C15 and
 * each output is the MurmurHash3-style finalizer of the state.  Independent
 * streams are keyed by (seed, stream id): the initial state is
 * mix(seed ^ mix(stream * 0x9E3779B97F4A7C15 + 0x632BE59BD9B4E019)).  Only
 * integer arithmetic is involved, so streams are identical on every
 * platform.
 */
class SplitMix64
{
  public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 for_stream(std::uint64_t seed, std::uint64_t stream);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()();

    /// Uniform double in the open interval (0, 1), 53 bits of resolution.
    double uniform();

    static std::uint64_t mix(std::uint64_t z);

  private:
    std::uint64_t state_;
};

/// Poisson variates: sequential inversion for mean < inversion_threshold,
/// Hormann's PTRS transformed rejection (1993) above it.
class PoissonSampler
{
  public:
    static constexpr double inversion_threshold = 30.0;

    /// Throws Error(NegativeRate) for a negative or non-finite mean.
    explicit PoissonSampler(double mean);

    double mean() const { return mean_; }

    std::uint64_t operator()(SplitMix64& rng) const;

  private:
    std::uint64_t sample_inversion(SplitMix64& rng) const;
    std::uint64_t sample_ptrs(SplitMix64& rng) const;

    double mean_;
    double exp_neg_mean_ = 0.0;
    // PTRS constants
    double sqrt_mean_ = 0.0, log_mean_ = 0.0, b_ = 0.0, a_ = 0.0, inv_alpha_ = 0.0, v_r_ = 0.0;
};

}  // namespace orthopara
