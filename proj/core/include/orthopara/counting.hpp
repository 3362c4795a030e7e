#pragma once

#include "orthopara/states.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace orthopara {

enum class DistributionKind { Superposition, Mixture, SingleChannel };
enum class MixtureVariant { WeightedConvolution, Normalized };
enum class Hypothesis { Superposition, Mixture };

/// Photocount probability mass function over n = 0 .. n_max for a window T.
struct CountDistribution
{
    double window_T = 0.0;
    std::vector<double> pmf;
    DistributionKind kind = DistributionKind::SingleChannel;

    std::size_t n_max() const { return pmf.empty() ? 0 : pmf.size() - 1; }
    /// Probability of n, zero outside the stored support.
    double at(std::size_t n) const { return n < pmf.size() ? pmf[n] : 0.0; }
    double total_mass() const;
    double mean() const;
    double variance() const;
    /// Stored support holds at least 1 - tail of the mass.
    bool covers(double tail) const { return total_mass() >= 1.0 - tail; }

    friend bool operator==(const CountDistribution&, const CountDistribution&) = default;
};

inline constexpr double default_tail_mass = 1e-10;

/// Smallest n with P(N <= n) >= 1 - default_tail_mass for a Poisson mean,
/// capped at 10 * (mean + 10).
std::size_t default_n_max(double mean);

/// log of mean^n e^{-mean} / n!; -inf for impossible outcomes.
double log_poisson(std::uint64_t n, double mean);

/// (rate T)^n e^{-rate T} / n!, evaluated in log space.
CountDistribution poisson_pmf(double rate_bar, double window_T, std::size_t n_max);

/// Parameters shared by the two-branch count models.
struct CountModel
{
    SuperpositionState state{1.0, 0.0};
    double gamma_or = 2.0;  // s^-1
    double gamma_pa = 10.0;
    double window_T = 1.0;  // s

    /// Throws Error(NegativeRate) or Error(NonPositiveWindow).
    void validate() const;
    double ortho_mean() const { return gamma_or * window_T; }
    double para_mean() const { return gamma_pa * window_T; }
    /// (|alpha|^2 Gamma_or + |beta|^2 Gamma_pa) T.
    double superposition_mean() const;
    /// Default support covering both branch Poissons.
    std::size_t default_support() const;
};

/// Sum over n_or + n_pa = n of Poisson(|alpha|^2 G_or T)[n_or] *
/// Poisson(|beta|^2 G_pa T)[n_pa].
CountDistribution decompose_superposition_pmf(const CountModel& model, std::optional<std::size_t> n_max = {});

/// WeightedConvolution: sum over n_or + n_pa = n of |alpha|^2 P_or[n_or] |beta|^2
/// P_pa[n_pa]; its total mass is |alpha|^2 |beta|^2 and is left as is.
/// Normalized: |alpha|^2 P_or[n] + |beta|^2 P_pa[n].
CountDistribution mixture_pmf(const CountModel& model, MixtureVariant variant,
                              std::optional<std::size_t> n_max = {});

struct Moments
{
    double mean = 0.0;
    double variance = 0.0;
};

/// Closed-form moments.  The superposition is Poisson (variance = mean);
/// the normalized mixture has variance = mean + |a|^2 |b|^2 (G_or - G_pa)^2 T^2.
Moments superposition_moments(const CountModel& model);
Moments mixture_moments(const CountModel& model);

struct CountSample
{
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> counts;

    friend bool operator==(const CountSample&, const CountSample&) = default;
};

/// Windows are generated in fixed blocks of this size; block k draws from
/// SplitMix64::for_stream(seed, k).
inline constexpr std::size_t windows_per_shard = 4096;

/// One count per observation window.  Superposition: Poisson(Gbar T).
/// Mixture: choose ortho with probability |alpha|^2, then Poisson of that
/// branch.  Output is identical for any worker count.
CountSample sample_counts(const CountModel& model, std::size_t n_windows, Hypothesis hypothesis,
                          std::uint64_t seed, unsigned workers = 1);

}  // namespace orthopara
