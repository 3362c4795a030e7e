#pragma once

#include "orthopara/counting.hpp"
#include "orthopara/statistics.hpp"

#include <cmath>
#include <optional>

namespace orthopara {

enum class Verdict { Superposition, Mixture, Inconclusive };

struct DiscriminationReport
{
    /// sum over windows of log(P_sup[n] / P_mix[n]), normalized mixture.
    double log_likelihood_ratio = 0.0;
    ChiSquareResult chi2_superposition;
    ChiSquareResult chi2_mixture;
    Verdict verdict = Verdict::Inconclusive;
    /// The two pmfs agree within degenerate_tolerance everywhere.
    bool degenerate_model = false;
    std::size_t windows = 0;
    std::size_t n_max = 0;
};

/// |LLR| below this is inconclusive.
inline const double verdict_threshold = std::log(20.0);
inline constexpr double degenerate_tolerance = 1e-12;

/// Throws Error(EmptySample) on an empty sample and
/// Error(InsufficientSupport) when an explicit n_max leaves more than
/// default_tail_mass outside either pmf.
DiscriminationReport discriminate(const CountSample& sample, const CountModel& model,
                                  std::optional<std::size_t> n_max = {});

}  // namespace orthopara
