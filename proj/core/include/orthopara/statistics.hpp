#pragma once

#include "orthopara/counting.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace orthopara {

struct ChiSquareResult
{
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
    std::size_t bins = 0;
};

/// Upper tail of the chi-square distribution, Q(dof/2, x/2).
double chi_square_survival(double statistic, double dof);

/// occurrences[n] = number of windows with count n.
std::vector<std::uint64_t> histogram(std::span<const std::uint64_t> counts);

/// Goodness of fit of observed counts against a pmf.  Adjacent n are pooled
/// left to right until each bin expects at least `min_expected` windows; the
/// final bin absorbs the tail beyond the stored support (and is merged into
/// its neighbour if it falls short).  dof = bins - 1.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts, const CountDistribution& model,
                               double min_expected = 5.0);

}  // namespace orthopara
