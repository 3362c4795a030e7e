#include "orthopara/statistics.hpp"

#include "orthopara/error.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <limits>

namespace orthopara {

double chi_square_survival(double statistic, double dof)
{
    if (!(dof > 0.0))
        throw Error(ErrorCode::InvalidArgument, "chi-square needs positive degrees of freedom");
    if (statistic <= 0.0)
        return 1.0;
    if (!std::isfinite(statistic))
        return 0.0;
    return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

std::vector<std::uint64_t> histogram(std::span<const std::uint64_t> counts)
{
    std::vector<std::uint64_t> occurrences;
    for (auto c : counts) {
        if (c >= occurrences.size())
            occurrences.resize(c + 1, 0);
        ++occurrences[c];
    }
    return occurrences;
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts, const CountDistribution& model,
                               double min_expected)
{
    if (counts.empty())
        throw Error(ErrorCode::EmptySample, "chi-square test needs at least one observation");

    const auto observed = histogram(counts);
    const double total = static_cast<double>(counts.size());

    struct Bin
    {
        double expected = 0.0;
        double observed = 0.0;
    };
    std::vector<Bin> bins;
    Bin open;
    double covered = 0.0;
    for (std::size_t n = 0; n < model.pmf.size(); ++n) {
        open.expected += total * model.pmf[n];
        open.observed += n < observed.size() ? static_cast<double>(observed[n]) : 0.0;
        covered += model.pmf[n];
        if (open.expected >= min_expected) {
            bins.push_back(open);
            open = {};
        }
    }
    // Tail beyond the stored support.
    open.expected += total * std::max(0.0, 1.0 - covered);
    for (std::size_t n = model.pmf.size(); n < observed.size(); ++n)
        open.observed += static_cast<double>(observed[n]);
    if (open.expected >= min_expected || bins.empty()) {
        bins.push_back(open);
    }
    else {
        bins.back().expected += open.expected;
        bins.back().observed += open.observed;
    }

    ChiSquareResult result;
    result.bins = bins.size();
    for (const auto& bin : bins) {
        if (bin.expected <= 0.0) {
            if (bin.observed > 0.0)
                result.statistic = std::numeric_limits<double>::infinity();
            continue;
        }
        const double d = bin.observed - bin.expected;
        result.statistic += d * d / bin.expected;
    }
    result.dof = bins.size() > 1 ? bins.size() - 1 : 0;
    result.p_value = result.dof > 0 ? chi_square_survival(result.statistic, static_cast<double>(result.dof)) : 1.0;
    return result;
}

}  // namespace orthopara
