#include "orthopara/discrimination.hpp"

#include "orthopara/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orthopara {

namespace {

double log_sum_exp(double a, double b)
{
    if (a == -std::numeric_limits<double>::infinity())
        return b;
    if (b == -std::numeric_limits<double>::infinity())
        return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double log_weighted(double weight, double log_p)
{
    return weight > 0.0 ? std::log(weight) + log_p : -std::numeric_limits<double>::infinity();
}

}  // namespace

DiscriminationReport discriminate(const CountSample& sample, const CountModel& model,
                                  std::optional<std::size_t> n_max)
{
    if (sample.counts.empty())
        throw Error(ErrorCode::EmptySample, "cannot discriminate on an empty sample");
    model.validate();

    const std::size_t support = n_max.value_or(model.default_support());
    const auto superposed = decompose_superposition_pmf(model, support);
    const auto mixed = mixture_pmf(model, MixtureVariant::Normalized, support);
    if (!superposed.covers(default_tail_mass) || !mixed.covers(default_tail_mass))
        throw Error(ErrorCode::InsufficientSupport,
                    "n_max = " + std::to_string(support) + " leaves more than 1e-10 of the mass uncovered");

    DiscriminationReport report;
    report.windows = sample.counts.size();
    report.n_max = support;

    double max_gap = 0.0;
    for (std::size_t n = 0; n <= support; ++n)
        max_gap = std::max(max_gap, std::abs(superposed.pmf[n] - mixed.pmf[n]));
    report.degenerate_model = max_gap < degenerate_tolerance;

    const double w_or = model.state.ortho_weight();
    const double w_pa = model.state.para_weight();
    const double mu_sup = model.superposition_mean();
    double llr = 0.0;
    for (auto n : sample.counts) {
        const double log_sup = log_poisson(n, mu_sup);
        const double log_mix = log_sum_exp(log_weighted(w_or, log_poisson(n, model.ortho_mean())),
                                           log_weighted(w_pa, log_poisson(n, model.para_mean())));
        if (std::isinf(log_sup) && std::isinf(log_mix))
            continue;  // impossible under both
        llr += log_sup - log_mix;
    }
    report.log_likelihood_ratio = llr;

    report.chi2_superposition = chi_square_gof(sample.counts, superposed);
    report.chi2_mixture = chi_square_gof(sample.counts, mixed);

    if (report.degenerate_model || std::abs(llr) < verdict_threshold)
        report.verdict = Verdict::Inconclusive;
    else
        report.verdict = llr > 0.0 ? Verdict::Superposition : Verdict::Mixture;
    return report;
}

}  // namespace orthopara
