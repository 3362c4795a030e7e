#include "orthopara/counting.hpp"

#include "orthopara/error.hpp"
#include "orthopara/random.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

namespace orthopara {

namespace {

void require_window(double window_T)
{
    if (!(window_T > 0.0) || !std::isfinite(window_T))
        throw Error(ErrorCode::NonPositiveWindow, "observation window must be positive and finite");
}

void require_non_negative_rate(double rate)
{
    if (!(rate >= 0.0) || !std::isfinite(rate))
        throw Error(ErrorCode::NegativeRate, "rate must be non-negative and finite");
}

std::vector<double> poisson_terms(double mean, std::size_t n_max)
{
    std::vector<double> out(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        out[n] = std::exp(log_poisson(n, mean));
    return out;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b, double scale)
{
    std::vector<double> out(a.size(), 0.0);
    for (std::size_t n = 0; n < out.size(); ++n) {
        double sum = 0.0;
        for (std::size_t k = 0; k <= n; ++k)
            sum += scale * a[k] * b[n - k];
        out[n] = sum;
    }
    return out;
}

}  // namespace

double CountDistribution::total_mass() const
{
    return std::accumulate(pmf.begin(), pmf.end(), 0.0);
}

double CountDistribution::mean() const
{
    double m = 0.0;
    for (std::size_t n = 0; n < pmf.size(); ++n)
        m += static_cast<double>(n) * pmf[n];
    return m;
}

double CountDistribution::variance() const
{
    const double m = mean();
    double v = 0.0;
    for (std::size_t n = 0; n < pmf.size(); ++n) {
        const double d = static_cast<double>(n) - m;
        v += d * d * pmf[n];
    }
    return v;
}

std::size_t default_n_max(double mean)
{
    require_non_negative_rate(mean);
    if (mean == 0.0)
        return 0;
    const auto cap = static_cast<std::size_t>(std::floor(10.0 * (mean + 10.0)));
    // P(N > n) = P(n + 1, mean), the regularized lower incomplete gamma.
    const auto tail_above = [&](std::size_t n) {
        return boost::math::gamma_p(static_cast<double>(n) + 1.0, mean);
    };
    if (tail_above(cap) > default_tail_mass)
        return cap;
    std::size_t lo = 0, hi = cap;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (tail_above(mid) <= default_tail_mass)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

double log_poisson(std::uint64_t n, double mean)
{
    if (mean == 0.0)
        return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    const double k = static_cast<double>(n);
    return k * std::log(mean) - mean - std::lgamma(k + 1.0);
}

CountDistribution poisson_pmf(double rate_bar, double window_T, std::size_t n_max)
{
    require_non_negative_rate(rate_bar);
    require_window(window_T);
    return {window_T, poisson_terms(rate_bar * window_T, n_max), DistributionKind::SingleChannel};
}

void CountModel::validate() const
{
    require_non_negative_rate(gamma_or);
    require_non_negative_rate(gamma_pa);
    require_window(window_T);
}

double CountModel::superposition_mean() const
{
    return (state.ortho_weight() * gamma_or + state.para_weight() * gamma_pa) * window_T;
}

std::size_t CountModel::default_support() const
{
    return default_n_max(std::max(ortho_mean(), para_mean()));
}

CountDistribution decompose_superposition_pmf(const CountModel& model, std::optional<std::size_t> n_max)
{
    model.validate();
    const std::size_t support = n_max.value_or(model.default_support());
    const auto ortho = poisson_terms(model.state.ortho_weight() * model.ortho_mean(), support);
    const auto para = poisson_terms(model.state.para_weight() * model.para_mean(), support);
    return {model.window_T, convolve(ortho, para, 1.0), DistributionKind::Superposition};
}

CountDistribution mixture_pmf(const CountModel& model, MixtureVariant variant, std::optional<std::size_t> n_max)
{
    model.validate();
    const double w_or = model.state.ortho_weight();
    const double w_pa = model.state.para_weight();

    if (variant == MixtureVariant::WeightedConvolution) {
        const std::size_t support = n_max.value_or(default_n_max(model.ortho_mean() + model.para_mean()));
        const auto ortho = poisson_terms(model.ortho_mean(), support);
        const auto para = poisson_terms(model.para_mean(), support);
        return {model.window_T, convolve(ortho, para, w_or * w_pa), DistributionKind::Mixture};
    }

    const std::size_t support = n_max.value_or(model.default_support());
    const auto ortho = poisson_terms(model.ortho_mean(), support);
    const auto para = poisson_terms(model.para_mean(), support);
    std::vector<double> pmf(support + 1);
    for (std::size_t n = 0; n <= support; ++n)
        pmf[n] = w_or * ortho[n] + w_pa * para[n];
    return {model.window_T, std::move(pmf), DistributionKind::Mixture};
}

Moments superposition_moments(const CountModel& model)
{
    model.validate();
    const double mean = model.superposition_mean();
    return {mean, mean};
}

Moments mixture_moments(const CountModel& model)
{
    model.validate();
    const double w_or = model.state.ortho_weight();
    const double w_pa = model.state.para_weight();
    const double mu_or = model.ortho_mean();
    const double mu_pa = model.para_mean();
    const double mean = w_or * mu_or + w_pa * mu_pa;
    const double spread = mu_or - mu_pa;
    return {mean, mean + w_or * w_pa * spread * spread};
}

CountSample sample_counts(const CountModel& model, std::size_t n_windows, Hypothesis hypothesis,
                          std::uint64_t seed, unsigned workers)
{
    model.validate();
    if (n_windows == 0)
        throw Error(ErrorCode::ZeroWindows, "at least one observation window is required");

    const double w_or = model.state.ortho_weight();
    const PoissonSampler superposed(model.superposition_mean());
    const PoissonSampler ortho(model.ortho_mean());
    const PoissonSampler para(model.para_mean());

    CountSample sample{seed, std::vector<std::uint64_t>(n_windows)};
    const std::size_t shards = (n_windows + windows_per_shard - 1) / windows_per_shard;

    const auto run_shard = [&](std::size_t shard) {
        auto rng = SplitMix64::for_stream(seed, shard);
        const std::size_t begin = shard * windows_per_shard;
        const std::size_t end = std::min(begin + windows_per_shard, n_windows);
        for (std::size_t i = begin; i < end; ++i) {
            if (hypothesis == Hypothesis::Superposition)
                sample.counts[i] = superposed(rng);
            else
                sample.counts[i] = rng.uniform() < w_or ? ortho(rng) : para(rng);
        }
    };

    workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(shards));
    if (workers == 1) {
        for (std::size_t s = 0; s < shards; ++s)
            run_shard(s);
        return sample;
    }

    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t s = next++; s < shards; s = next++)
                    run_shard(s);
            });
    }
    return sample;
}

}  // namespace orthopara
