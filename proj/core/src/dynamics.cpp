#include "orthopara/dynamics.hpp"

#include "orthopara/constants.hpp"
#include "orthopara/error.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace orthopara {

namespace {

void require_positive_rate(double gamma, const char* what)
{
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw Error(ErrorCode::NonPositiveRate, std::string(what) + " must be positive and finite");
}

// (1 - cos x) / x written as 2 sin^2(x/2) / x to avoid cancellation.
double versine_over_x(double x)
{
    if (std::abs(x) < sinc_series_threshold)
        return x / 2.0 - x * x * x / 24.0;
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s / x;
}

double beat_value(const BeatModel& model, double t)
{
    const auto& state = model.state();
    const double g_or = model.ortho().gamma;
    const double g_pa = model.para().gamma;
    const double ortho_term = state.ortho_weight() * g_or * std::exp(-2.0 * g_or * t);
    const double para_term = state.para_weight() * g_pa * std::exp(-2.0 * g_pa * t);
    const double cross = 2.0 * std::real(model.cross_amplitude() * std::polar(1.0, -model.omega() * t));
    return ortho_term + para_term + cross * std::exp(-(g_or + g_pa) * t);
}

}  // namespace

DecayChannel DecayChannel::make(Branch label, double energy_ev, double gamma)
{
    require_positive_rate(gamma, "decay rate");
    return {label, energy_ev, gamma, std::sqrt(gamma)};
}

BeatModel::BeatModel(SuperpositionState state, DecayChannel ortho, DecayChannel para)
    : state_(state), ortho_(ortho), para_(para),
      omega_(beat_omega_from_levels(ortho.energy_ev, para.energy_ev))
{
    if (ortho_.label != Branch::Ortho || para_.label != Branch::Para)
        throw Error(ErrorCode::InvalidArgument, "beat model needs one ortho and one para channel");
    require_positive_rate(ortho_.gamma, "ortho decay rate");
    require_positive_rate(para_.gamma, "para decay rate");
}

BeatModel BeatModel::with_omega(SuperpositionState state, double gamma_or, double gamma_pa, double omega)
{
    auto model = BeatModel(state, DecayChannel::make(Branch::Ortho, 0.0, gamma_or),
                           DecayChannel::make(Branch::Para, omega * constants::hbar_ev_s, gamma_pa));
    // Keep the requested value exactly; the round trip through eV can move
    // the last bit.
    model.omega_ = omega;
    return model;
}

double BeatModel::weighted_rate() const
{
    return state_.ortho_weight() * ortho_.gamma + state_.para_weight() * para_.gamma;
}

Complex BeatModel::cross_amplitude() const
{
    return std::conj(state_.alpha()) * state_.beta() * ortho_.matrix_element * para_.matrix_element;
}

double BeatModel::interference_coefficient() const
{
    return 2.0 * std::real(cross_amplitude());
}

double sinc(double x)
{
    if (std::abs(x) < sinc_series_threshold) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double instantaneous_rate(const BeatModel& model, double t)
{
    if (!(t >= 0.0))
        throw Error(ErrorCode::NegativeTime, "time must be non-negative");
    const auto phase = std::polar(1.0, -model.omega() * t);
    return model.weighted_rate() + 2.0 * std::real(model.cross_amplitude() * phase);
}

double averaged_rate(const BeatModel& model, double window_T)
{
    if (!(window_T > 0.0))
        throw Error(ErrorCode::NonPositiveWindow, "averaging window must be positive");
    const double x = model.omega() * window_T;
    const Complex c = model.cross_amplitude();
    // (1/T) int_0^T exp(-i w t) dt = sinc(x) - i (1 - cos x) / x
    return model.weighted_rate() + 2.0 * (c.real() * sinc(x) + c.imag() * versine_over_x(x));
}

double lifetime(const SuperpositionState& state, double gamma_or, double gamma_pa)
{
    require_positive_rate(gamma_or, "ortho decay rate");
    require_positive_rate(gamma_pa, "para decay rate");
    return 1.0 / (state.ortho_weight() * gamma_or + state.para_weight() * gamma_pa);
}

std::vector<BeatSample> beat_signal(const BeatModel& model, std::span<const double> t_grid, unsigned workers)
{
    for (double t : t_grid)
        if (!(t >= 0.0))
            throw Error(ErrorCode::NegativeTime, "time grid contains a negative or NaN entry");

    std::vector<BeatSample> out(t_grid.size());
    const auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            out[i] = {t_grid[i], beat_value(model, t_grid[i])};
    };

    workers = std::max(1u, workers);
    if (workers == 1 || t_grid.size() < 2 * workers) {
        fill(0, t_grid.size());
        return out;
    }
    const std::size_t chunk = (t_grid.size() + workers - 1) / workers;
    {
        std::vector<std::jthread> pool;
        for (std::size_t begin = 0; begin < t_grid.size(); begin += chunk)
            pool.emplace_back(fill, begin, std::min(begin + chunk, t_grid.size()));
    }
    return out;
}

double beat_omega_from_levels(double e_or_ev, double e_pa_ev)
{
    return (e_pa_ev - e_or_ev) / constants::hbar_ev_s;
}

}  // namespace orthopara
