#include "orthopara/states.hpp"

#include "orthopara/error.hpp"

#include <cmath>
#include <string>

namespace orthopara {

namespace {

void require_normalized(Complex a, Complex b, const char* what)
{
    const double norm = std::norm(a) + std::norm(b);
    if (!(std::abs(norm - 1.0) <= normalization_tolerance))
        throw Error(ErrorCode::NotNormalized,
                    std::string(what) + " is not normalized: |a|^2 + |b|^2 = " + std::to_string(norm));
}

const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

SpinState::SpinState(Complex up, Complex down) : up_(up), down_(down)
{
    require_normalized(up_, down_, "spin state");
}

SpinState SpinState::up_z() { return {1.0, 0.0}; }
SpinState SpinState::down_z() { return {0.0, 1.0}; }
SpinState SpinState::up_x() { return {inv_sqrt2, inv_sqrt2}; }
SpinState SpinState::down_x() { return {inv_sqrt2, -inv_sqrt2}; }
SpinState SpinState::up_y() { return {inv_sqrt2, Complex(0.0, inv_sqrt2)}; }
SpinState SpinState::down_y() { return {inv_sqrt2, Complex(0.0, -inv_sqrt2)}; }

SuperpositionState::SuperpositionState(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta)
{
    require_normalized(alpha_, beta_, "superposition state");
}

SuperpositionState SuperpositionState::with_global_phase(double phase) const
{
    const auto factor = std::polar(1.0, phase);
    return {alpha_ * factor, beta_ * factor};
}

SuperpositionState prepare_superposition(const SpinState& incident)
{
    return {incident.up(), incident.down()};
}

ParityReport superselection_allowed(int l_ortho, int l_para)
{
    if (l_ortho < 0 || l_para < 0)
        throw Error(ErrorCode::InvalidArgument, "orbital quantum numbers must be non-negative");
    ParityReport report;
    report.two_j_ortho = 2 * l_ortho + 1;
    report.two_j_para = 2 * l_para + 1;
    report.ortho_odd = report.two_j_ortho % 2 != 0;
    report.para_odd = report.two_j_para % 2 != 0;
    report.allowed = report.ortho_odd == report.para_odd;
    return report;
}

SuperpositionState amplitudes_from_weights(double w_or, double phase)
{
    if (!(w_or >= 0.0 && w_or <= 1.0))
        throw Error(ErrorCode::WeightOutOfRange, "ortho weight must lie in [0, 1]");
    return {std::sqrt(w_or), std::polar(std::sqrt(1.0 - w_or), phase)};
}

}  // namespace orthopara
