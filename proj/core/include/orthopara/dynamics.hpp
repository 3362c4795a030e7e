#pragma once

#include "orthopara/states.hpp"

#include <span>
#include <vector>

namespace orthopara {

enum class Branch { Ortho, Para };

/// Decay data for one branch of the superposition.  Matrix elements are
/// taken real and non-negative, M = sqrt(gamma).
struct DecayChannel
{
    Branch label = Branch::Ortho;
    double energy_ev = 0.0;
    double gamma = 0.0;           // s^-1
    double matrix_element = 0.0;  // s^-1/2

    /// Throws Error(NonPositiveRate) unless gamma > 0.
    static DecayChannel make(Branch label, double energy_ev, double gamma);
};

/// The two-channel decay system.  omega = (E_pa - E_or) / hbar always.
class BeatModel
{
  public:
    BeatModel(SuperpositionState state, DecayChannel ortho, DecayChannel para);

    /// Build a model with a prescribed beat frequency.  The ortho level is
    /// placed at 0 eV and the para level at hbar * omega.
    static BeatModel with_omega(SuperpositionState state, double gamma_or, double gamma_pa, double omega);

    const SuperpositionState& state() const { return state_; }
    const DecayChannel& ortho() const { return ortho_; }
    const DecayChannel& para() const { return para_; }
    double omega() const { return omega_; }

    /// |alpha|^2 Gamma_or + |beta|^2 Gamma_pa.
    double weighted_rate() const;

    /// conj(alpha) beta M_or M_pa, the coefficient of exp(-i omega t) in the
    /// rate.
    Complex cross_amplitude() const;

    /// Gamma_ab = 2 Re(conj(alpha) beta) M_or M_pa.
    double interference_coefficient() const;

  private:
    SuperpositionState state_;
    DecayChannel ortho_;
    DecayChannel para_;
    double omega_;
};

/// sin(x) / x, with a Taylor branch for |x| < sinc_series_threshold.
double sinc(double x);
inline constexpr double sinc_series_threshold = 1e-6;

/// Gamma(t) = |alpha|^2 Gamma_or + |beta|^2 Gamma_pa
///            + 2 Re(conj(alpha) beta M_or M_pa exp(-i omega t)).
double instantaneous_rate(const BeatModel& model, double t);

/// (1/T) * integral of instantaneous_rate over [0, T], closed form.  For
/// real amplitudes the interference part is Gamma_ab sin(omega T)/(omega T).
double averaged_rate(const BeatModel& model, double window_T);

/// 1 / (|alpha|^2 Gamma_or + |beta|^2 Gamma_pa).
double lifetime(const SuperpositionState& state, double gamma_or, double gamma_pa);

struct BeatSample
{
    double t = 0.0;
    double value = 0.0;

    friend bool operator==(const BeatSample&, const BeatSample&) = default;
};

/// Transition probability density on a caller-supplied time grid:
///   A_or^2 e^{-2 G_or t} + A_pa^2 e^{-2 G_pa t}
///   + 2 A_or A_pa e^{-(G_or + G_pa) t} cos(omega t)
/// with A_or = alpha M_or and A_pa = beta M_pa.  For complex amplitudes the
/// cross term is 2 Re(conj(alpha) beta e^{-i omega t}) M_or M_pa e^{...}.
/// Points are independent, so the result does not depend on `workers`.
std::vector<BeatSample> beat_signal(const BeatModel& model, std::span<const double> t_grid,
                                    unsigned workers = 1);

/// (e_pa - e_or) / hbar in rad/s, signed.
double beat_omega_from_levels(double e_or_ev, double e_pa_ev);

}  // namespace orthopara
