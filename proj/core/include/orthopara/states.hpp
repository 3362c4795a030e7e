#pragma once

#include <complex>

namespace orthopara {

using Complex = std::complex<double>;

/// Tolerance on |a|^2 + |b|^2 = 1 for spin and superposition amplitudes.
inline constexpr double normalization_tolerance = 1e-12;

/// Spin state of the incident electron in the z basis.
class SpinState
{
  public:
    /// Throws Error(NotNormalized) if |up|^2 + |down|^2 deviates from 1.
    SpinState(Complex up, Complex down);

    static SpinState up_z();
    static SpinState down_z();
    static SpinState up_x();  // (|up> + |down>) / sqrt 2
    static SpinState down_x();
    static SpinState up_y();  // (|up> + i |down>) / sqrt 2
    static SpinState down_y();

    Complex up() const { return up_; }
    Complex down() const { return down_; }

    friend bool operator==(const SpinState&, const SpinState&) = default;

  private:
    Complex up_;
    Complex down_;
};

/// alpha |He_or> + beta |He_pa>.
class SuperpositionState
{
  public:
    /// Throws Error(NotNormalized) if |alpha|^2 + |beta|^2 deviates from 1.
    SuperpositionState(Complex alpha, Complex beta);

    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }
    double ortho_weight() const { return std::norm(alpha_); }
    double para_weight() const { return std::norm(beta_); }

    /// Multiply both amplitudes by exp(i phase).
    SuperpositionState with_global_phase(double phase) const;

    friend bool operator==(const SuperpositionState&, const SuperpositionState&) = default;

  private:
    Complex alpha_;
    Complex beta_;
};

/// Capture of the incident electron by an He+ ion whose bound electron is
/// spin up along z.  The capture is linear: spin up gives ortho, spin down
/// gives para, so the amplitudes carry over unchanged.
SuperpositionState prepare_superposition(const SpinState& incident);

struct ParityReport
{
    bool allowed = true;
    int two_j_ortho = 1;  // 2J = 2l + 1 for l coupled with s = 1/2
    int two_j_para = 1;
    bool ortho_odd = true;
    bool para_odd = true;
};

/// (-1)^{2J} superselection check for the two captured-electron branches.
ParityReport superselection_allowed(int l_ortho, int l_para);

/// alpha = sqrt(w_or), beta = sqrt(1 - w_or) exp(i phase).
SuperpositionState amplitudes_from_weights(double w_or, double phase = 0.0);

}  // namespace orthopara
