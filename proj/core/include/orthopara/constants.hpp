#pragma once

namespace orthopara::constants {

/// Reduced Planck constant in eV s (CODATA 2018).
inline constexpr double hbar_ev_s = 6.582119569e-16;

/// Energy of a 1 cm^-1 photon in eV.
inline constexpr double ev_per_inverse_cm = 1.239841984e-4;

inline constexpr double pi = 3.14159265358979323846;

}  // namespace orthopara::constants
