#pragma once

#include <cmath>

// Unit convention: every frequency-like quantity inside the library is in
// angular units (rad/s). Interfaces that read or write files use ordinary
// frequency (Hz), seconds and Tesla, converting at the boundary.

namespace nvdd {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// electron gyromagnetic ratio, gamma_e/(2pi) in Hz/T
inline constexpr double gamma_e_hz_per_t = 28.024e9;
inline constexpr double gamma_e_rad = two_pi * gamma_e_hz_per_t;  // rad/s/T

inline constexpr double hbar = 1.05457182e-34;   // J s
inline constexpr double mu0 = 12.56637e-7;       // T m / A

// diamond lattice constant (conventional cubic cell)
inline constexpr double diamond_lattice_a = 3.57e-10;  // m
inline constexpr int atoms_per_conventional_cell = 8;

inline const double theta_magic = std::acos(1.0 / std::sqrt(3.0));

inline double hz_to_rad(double f_hz) { return two_pi * f_hz; }
inline double rad_to_hz(double w_rad) { return w_rad / two_pi; }

}  // namespace nvdd
