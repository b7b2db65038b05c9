#pragma once

#include <numbers>

// CODATA 2018 recommended values (SI). Exact where the 2019 SI redefinition
// fixes them.
namespace molsim::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double planck = 6.62607015e-34;               // J s (exact)
inline constexpr double hbar = planck / two_pi;                // J s
inline constexpr double elementary_charge = 1.602176634e-19;   // C (exact)
inline constexpr double boltzmann = 1.380649e-23;              // J/K (exact)
inline constexpr double speed_of_light = 299792458.0;          // m/s (exact)
inline constexpr double bohr_magneton = 9.2740100783e-24;      // J/T
inline constexpr double proton_gyromagnetic_ratio = 2.6752218744e8;  // rad/(s T)
inline constexpr double electron_g_factor = 2.00231930436256;  // |g_e|

/// Default electron g-factor for molecular triplets.
inline constexpr double default_g_electron = 2.0023;

}  // namespace molsim::constants
