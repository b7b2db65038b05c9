#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "molsim/foundation/constants.hpp"
#include "molsim/foundation/grid.hpp"

namespace molsim::vibronic {

struct VibronMode {
  double frequency = 0.0;        // rad/s
  double huang_rhys = 0.0;       // S_i
  double relaxation_rate = 0.0;  // rad/s, FWHM added per quantum
};

enum class SpectralShape { SuperohmicExp };

/// Phonon spectral density
///   J(w) = coupling_weight * w_p * (w / w_p)^3 * exp(-w / w_p),  0 < w <= w_max,
/// so that J(w)/w^2 integrates to coupling_weight (the phonon Huang-Rhys
/// factor) when w_max -> infinity, and the zero-temperature one-phonon
/// sideband J(w)/w^2 peaks at w = w_p.
struct PhononSpectralDensity {
  double coupling_weight = 0.0;
  double peak_frequency = constants::two_pi * 1.75e12;
  double cutoff_frequency = constants::two_pi * 4.5e12;
  SpectralShape shape = SpectralShape::SuperohmicExp;

  double operator()(double omega) const noexcept;

  /// J(w) / w^2, the one-phonon Huang-Rhys density.
  double huang_rhys_density(double omega) const noexcept;

  void validate() const;
};

/// Additive pure-dephasing contribution to the ZPL full width:
/// constant + activated_amplitude * exp(-activation_energy / k_B T).
struct ZplDephasing {
  double constant = 0.0;             // rad/s
  double activated_amplitude = 0.0;  // rad/s
  double activation_energy = 0.0;    // rad/s (hbar omega)

  double rate(double temperature) const;
};

struct VibronicModel {
  double zpl_frequency = 0.0;   // rad/s
  double radiative_rate = 0.0;  // gamma0, rad/s
  std::vector<VibronMode> vibron_modes;
  PhononSpectralDensity phonons;
  ZplDephasing dephasing;
  double temperature = 0.0;     // K

  /// Throws InvalidArgument on non-positive frequencies, negative S, or an
  /// inconsistent spectral density.
  void validate() const;

  /// ZPL full width at half maximum: gamma0 + dephasing(T).
  double zpl_linewidth() const;
};

/// Normalized spectrum on cell-centred grid points: cell i covers
/// [w_i - dw/2, w_i + dw/2] and sum_i intensity_i * dw = 1.
struct Spectrum {
  FrequencyGrid grid;
  std::vector<double> intensity;

  double integral() const;
  /// Integrated intensity of the cells whose span overlaps [lo, hi].
  double integral_over(double lo, double hi) const;
};

/// Zero-temperature displaced-oscillator progression P(m) = e^{-S} S^m / m!.
std::vector<double> franck_condon_progression(double huang_rhys, unsigned max_quanta);

/// sum_i S_i (2 n(w_i) + 1) + int_0^{w_max} J(w)/w^2 (2 n(w) + 1) dw.
/// Throws IntegrationFailure if the phonon quadrature misses 1e-8 relative.
double debye_waller_exponent(const VibronicModel& model);

/// exp(-debye_waller_exponent), in (0, 1].
double debye_waller(const VibronicModel& model);

/// Fraction of emission in the ZPL; equals debye_waller() by construction of
/// emission_spectrum().
double zpl_branching_ratio(const VibronicModel& model);

/// Copy of `model` with every S_i and the phonon coupling weight scaled by a
/// common factor so that debye_waller() == target. Requires target in (0, 1]
/// and some coupling when target < 1.
VibronicModel scale_to_debye_waller(const VibronicModel& model, double target);

struct SpectrumOptions {
  /// Vibronic combination lines lighter than this are dropped.
  double min_line_weight = 1e-14;
  unsigned max_quanta_per_mode = 60;
};

/// Emission spectrum: every vibronic line (including the zero line) carries a
/// Lorentzian zero-phonon component of weight alpha_phonon and a one-phonon
/// sideband of weight 1 - alpha_phonon; line weights multiply over modes.
///
/// Throws GridTooNarrow unless the grid spans
/// [zpl - 1.2 * max vibron frequency, zpl + 5 * gamma0].
Spectrum emission_spectrum(const VibronicModel& model, const FrequencyGrid& grid,
                           const SpectrumOptions& options = {});

/// k_ISC = A exp(-gamma_g * gap). Throws DomainError unless A > 0, gamma_g > 0,
/// gap >= 0.
double energy_gap_isc_rate(double prefactor, double gap_slope, double energy_gap);

/// Two-column CSV `frequency_Hz,normalized_intensity`, intensity per Hz.
std::string to_csv(const Spectrum& spectrum);

}  // namespace molsim::vibronic
