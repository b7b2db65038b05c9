#pragma once

#include <complex>
#include <vector>

#include "molsim/foundation/grid.hpp"

namespace molsim::protocols {

/// Two-sided cavity with one embedded two-level emitter. All rates in rad/s;
/// kappa is the total field decay, kappa_in + kappa_out <= kappa.
struct CavityInterfaceSpec {
  double g = 0.0;
  double kappa = 0.0;
  double kappa_in = 0.0;
  double kappa_out = 0.0;
  double gamma = 0.0;
  bool emitter_coupled = true;

  void validate() const;
};

/// Symmetric, lossless-mirror spec with cooperativity 4g^2/(kappa gamma) = c.
CavityInterfaceSpec symmetric_cavity(double cooperativity, double kappa, double gamma);

struct CavityResponse {
  std::vector<double> detuning;
  std::vector<std::complex<double>> reflection;
  std::vector<std::complex<double>> transmission;
  std::vector<double> loss;  // intrinsic mirror and emitter loss, 1 - |r|^2 - |t|^2
};

/// chi = 1 / (i D + kappa/2 + g^2 / (i D + gamma/2)), t = sqrt(kin kout) chi,
/// r = kin chi - 1, with g -> 0 when the emitter is shelved.
CavityResponse cavity_response(const CavityInterfaceSpec& spec, const FrequencyGrid& grid);

/// 4 g^2 / (kappa gamma).
double cavity_cooperativity(const CavityInterfaceSpec& spec);

/// ((|r_on| + |t_off|) / 2)^2 at zero detuning: overlap of the two-branch map
/// (coupled -> reflect, shelved -> transmit) with the ideal one.
double spin_photon_fidelity(const CavityInterfaceSpec& spec);

struct RabiSplitting {
  double pole_splitting = 0.0;  // 2 sqrt(g^2 - (kappa - gamma)^2 / 16), 0 if overdamped
  double peak_splitting = 0.0;  // distance between the two |t|^2 maxima, 0 if single-peaked
};

RabiSplitting vacuum_rabi_splitting(const CavityInterfaceSpec& spec);

}  // namespace molsim::protocols
