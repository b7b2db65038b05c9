#pragma once

#include "molsim/foundation/ode.hpp"

namespace molsim::protocols {

enum class PulseShape { Gaussian };

/// Omega(t) = peak_rabi * exp(-(t - center)^2 / (2 width^2)).
struct Pulse {
  double peak_rabi = 0.0;  // rad/s
  double center = 0.0;     // s
  double width = 0.0;      // s, rms duration
  PulseShape shape = PulseShape::Gaussian;

  double operator()(double t) const noexcept;
};

/// Lambda system |g> = S0 ground, |e> = S1, |v> = one vibron in S0.
/// Signal drives g-e, control drives e-v, Raman detuning `detuning` from |e>.
struct RamanMemorySpec {
  double gamma0 = 0.0;        // rad/s, decay of |e>
  double kappa_v = 1e11;      // rad/s, decay of |v>
  double detuning = 0.0;      // rad/s
  Pulse control;
  Pulse signal;
  double storage_hold = 0.0;  // s

  void validate() const;
};

struct RamanMemoryResult {
  double storage = 0.0;      // |c_v|^2 after the write window, starting from |g>
  double retrieval = 0.0;    // |c_g|^2 after the time-reversed read, starting from |v>
  double hold_factor = 1.0;  // exp(-kappa_v * storage_hold)
  double total = 0.0;        // storage * hold_factor * retrieval
};

/// Integrates the single-excitation amplitude equations over the window
/// [min(0, t_c - 5w), max(t_c + 5w)] of the two pulses, then the same window
/// with both pulses reversed in time.
RamanMemoryResult raman_memory_efficiency(const RamanMemorySpec& spec,
                                          const ode::Options& options = {});

}  // namespace molsim::protocols
