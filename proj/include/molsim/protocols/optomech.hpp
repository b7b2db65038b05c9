#pragma once

#include <optional>

namespace molsim::protocols {

struct OptomechParams {
  double g0 = 0.0;           // rad/s
  double omega_v = 0.0;      // rad/s
  double kappa_v = 0.0;      // rad/s
  double gamma0 = 0.0;       // rad/s
  double temperature = 0.0;  // K
  std::optional<double> occupation_override;

  void validate() const;
};

struct OptomechResult {
  double cooperativity = 0.0;
  double occupation = 0.0;
  bool ultra_strong = false;  // g0 / omega_v in [0.1, 0.5]
};

/// C = 4 g0^2 / (n kappa_v gamma0) with n the thermal occupation of omega_v
/// unless overridden. Throws DomainError when n = 0.
OptomechResult optomech_cooperativity(const OptomechParams& params);

}  // namespace molsim::protocols
