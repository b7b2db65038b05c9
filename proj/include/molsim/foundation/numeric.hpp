#pragma once

#include <functional>

namespace molsim::numeric {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod (61-point) integration of f over [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double relative_tolerance = 1e-12, unsigned max_depth = 20);

/// Bracketing root finder (TOMS 748). Throws DomainError if [lo, hi] does not
/// bracket a sign change.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double relative_tolerance = 1e-14);

}  // namespace molsim::numeric
