#include "molsim/foundation/numeric.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>

#include "molsim/foundation/errors.hpp"

namespace molsim::numeric {

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double relative_tolerance, unsigned max_depth) {
  if (a == b) return {};
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, max_depth, relative_tolerance, &error);
  return {value, error};
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double relative_tolerance) {
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw DomainError("find_root: interval does not bracket a root");
  }
  std::uintmax_t iterations = 200;
  const auto tol = [relative_tolerance](double x, double y) {
    return std::fabs(x - y) <= relative_tolerance * std::max(std::fabs(x), std::fabs(y));
  };
  const auto [left, right] =
      boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iterations);
  return 0.5 * (left + right);
}

}  // namespace molsim::numeric
