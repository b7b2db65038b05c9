#include "molsim/protocols/optomech.hpp"

#include <cmath>

#include "molsim/foundation/errors.hpp"
#include "molsim/foundation/units.hpp"

namespace molsim::protocols {

void OptomechParams::validate() const {
  if (!(g0 >= 0.0)) throw InvalidArgument("g0 must be >= 0");
  if (!(omega_v > 0.0 && kappa_v > 0.0 && gamma0 > 0.0)) {
    throw InvalidArgument("omega_v, kappa_v and gamma0 must be > 0");
  }
  if (!(temperature >= 0.0)) throw InvalidArgument("temperature must be >= 0");
  if (occupation_override && !(*occupation_override >= 0.0)) {
    throw InvalidArgument("occupation override must be >= 0");
  }
}

OptomechResult optomech_cooperativity(const OptomechParams& p) {
  p.validate();
  OptomechResult out;
  out.occupation = p.occupation_override ? *p.occupation_override
                                         : bose_occupation(p.omega_v, p.temperature);
  if (!(out.occupation > 0.0)) {
    throw DomainError("thermal occupation is zero; cooperativity diverges");
  }
  out.cooperativity = 4.0 * p.g0 * p.g0 / (out.occupation * p.kappa_v * p.gamma0);
  const double ratio = p.g0 / p.omega_v;
  out.ultra_strong = ratio >= 0.1 && ratio <= 0.5;
  return out;
}

}  // namespace molsim::protocols
