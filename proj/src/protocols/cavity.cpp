#include "molsim/protocols/cavity.hpp"

#include <boost/math/tools/minima.hpp>
#include <cmath>

#include "molsim/foundation/errors.hpp"
#include "molsim/kernels/kernels.hpp"

namespace molsim::protocols {
namespace {

kernels::CavityParams params(const CavityInterfaceSpec& s, bool coupled) {
  // gamma only enters through g^2 / (i D + gamma / 2); an uncoupled emitter
  // is given unit width so the shared numerator/denominator never vanish.
  return {s.kappa, s.kappa_in, s.kappa_out,
          coupled ? s.gamma : 1.0, coupled ? s.g : 0.0};
}

struct Point {
  std::complex<double> r, t;
  double loss;
};

Point respond(const kernels::CavityParams& p, double detuning) {
  double d[] = {detuning}, rr[1], ri[1], tr[1], ti[1], loss[1];
  kernels::cavity_response(d, p, {rr, ri, tr, ti, loss});
  return {{rr[0], ri[0]}, {tr[0], ti[0]}, loss[0]};
}

}  // namespace

void CavityInterfaceSpec::validate() const {
  if (!(g >= 0.0 && kappa > 0.0 && kappa_in >= 0.0 && kappa_out >= 0.0 && gamma >= 0.0)) {
    throw InvalidArgument("cavity rates must be >= 0 with kappa > 0");
  }
  if (kappa_in + kappa_out > kappa * (1.0 + 1e-12)) {
    throw InvalidArgument("mirror couplings exceed the total cavity decay");
  }
  if (emitter_coupled && g > 0.0 && !(gamma > 0.0)) {
    throw InvalidArgument("a coupled emitter needs gamma > 0");
  }
}

CavityInterfaceSpec symmetric_cavity(double cooperativity, double kappa, double gamma) {
  if (!(cooperativity >= 0.0 && kappa > 0.0 && gamma > 0.0)) {
    throw InvalidArgument("need cooperativity >= 0 and positive kappa, gamma");
  }
  CavityInterfaceSpec s;
  s.kappa = kappa;
  s.kappa_in = s.kappa_out = 0.5 * kappa;
  s.gamma = gamma;
  s.g = std::sqrt(cooperativity * kappa * gamma / 4.0);
  return s;
}

CavityResponse cavity_response(const CavityInterfaceSpec& spec, const FrequencyGrid& grid) {
  spec.validate();
  const std::size_t n = grid.size();
  CavityResponse out;
  out.detuning = grid.values();
  std::vector<double> rr(n), ri(n), tr(n), ti(n);
  out.loss.resize(n);
  kernels::cavity_response(out.detuning, params(spec, spec.emitter_coupled),
                           {rr, ri, tr, ti, out.loss});
  out.reflection.resize(n);
  out.transmission.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.reflection[i] = {rr[i], ri[i]};
    out.transmission[i] = {tr[i], ti[i]};
  }
  return out;
}

double cavity_cooperativity(const CavityInterfaceSpec& spec) {
  spec.validate();
  if (!(spec.gamma > 0.0)) throw DomainError("cooperativity needs gamma > 0");
  return 4.0 * spec.g * spec.g / (spec.kappa * spec.gamma);
}

double spin_photon_fidelity(const CavityInterfaceSpec& spec) {
  spec.validate();
  const double r_on = std::abs(respond(params(spec, true), 0.0).r);
  const double t_off = std::abs(respond(params(spec, false), 0.0).t);
  const double overlap = 0.5 * (r_on + t_off);
  return overlap * overlap;
}

RabiSplitting vacuum_rabi_splitting(const CavityInterfaceSpec& spec) {
  spec.validate();
  RabiSplitting out;
  if (!spec.emitter_coupled || spec.g == 0.0) return out;
  const double damping = 0.25 * (spec.kappa - spec.gamma);
  const double disc = spec.g * spec.g - damping * damping;
  if (disc > 0.0) out.pole_splitting = 2.0 * std::sqrt(disc);

  const kernels::CavityParams p = params(spec, true);
  const auto neg_t2 = [&](double d) { return -std::norm(respond(p, d).t); };
  const double hi = 2.0 * spec.g + spec.kappa + spec.gamma;
  const auto [peak, value] = boost::math::tools::brent_find_minima(neg_t2, 0.0, hi, 52);
  if (value < neg_t2(0.0) && peak > 0.0) out.peak_splitting = 2.0 * peak;
  return out;
}

}  // namespace molsim::protocols
