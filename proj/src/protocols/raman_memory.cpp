#include "molsim/protocols/raman_memory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "molsim/foundation/errors.hpp"

namespace molsim::protocols {
namespace {

using cd = std::complex<double>;

struct Window {
  double start, stop;
};

// Amplitudes (c_g, c_e, c_v) stored as six reals. i dc/dt = H(t) c with
//   H = [[0, Os/2, 0], [Os/2, -D - i g0/2, Oc/2], [0, Oc/2, -i kv/2]].
void amplitude_rhs(const RamanMemorySpec& spec, double os, double oc, std::span<const double> y,
                   std::span<double> dydt) {
  const cd g(y[0], y[1]), e(y[2], y[3]), v(y[4], y[5]);
  const cd mi(0.0, -1.0);
  const cd dg = mi * (0.5 * os * e);
  const cd de = mi * (0.5 * os * g + cd(-spec.detuning, -0.5 * spec.gamma0) * e + 0.5 * oc * v);
  const cd dv = mi * (0.5 * oc * e + cd(0.0, -0.5 * spec.kappa_v) * v);
  dydt[0] = dg.real();
  dydt[1] = dg.imag();
  dydt[2] = de.real();
  dydt[3] = de.imag();
  dydt[4] = dv.real();
  dydt[5] = dv.imag();
}

std::vector<double> propagate(const RamanMemorySpec& spec, const Window& w, bool reversed,
                              std::vector<double> y, const ode::Options& options) {
  const auto rhs = [&](double t, std::span<const double> state, std::span<double> dydt) {
    const double tau = reversed ? w.start + w.stop - t : t;
    amplitude_rhs(spec, spec.signal(tau), spec.control(tau), state, dydt);
  };
  const double checkpoint[] = {w.stop};
  ode::Options opt = options;
  // Never step over a pulse.
  const double shortest = std::min(spec.control.width, spec.signal.width);
  opt.max_step = opt.max_step > 0.0 ? std::min(opt.max_step, shortest) : shortest;
  ode::integrate(rhs, w.start, y, checkpoint, nullptr, opt);
  for (double v : y) {
    if (!std::isfinite(v)) throw IntegrationFailure("Raman amplitude equations diverged");
  }
  return y;
}

}  // namespace

double Pulse::operator()(double t) const noexcept {
  if (peak_rabi == 0.0) return 0.0;
  const double x = (t - center) / width;
  return peak_rabi * std::exp(-0.5 * x * x);
}

void RamanMemorySpec::validate() const {
  if (!(gamma0 >= 0.0)) throw InvalidArgument("gamma0 must be >= 0");
  if (!(kappa_v >= 0.0)) throw InvalidArgument("kappa_v must be >= 0");
  if (!std::isfinite(detuning)) throw InvalidArgument("detuning must be finite");
  if (!(control.width > 0.0) || !(signal.width > 0.0)) {
    throw InvalidArgument("pulse widths must be > 0");
  }
  if (!std::isfinite(control.peak_rabi) || !std::isfinite(signal.peak_rabi) ||
      !std::isfinite(control.center) || !std::isfinite(signal.center)) {
    throw InvalidArgument("pulse parameters must be finite");
  }
  if (!(storage_hold >= 0.0)) throw InvalidArgument("storage hold must be >= 0");
}

RamanMemoryResult raman_memory_efficiency(const RamanMemorySpec& spec,
                                          const ode::Options& options) {
  spec.validate();
  const Window w{
      std::min({0.0, spec.control.center - 5.0 * spec.control.width,
                spec.signal.center - 5.0 * spec.signal.width}),
      std::max(spec.control.center + 5.0 * spec.control.width,
               spec.signal.center + 5.0 * spec.signal.width)};

  RamanMemoryResult out;
  const std::vector<double> written =
      propagate(spec, w, false, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0}, options);
  out.storage = std::clamp(written[4] * written[4] + written[5] * written[5], 0.0, 1.0);

  const std::vector<double> read =
      propagate(spec, w, true, {0.0, 0.0, 0.0, 0.0, 1.0, 0.0}, options);
  out.retrieval = std::clamp(read[0] * read[0] + read[1] * read[1], 0.0, 1.0);

  out.hold_factor = std::exp(-spec.kappa_v * spec.storage_hold);
  out.total = out.storage * out.hold_factor * out.retrieval;
  return out;
}

}  // namespace molsim::protocols
