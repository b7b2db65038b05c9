#include "molsim/foundation/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "molsim/foundation/errors.hpp"
#include "molsim/kernels/kernels.hpp"

namespace molsim::ode {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Workspace {
  explicit Workspace(std::size_t n)
      : k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), stage(n), y_new(n), err(n) {}
  std::vector<double> k1, k2, k3, k4, k5, k6, k7, stage, y_new, err;
};

// stage = y + h * sum(coeff_j * k_j)
void combine(std::vector<double>& out, const std::vector<double>& y, double h,
             std::initializer_list<std::pair<double, const std::vector<double>*>> terms) {
  std::copy(y.begin(), y.end(), out.begin());
  for (const auto& [coeff, k] : terms) {
    if (coeff != 0.0) kernels::axpy(h * coeff, *k, out);
  }
}

double initial_step(const Rhs& rhs, double t0, const std::vector<double>& y0,
                    const std::vector<double>& f0, double span, const Options& opt,
                    Workspace& ws, Stats& stats) {
  const std::size_t n = y0.size();
  double d0 = 0.0, d1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sc = opt.absolute_tolerance + opt.relative_tolerance * std::fabs(y0[i]);
    d0 = std::max(d0, std::fabs(y0[i]) / sc);
    d1 = std::max(d1, std::fabs(f0[i]) / sc);
  }
  double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 * span : 0.01 * d0 / d1;
  h0 = std::min(h0, span);
  combine(ws.stage, y0, h0, {{1.0, &f0}});
  rhs(t0 + h0, ws.stage, ws.k2);
  ++stats.rhs_evaluations;
  double d2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sc = opt.absolute_tolerance + opt.relative_tolerance * std::fabs(y0[i]);
    d2 = std::max(d2, std::fabs(ws.k2[i] - f0[i]) / sc);
  }
  d2 /= h0;
  const double m = std::max(d1, d2);
  const double h1 = m <= 1e-15 ? std::max(1e-6 * span, h0 * 1e-3) : std::pow(0.01 / m, 0.2);
  return std::min({100.0 * h0, h1, span});
}

}  // namespace

Stats integrate(const Rhs& rhs, double t0, std::vector<double>& y,
                std::span<const double> checkpoints, const Observer& observer,
                const Options& opt) {
  Stats stats;
  const std::size_t n = y.size();
  if (checkpoints.empty()) return stats;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < (i == 0 ? t0 : checkpoints[i - 1])) {
      throw InvalidArgument("ode checkpoints must be non-decreasing and >= t0");
    }
  }
  const double t_end = checkpoints.back();
  const double span = t_end - t0;

  Workspace ws(n);
  double t = t0;
  rhs(t, y, ws.k1);
  ++stats.rhs_evaluations;

  double h = 0.0;
  if (span > 0.0) {
    h = opt.initial_step > 0.0 ? opt.initial_step
                               : initial_step(rhs, t0, y, ws.k1, span, opt, ws, stats);
  }
  if (opt.max_step > 0.0) h = std::min(h, opt.max_step);

  std::size_t next = 0;
  while (next < checkpoints.size()) {
    // Report every checkpoint reached at the current time.
    while (next < checkpoints.size() && checkpoints[next] <= t) {
      if (observer) observer(next, checkpoints[next], y);
      ++next;
    }
    if (next == checkpoints.size()) break;

    const double target = checkpoints[next];
    bool lands = false;
    double step = h;
    if (t + step >= target) {
      step = target - t;
      lands = true;
    }
    const double roundoff = 16.0 * std::numeric_limits<double>::epsilon() *
                            std::max({std::fabs(t), std::fabs(target), span});
    if (step < roundoff) {
      if (lands) {
        t = target;
        continue;
      }
      throw StepSizeUnderflow("step size fell below roundoff at t = " + std::to_string(t));
    }
    if (stats.accepted_steps + stats.rejected_steps >= opt.max_steps) {
      throw IntegrationFailure("exceeded the maximum number of integration steps");
    }

    combine(ws.stage, y, step, {{a21, &ws.k1}});
    rhs(t + c2 * step, ws.stage, ws.k2);
    combine(ws.stage, y, step, {{a31, &ws.k1}, {a32, &ws.k2}});
    rhs(t + c3 * step, ws.stage, ws.k3);
    combine(ws.stage, y, step, {{a41, &ws.k1}, {a42, &ws.k2}, {a43, &ws.k3}});
    rhs(t + c4 * step, ws.stage, ws.k4);
    combine(ws.stage, y, step, {{a51, &ws.k1}, {a52, &ws.k2}, {a53, &ws.k3}, {a54, &ws.k4}});
    rhs(t + c5 * step, ws.stage, ws.k5);
    combine(ws.stage, y, step,
            {{a61, &ws.k1}, {a62, &ws.k2}, {a63, &ws.k3}, {a64, &ws.k4}, {a65, &ws.k5}});
    rhs(t + step, ws.stage, ws.k6);
    combine(ws.y_new, y, step,
            {{a71, &ws.k1}, {a73, &ws.k3}, {a74, &ws.k4}, {a75, &ws.k5}, {a76, &ws.k6}});
    const double t_new = lands ? target : t + step;
    rhs(t_new, ws.y_new, ws.k7);
    stats.rhs_evaluations += 6;

    std::fill(ws.err.begin(), ws.err.end(), 0.0);
    kernels::axpy(step * e1, ws.k1, ws.err);
    kernels::axpy(step * e3, ws.k3, ws.err);
    kernels::axpy(step * e4, ws.k4, ws.err);
    kernels::axpy(step * e5, ws.k5, ws.err);
    kernels::axpy(step * e6, ws.k6, ws.err);
    kernels::axpy(step * e7, ws.k7, ws.err);
    const double err = kernels::scaled_max_error(ws.err, y, ws.y_new, opt.absolute_tolerance,
                                                 opt.relative_tolerance);

    const double factor =
        err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    if (err <= 1.0) {
      ++stats.accepted_steps;
      t = t_new;
      std::swap(y, ws.y_new);
      std::swap(ws.k1, ws.k7);
      // A step shortened to land on a checkpoint says nothing about h.
      if (!lands || step >= h) h = step * factor;
    } else {
      ++stats.rejected_steps;
      h = step * std::min(factor, 1.0);
    }
    if (opt.max_step > 0.0) h = std::min(h, opt.max_step);
  }
  return stats;
}

}  // namespace molsim::ode
