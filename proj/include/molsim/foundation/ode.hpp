#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace molsim::ode {

/// dy/dt = f(t, y). The callee writes the full derivative into `dydt`.
using Rhs = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

/// Called once per checkpoint with the checkpoint index, time and state.
using Observer = std::function<void(std::size_t index, double t, std::span<const double> y)>;

struct Options {
  double relative_tolerance = 1e-9;
  double absolute_tolerance = 1e-12;
  double initial_step = 0.0;  // 0: estimated from the RHS
  double max_step = 0.0;      // 0: unbounded
  std::size_t max_steps = 50'000'000;
};

struct Stats {
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  std::size_t rhs_evaluations = 0;
};

/// Adaptive Dormand-Prince 5(4) integration. The state `y` is advanced from
/// t0 through every checkpoint in `checkpoints` (non-decreasing, >= t0); steps
/// are shortened so each checkpoint is hit exactly. On return `y` holds the
/// state at the last checkpoint.
///
/// Error control uses the max norm of err_i / (atol + rtol * max(|y_i|, |y_new_i|)).
/// Throws StepSizeUnderflow if the step collapses below roundoff of t, and
/// IntegrationFailure if max_steps is exceeded.
Stats integrate(const Rhs& rhs, double t0, std::vector<double>& y,
                std::span<const double> checkpoints, const Observer& observer,
                const Options& options = {});

}  // namespace molsim::ode
