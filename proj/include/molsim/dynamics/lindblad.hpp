#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "molsim/foundation/ode.hpp"

namespace molsim::dynamics {

using Matrix = Eigen::MatrixXcd;

struct CollapseChannel {
  Matrix op;
  double rate = 0.0;  // rad/s
};

/// d rho/dt = -i[H, rho] + sum_k rate_k (L rho L^† - {L^† L, rho}/2).
struct OpenSystem {
  Matrix hamiltonian;  // rad/s
  std::vector<CollapseChannel> channels;

  Eigen::Index dimension() const noexcept { return hamiltonian.rows(); }

  /// Throws InvalidArgument on dimension mismatch or negative rates and
  /// NotHermitian on a non-Hermitian Hamiltonian.
  void validate() const;
};

/// Superoperator acting on column-stacked vec(rho), dimension d^2 x d^2.
Matrix liouvillian(const OpenSystem& system);

/// Throws InvalidState unless rho is Hermitian (1e-9), has unit trace (1e-9)
/// and no eigenvalue below -1e-9.
void check_density_matrix(const Matrix& rho);

struct EvolveOptions {
  ode::Options ode{};
};

/// rho(t) at each requested time (seconds, non-decreasing, >= 0), starting
/// from rho0 at t = 0.
std::vector<Matrix> evolve(const OpenSystem& system, const Matrix& rho0,
                           std::span<const double> times, const EvolveOptions& options = {});

/// Unique stationary state from the vectorized Liouvillian with the trace
/// condition appended. Throws DegenerateSteadyState when the null space is not
/// one-dimensional.
Matrix steady_state(const OpenSystem& system);

/// Normalized g2(tau) = Tr[A^†A rho_c(tau)] / <A^†A>_ss with
/// rho_c(0) = A rho_ss A^† / <A^†A>_ss (quantum regression).
/// Throws InvalidState when the steady-state emission <A^†A> vanishes.
std::vector<double> g2_correlation(const OpenSystem& system, const Matrix& emission,
                                   std::span<const double> taus,
                                   const EvolveOptions& options = {});

double expectation(const Matrix& observable, const Matrix& rho);

/// Driven two-level emitter in the rotating frame, basis {|g>, |e>}:
/// H = -detuning |e><e| + (rabi / 2) sigma_x, decay into |g> and optional pure
/// dephasing on |e><e|.
struct TwoLevelEmitter {
  double decay = 0.0;      // gamma0, rad/s
  double rabi = 0.0;       // Omega, rad/s
  double detuning = 0.0;   // Delta, rad/s
  double dephasing = 0.0;  // rad/s
};

OpenSystem two_level_system(const TwoLevelEmitter& emitter);
Matrix lowering_operator();  // sigma_- = |g><e|

/// Mean and standard error of an observable over seeded quantum-jump
/// trajectories.
struct JumpEstimate {
  std::vector<double> mean;
  std::vector<double> standard_error;
  std::size_t trajectories = 0;
  std::size_t jumps = 0;
};

/// Monte Carlo unravelling of the master equation. Initial pure states are
/// drawn from the eigen-decomposition of rho0. Deterministic for a given seed.
JumpEstimate quantum_jump_expectation(const OpenSystem& system, const Matrix& rho0,
                                      const Matrix& observable, std::span<const double> times,
                                      std::size_t trajectories, std::uint64_t seed);

}  // namespace molsim::dynamics
