#include "molsim/dynamics/lindblad.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "molsim/foundation/errors.hpp"
#include "molsim/kernels/kernels.hpp"

namespace molsim::dynamics {
namespace {

using cd = std::complex<double>;

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix unvec(const cd* data, Eigen::Index d) {
  return Eigen::Map<const Matrix>(data, d, d);
}

double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// exp(-i H_eff s) from a cached eigen-decomposition, or the Pade exponential
// when H_eff is too close to defective.
class Propagator {
 public:
  explicit Propagator(const Matrix& h_eff) : h_eff_(h_eff) {
    Eigen::ComplexEigenSolver<Matrix> solver(h_eff);
    if (solver.info() == Eigen::Success) {
      vectors_ = solver.eigenvectors();
      Eigen::FullPivLU<Matrix> lu(vectors_);
      if (lu.isInvertible()) {
        inverse_ = lu.inverse();
        const double cond = vectors_.norm() * inverse_.norm();
        diagonal_ = cond < 1e8;
        values_ = solver.eigenvalues();
      }
    }
  }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& psi, double s) const {
    if (diagonal_) {
      Eigen::VectorXcd c = inverse_ * psi;
      for (Eigen::Index i = 0; i < c.size(); ++i) c(i) *= std::exp(cd(0.0, -1.0) * values_(i) * s);
      return vectors_ * c;
    }
    return pade_exp(cd(0.0, -s) * h_eff_) * psi;
  }

 private:
  static Matrix pade_exp(const Matrix& a) {
    // Scaling and squaring with a degree-6 Pade approximant.
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(std::max(norm, 1e-300) / 0.5))));
    const Matrix x = a / std::ldexp(1.0, squarings);
    static constexpr double c[] = {1.0, 0.5, 5.0 / 44, 1.0 / 66, 1.0 / 792, 1.0 / 15840,
                                   1.0 / 665280};
    const Matrix id = Matrix::Identity(a.rows(), a.cols());
    Matrix power = id, num = id * c[0], den = id * c[0];
    for (int k = 1; k <= 6; ++k) {
      power = power * x;
      num += c[k] * power;
      den += ((k % 2) ? -c[k] : c[k]) * power;
    }
    Matrix e = den.partialPivLu().solve(num);
    for (int i = 0; i < squarings; ++i) e = e * e;
    return e;
  }

  Matrix h_eff_;
  Matrix vectors_, inverse_;
  Eigen::VectorXcd values_;
  bool diagonal_ = false;
};

}  // namespace

void OpenSystem::validate() const {
  const Eigen::Index d = hamiltonian.rows();
  if (d == 0 || hamiltonian.cols() != d) throw InvalidArgument("Hamiltonian must be square");
  if (max_abs(hamiltonian - hamiltonian.adjoint()) > 1e-10 * std::max(1.0, max_abs(hamiltonian))) {
    throw NotHermitian("Hamiltonian is not Hermitian");
  }
  for (const CollapseChannel& c : channels) {
    if (c.op.rows() != d || c.op.cols() != d) {
      throw InvalidArgument("collapse operator dimension does not match the Hamiltonian");
    }
    if (!(c.rate >= 0.0)) throw InvalidArgument("collapse rates must be >= 0");
  }
}

Matrix liouvillian(const OpenSystem& system) {
  system.validate();
  const Eigen::Index d = system.dimension();
  const Matrix id = Matrix::Identity(d, d);
  const cd i(0.0, 1.0);
  Matrix l = -i * (kron(id, system.hamiltonian) - kron(system.hamiltonian.transpose(), id));
  for (const CollapseChannel& c : system.channels) {
    if (c.rate == 0.0) continue;
    const Matrix ldl = c.op.adjoint() * c.op;
    l += c.rate * (kron(c.op.conjugate(), c.op) - 0.5 * kron(id, ldl) -
                   0.5 * kron(ldl.transpose(), id));
  }
  return l;
}

void check_density_matrix(const Matrix& rho) {
  if (rho.rows() == 0 || rho.rows() != rho.cols()) {
    throw InvalidState("density matrix must be square and non-empty");
  }
  if (max_abs(rho - rho.adjoint()) > 1e-9) throw InvalidState("density matrix is not Hermitian");
  if (std::abs(rho.trace() - cd(1.0, 0.0)) > 1e-9) {
    throw InvalidState("density matrix trace differs from 1");
  }
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-9) {
    throw InvalidState("density matrix has a negative eigenvalue");
  }
}

std::vector<Matrix> evolve(const OpenSystem& system, const Matrix& rho0,
                           std::span<const double> times, const EvolveOptions& options) {
  system.validate();
  check_density_matrix(rho0);
  const Eigen::Index d = system.dimension();
  if (rho0.rows() != d) throw InvalidState("density matrix dimension does not match the system");
  for (double t : times) {
    if (!(t >= 0.0)) throw InvalidArgument("evolution times must be >= 0");
  }

  const Matrix l = liouvillian(system);
  const std::size_t n = static_cast<std::size_t>(d * d);
  const std::span<const cd> lspan(l.data(), n * n);
  ode::Rhs rhs = [&](double, std::span<const double> y, std::span<double> dydt) {
    kernels::zgemv(lspan, {reinterpret_cast<const cd*>(y.data()), n},
                   {reinterpret_cast<cd*>(dydt.data()), n});
  };

  std::vector<double> y(2 * n);
  std::copy_n(reinterpret_cast<const double*>(rho0.data()), 2 * n, y.begin());
  std::vector<Matrix> out(times.size());
  ode::integrate(
      rhs, 0.0, y, times,
      [&](std::size_t k, double, std::span<const double> state) {
        out[k] = unvec(reinterpret_cast<const cd*>(state.data()), d);
      },
      options.ode);
  return out;
}

Matrix steady_state(const OpenSystem& system) {
  const Matrix l = liouvillian(system);
  const Eigen::Index d = system.dimension();
  const Eigen::Index n = d * d;
  const double scale = std::max(max_abs(l), 1e-300);
  Matrix a = Matrix::Zero(n + 1, n);
  a.topRows(n) = l / scale;
  for (Eigen::Index k = 0; k < d; ++k) a(n, k + k * d) = 1.0;
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n + 1);
  b(n) = 1.0;

  Eigen::ColPivHouseholderQR<Matrix> qr(a);
  qr.setThreshold(1e-10);
  if (qr.rank() < n) throw DegenerateSteadyState("Liouvillian null space is not one-dimensional");
  const Eigen::VectorXcd x = qr.solve(b);
  if ((a * x - b).cwiseAbs().maxCoeff() > 1e-8) {
    throw DegenerateSteadyState("no trace-one stationary state satisfies the Liouvillian");
  }
  Matrix rho = unvec(x.data(), d);
  rho = 0.5 * (rho + rho.adjoint());
  return rho / rho.trace();
}

double expectation(const Matrix& observable, const Matrix& rho) {
  return (observable * rho).trace().real();
}

std::vector<double> g2_correlation(const OpenSystem& system, const Matrix& emission,
                                   std::span<const double> taus, const EvolveOptions& options) {
  const Matrix rho_ss = steady_state(system);
  const Matrix number = emission.adjoint() * emission;
  const double mean = expectation(number, rho_ss);
  if (!(mean > 1e-300)) throw InvalidState("steady-state emission rate vanishes");
  Matrix conditioned = emission * rho_ss * emission.adjoint() / mean;
  conditioned = 0.5 * (conditioned + conditioned.adjoint());
  conditioned /= conditioned.trace();
  const std::vector<Matrix> states = evolve(system, conditioned, taus, options);
  std::vector<double> g2(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) g2[k] = expectation(number, states[k]) / mean;
  return g2;
}

OpenSystem two_level_system(const TwoLevelEmitter& e) {
  if (!(e.decay >= 0.0) || !(e.dephasing >= 0.0)) {
    throw InvalidArgument("decay and dephasing rates must be >= 0");
  }
  OpenSystem s;
  s.hamiltonian = Matrix::Zero(2, 2);
  s.hamiltonian(1, 1) = -e.detuning;
  s.hamiltonian(0, 1) = s.hamiltonian(1, 0) = 0.5 * e.rabi;
  s.channels.push_back({lowering_operator(), e.decay});
  if (e.dephasing > 0.0) {
    Matrix p = Matrix::Zero(2, 2);
    p(1, 1) = 1.0;
    s.channels.push_back({p, e.dephasing});
  }
  return s;
}

Matrix lowering_operator() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

JumpEstimate quantum_jump_expectation(const OpenSystem& system, const Matrix& rho0,
                                      const Matrix& observable, std::span<const double> times,
                                      std::size_t trajectories, std::uint64_t seed) {
  system.validate();
  check_density_matrix(rho0);
  const Eigen::Index d = system.dimension();
  if (rho0.rows() != d || observable.rows() != d || observable.cols() != d) {
    throw InvalidArgument("dimension mismatch in quantum-jump inputs");
  }
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!(times[k] >= 0.0) || (k > 0 && times[k] < times[k - 1])) {
      throw InvalidArgument("times must be non-decreasing and >= 0");
    }
  }
  if (trajectories == 0) throw InvalidArgument("need at least one trajectory");

  Matrix h_eff = system.hamiltonian;
  const cd i(0.0, 1.0);
  for (const CollapseChannel& c : system.channels) {
    h_eff -= 0.5 * i * c.rate * (c.op.adjoint() * c.op);
  }
  const Propagator prop(h_eff);

  Eigen::SelfAdjointEigenSolver<Matrix> mix(0.5 * (rho0 + rho0.adjoint()));
  std::vector<double> weights(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) weights[k] = std::max(0.0, mix.eigenvalues()(k));

  std::mt19937_64 rng(seed);
  const std::size_t nt = times.size();
  std::vector<double> sum(nt, 0.0), sum_sq(nt, 0.0);
  JumpEstimate est;
  est.trajectories = trajectories;

  const auto norm2 = [](const Eigen::VectorXcd& v) { return v.squaredNorm(); };

  for (std::size_t traj = 0; traj < trajectories; ++traj) {
    // Initial pure state.
    double u = uniform(rng), acc = 0.0;
    Eigen::Index pick = d - 1;
    for (Eigen::Index k = 0; k < d; ++k) {
      acc += weights[k];
      if (u < acc) {
        pick = k;
        break;
      }
    }
    Eigen::VectorXcd psi = mix.eigenvectors().col(pick);
    double t = 0.0;
    double threshold = 1.0 - uniform(rng);

    for (std::size_t k = 0; k < nt; ++k) {
      const double target = times[k];
      while (t < target) {
        Eigen::VectorXcd next = prop.apply(psi, target - t);
        if (norm2(next) > threshold) {
          psi = next;
          t = target;
          break;
        }
        // Locate the jump by bisection on the decaying norm.
        double lo = 0.0, hi = target - t;
        for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(hi, 1e-300); ++it) {
          const double mid = 0.5 * (lo + hi);
          if (norm2(prop.apply(psi, mid)) > threshold) lo = mid; else hi = mid;
        }
        psi = prop.apply(psi, hi);
        t += hi;
        std::vector<double> jump_weight(system.channels.size());
        double total = 0.0;
        for (std::size_t c = 0; c < system.channels.size(); ++c) {
          jump_weight[c] = system.channels[c].rate * norm2(system.channels[c].op * psi);
          total += jump_weight[c];
        }
        if (total > 0.0) {
          double r = uniform(rng) * total, run = 0.0;
          std::size_t chosen = jump_weight.size() - 1;
          for (std::size_t c = 0; c < jump_weight.size(); ++c) {
            run += jump_weight[c];
            if (r < run) {
              chosen = c;
              break;
            }
          }
          psi = system.channels[chosen].op * psi;
          ++est.jumps;
        }
        psi /= std::sqrt(norm2(psi));
        threshold = 1.0 - uniform(rng);
      }
      const double value = (psi.adjoint() * observable * psi)(0, 0).real() / norm2(psi);
      sum[k] += value;
      sum_sq[k] += value * value;
    }
  }

  const double n = static_cast<double>(trajectories);
  est.mean.resize(nt);
  est.standard_error.resize(nt);
  for (std::size_t k = 0; k < nt; ++k) {
    est.mean[k] = sum[k] / n;
    const double var = std::max(0.0, sum_sq[k] / n - est.mean[k] * est.mean[k]);
    est.standard_error[k] = trajectories > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
  }
  return est;
}

}  // namespace molsim::dynamics
