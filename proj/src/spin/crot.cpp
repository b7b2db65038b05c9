#include "molsim/spin/crot.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "molsim/foundation/errors.hpp"

namespace molsim::spin {
namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

// y' = A(t) y with A(t) = -i f(t) e^{i L t} O e^{-i L t}, f(t) = amp cos(w t).
// Two-stage Gauss-Legendre: fourth order and norm preserving for
// anti-Hermitian A, so the propagator stays unitary to roundoff.
class InteractionPropagator {
 public:
  InteractionPropagator(Eigen::VectorXd energies, Eigen::MatrixXcd coupling, double amplitude,
                        double drive)
      : energies_(std::move(energies)),
        coupling_(std::move(coupling)),
        amplitude_(amplitude),
        drive_(drive),
        n_(energies_.size()) {}

  Eigen::MatrixXcd propagate(double duration, std::size_t steps) const {
    Eigen::MatrixXcd y = Eigen::MatrixXcd::Identity(n_, n_);
    if (amplitude_ == 0.0 || duration == 0.0) return y;
    const double h = duration / static_cast<double>(steps);
    const double r3 = std::sqrt(3.0);
    const double c1 = 0.5 - r3 / 6.0, c2 = 0.5 + r3 / 6.0;
    const double a11 = 0.25, a12 = 0.25 - r3 / 6.0, a21 = 0.25 + r3 / 6.0, a22 = 0.25;

    Eigen::MatrixXcd a1(n_, n_), a2(n_, n_), m(2 * n_, 2 * n_), rhs(2 * n_, n_);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n_, n_);
    for (std::size_t k = 0; k < steps; ++k) {
      const double t = h * static_cast<double>(k);
      generator(t + c1 * h, a1);
      generator(t + c2 * h, a2);
      m.topLeftCorner(n_, n_) = id - (h * a11) * a1;
      m.topRightCorner(n_, n_) = -(h * a12) * a1;
      m.bottomLeftCorner(n_, n_) = -(h * a21) * a2;
      m.bottomRightCorner(n_, n_) = id - (h * a22) * a2;
      rhs.topRows(n_).noalias() = a1 * y;
      rhs.bottomRows(n_).noalias() = a2 * y;
      lu.compute(m);
      const Eigen::MatrixXcd stages = lu.solve(rhs);
      y += (0.5 * h) * (stages.topRows(n_) + stages.bottomRows(n_));
    }
    return y;
  }

 private:
  void generator(double t, Eigen::MatrixXcd& a) const {
    const cd f = -I * (amplitude_ * std::cos(drive_ * t));
    Eigen::VectorXcd phase(n_);
    for (Eigen::Index k = 0; k < n_; ++k) phase[k] = std::polar(1.0, energies_[k] * t);
    for (Eigen::Index l = 0; l < n_; ++l) {
      for (Eigen::Index k = 0; k < n_; ++k) {
        a(k, l) = f * coupling_(k, l) * phase[k] * std::conj(phase[l]);
      }
    }
  }

  Eigen::VectorXd energies_;
  Eigen::MatrixXcd coupling_;
  double amplitude_;
  double drive_;
  Eigen::Index n_;
};

}  // namespace

double trace_fidelity(const Eigen::MatrixXcd& ideal, const Eigen::MatrixXcd& actual) {
  if (ideal.rows() != actual.rows() || ideal.cols() != actual.cols() || ideal.rows() == 0) {
    throw InvalidArgument("trace_fidelity: shape mismatch");
  }
  const cd overlap = (ideal.adjoint() * actual).trace() / static_cast<double>(ideal.rows());
  return std::norm(overlap);
}

CrotResult crot_gate(const SpinSystemSpec& spec, double drive_frequency, double rabi_frequency,
                     double duration, const CrotOptions& options) {
  if (spec.nuclei.size() != 1 || spec.nuclei[0].spin.twice != 1) {
    throw PreconditionViolated("controlled rotation needs exactly one nucleus with I = 1/2");
  }
  if (!(duration >= 0.0) || !(rabi_frequency >= 0.0) || !(drive_frequency >= 0.0)) {
    throw InvalidArgument("duration, rabi and drive frequencies must be >= 0");
  }
  if (options.drive_axis.norm() == 0.0) throw InvalidArgument("drive axis must be non-zero");

  CrotResult result;
  const SpinEigensystem eig = diagonalize(build_spin_hamiltonian(spec));
  const Eigen::Index n = eig.energies.size();  // 6
  const Eigen::MatrixXcd& v = eig.states;

  // Nuclear character of each eigenstate: basis index parity is m_I (+1/2 even).
  std::vector<std::size_t> up, down;
  for (Eigen::Index k = 0; k < n; ++k) {
    double p_up = 0.0;
    for (Eigen::Index b = 0; b < n; b += 2) p_up += std::norm(v(b, k));
    (p_up > 0.5 ? up : down).push_back(static_cast<std::size_t>(k));
  }
  if (up.size() != 3 || down.size() != 3) {
    throw PreconditionViolated("nuclear spin projection is not a good quantum number here");
  }
  // Eigenvalues are ascending, so each sector list is already energy ordered.

  struct Candidate {
    int sector;  // +1 up, -1 down
    std::size_t lo, hi;
    double gap;
  };
  std::vector<Candidate> candidates;
  for (int sector : {+1, -1}) {
    const auto& s = sector > 0 ? up : down;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        candidates.push_back({sector, i, j, eig.energies[s[j]] - eig.energies[s[i]]});
      }
    }
  }
  const auto best = *std::min_element(
      candidates.begin(), candidates.end(), [&](const Candidate& a, const Candidate& b) {
        return std::fabs(a.gap - drive_frequency) < std::fabs(b.gap - drive_frequency);
      });
  const auto& on = best.sector > 0 ? up : down;
  const auto& off = best.sector > 0 ? down : up;
  const double other_gap = eig.energies[off[best.hi]] - eig.energies[off[best.lo]];

  result.addressed_projection_twice = best.sector;
  result.addressed_frequency = best.gap;
  result.hyperfine_splitting = std::fabs(best.gap - other_gap);
  result.qubit_states = {up[best.lo], up[best.hi], down[best.lo], down[best.hi]};

  const Eigen::Vector3d axis = options.drive_axis.normalized();
  const SpinMatrices s = embedded_operators(spec, 0);
  const Eigen::MatrixXcd drive_op = axis[0] * s.x + axis[1] * s.y + axis[2] * s.z;
  const Eigen::MatrixXcd coupling = v.adjoint() * drive_op * v;
  const cd element = coupling(static_cast<Eigen::Index>(on[best.hi]),
                              static_cast<Eigen::Index>(on[best.lo]));
  if (std::abs(element) < 1e-9) {
    throw PreconditionViolated("drive polarization does not couple the addressed transition");
  }

  if (rabi_frequency > 0.1 * result.hyperfine_splitting) {
    result.warnings.push_back("rabi frequency is not small compared with the hyperfine splitting");
  }
  if (std::fabs(best.gap - drive_frequency) > rabi_frequency) {
    result.warnings.push_back("drive is detuned from every transition by more than the rabi frequency");
  }

  // Shift energies to zero mean; a global phase drops out of the interaction picture.
  const Eigen::VectorXd energies = eig.energies.array() - eig.energies.mean();
  const double max_frequency =
      std::max(energies.cwiseAbs().maxCoeff(), std::fabs(drive_frequency)) +
      rabi_frequency;
  const double amplitude = rabi_frequency / std::abs(element);
  InteractionPropagator prop(energies, coupling, amplitude, drive_frequency);

  std::size_t steps = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::ceil(duration * options.steps_per_radian * std::max(max_frequency, 1e-300))));
  Eigen::MatrixXcd coarse = prop.propagate(duration, steps);
  Eigen::MatrixXcd fine = prop.propagate(duration, 2 * steps);
  double err = (fine - coarse).cwiseAbs().maxCoeff() / 15.0;
  for (unsigned r = 0; r < options.max_refinements && err > options.richardson_tolerance; ++r) {
    steps *= 2;
    coarse = std::move(fine);
    fine = prop.propagate(duration, 2 * steps);
    err = (fine - coarse).cwiseAbs().maxCoeff() / 15.0;
  }
  if (err > options.richardson_tolerance) {
    result.warnings.push_back("richardson error estimate above tolerance");
  }
  result.unitary = std::move(fine);
  result.steps = 2 * steps;
  result.richardson_error = err;

  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      result.qubit_unitary(r, c) = result.unitary(static_cast<Eigen::Index>(result.qubit_states[r]),
                                                  static_cast<Eigen::Index>(result.qubit_states[c]));
    }
  }

  // Ideal: pi rotation -i (e^{i theta}|b><a| + h.c.) in the addressed sector,
  // identity in the other; theta is the phase of <b|S.n|a>.
  const cd phase = element / std::abs(element);
  result.ideal.setZero();
  const int base_on = best.sector > 0 ? 0 : 2;
  const int base_off = 2 - base_on;
  result.ideal(base_on + 1, base_on) = -I * phase;
  result.ideal(base_on, base_on + 1) = -I * std::conj(phase);
  result.ideal(base_off, base_off) = 1.0;
  result.ideal(base_off + 1, base_off + 1) = 1.0;
  result.fidelity = trace_fidelity(result.ideal, result.qubit_unitary);
  return result;
}

}  // namespace molsim::spin
