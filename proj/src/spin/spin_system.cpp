#include "molsim/spin/spin_system.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <unsupported/Eigen/KroneckerProduct>

#include "molsim/foundation/errors.hpp"

namespace molsim::spin {
namespace {

using cd = std::complex<double>;

std::size_t multiplicity(HalfInt s) { return static_cast<std::size_t>(s.twice) + 1; }

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

void SpinSystemSpec::validate() const {
  if (!std::isfinite(D) || !std::isfinite(E)) throw InvalidArgument("D and E must be finite");
  if (std::fabs(E) > std::fabs(D) / 3.0 * (1.0 + 1e-12)) {
    throw InvalidArgument("|E| must not exceed |D|/3");
  }
  if (!magnetic_field.allFinite()) throw InvalidArgument("magnetic field must be finite");
  const Eigen::Matrix3d rtr = fine_structure_axes.transpose() * fine_structure_axes;
  if ((rtr - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-9) {
    throw InvalidArgument("fine-structure axes must be orthonormal");
  }
  for (const NucleusSpec& n : nuclei) {
    if (n.spin.twice < 1) throw InvalidArgument("nuclear spin must be >= 1/2");
    const double scale = std::max(n.hyperfine.cwiseAbs().maxCoeff(), 1e-300);
    if ((n.hyperfine - n.hyperfine.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
      throw InvalidArgument("hyperfine tensor must be symmetric");
    }
  }
}

std::size_t product_dimension(const SpinSystemSpec& spec) {
  std::size_t dim = 3;
  for (const NucleusSpec& n : spec.nuclei) dim *= multiplicity(n.spin);
  return dim;
}

SpinMatrices spin_matrices(HalfInt s) {
  const std::size_t d = multiplicity(s);
  const double j = s.value();
  SpinMatrices out{Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d),
                   Eigen::MatrixXcd::Zero(d, d)};
  // Row/column k holds m = j - k.
  for (std::size_t k = 0; k < d; ++k) {
    const double m = j - static_cast<double>(k);
    out.z(k, k) = m;
    if (k + 1 < d) {
      // <m|S+|m-1> = sqrt(j(j+1) - m(m-1))
      const double c = std::sqrt(j * (j + 1) - m * (m - 1));
      out.x(k, k + 1) = 0.5 * c;
      out.x(k + 1, k) = 0.5 * c;
      out.y(k, k + 1) = cd(0.0, -0.5 * c);
      out.y(k + 1, k) = cd(0.0, 0.5 * c);
    }
  }
  return out;
}

SpinMatrices embedded_operators(const SpinSystemSpec& spec, std::size_t particle) {
  if (particle > spec.nuclei.size()) throw InvalidArgument("particle index out of range");
  std::vector<std::size_t> dims{3};
  for (const NucleusSpec& n : spec.nuclei) dims.push_back(multiplicity(n.spin));
  const SpinMatrices local =
      spin_matrices(particle == 0 ? HalfInt::from_twice(2) : spec.nuclei[particle - 1].spin);

  std::size_t left = 1, right = 1;
  for (std::size_t i = 0; i < particle; ++i) left *= dims[i];
  for (std::size_t i = particle + 1; i < dims.size(); ++i) right *= dims[i];
  const Eigen::MatrixXcd il = Eigen::MatrixXcd::Identity(left, left);
  const Eigen::MatrixXcd ir = Eigen::MatrixXcd::Identity(right, right);
  const auto embed = [&](const Eigen::MatrixXcd& op) -> Eigen::MatrixXcd {
    Eigen::MatrixXcd tmp = Eigen::kroneckerProduct(il, op);
    return Eigen::kroneckerProduct(tmp, ir);
  };
  return {embed(local.x), embed(local.y), embed(local.z)};
}

Eigen::Matrix3d fine_structure_tensor(const SpinSystemSpec& spec) {
  const Eigen::Vector3d principal(spec.E - spec.D / 3.0, -spec.E - spec.D / 3.0,
                                  2.0 * spec.D / 3.0);
  const Eigen::Matrix3d& r = spec.fine_structure_axes;
  return r * principal.asDiagonal() * r.transpose();
}

Eigen::MatrixXcd build_spin_hamiltonian(const SpinSystemSpec& spec,
                                        const HamiltonianOptions& options) {
  spec.validate();
  // Checked before any allocation; the product can be large.
  std::size_t dim = 3;
  for (const NucleusSpec& n : spec.nuclei) {
    dim *= multiplicity(n.spin);
    if (dim > options.max_dimension) {
      throw DimensionOverflow("spin product space exceeds " +
                              std::to_string(options.max_dimension) + " states");
    }
  }

  const SpinMatrices s = embedded_operators(spec, 0);
  const std::array<const Eigen::MatrixXcd*, 3> sv{&s.x, &s.y, &s.z};

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  const Eigen::Matrix3d zfs = fine_structure_tensor(spec);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (zfs(a, b) != 0.0) h += zfs(a, b) * (*sv[a]) * (*sv[b]);
    }
  }

  const double zeeman = spec.g_electron * constants::bohr_magneton / constants::hbar;
  for (int a = 0; a < 3; ++a) h += zeeman * spec.magnetic_field[a] * (*sv[a]);

  for (std::size_t i = 0; i < spec.nuclei.size(); ++i) {
    const NucleusSpec& n = spec.nuclei[i];
    const SpinMatrices in = embedded_operators(spec, i + 1);
    const std::array<const Eigen::MatrixXcd*, 3> iv{&in.x, &in.y, &in.z};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (n.hyperfine(a, b) != 0.0) h += n.hyperfine(a, b) * (*sv[a]) * (*iv[b]);
      }
      h -= n.gyromagnetic_ratio * spec.magnetic_field[a] * (*iv[a]);
    }
  }
  // Remove roundoff asymmetry.
  return 0.5 * (h + h.adjoint());
}

SpinEigensystem diagonalize(const Eigen::MatrixXcd& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols()) throw NotHermitian("matrix is not square");
  const double scale = std::max(1.0, max_abs(hamiltonian));
  if (max_abs(hamiltonian - hamiltonian.adjoint()) > 1e-10 * scale) {
    throw NotHermitian("matrix deviates from Hermitian beyond 1e-10 relative");
  }
  const Eigen::MatrixXcd herm = 0.5 * (hamiltonian + hamiltonian.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
  if (solver.info() != Eigen::Success) throw NotHermitian("eigen-decomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace molsim::spin
