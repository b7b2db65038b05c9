#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "molsim/foundation/constants.hpp"
#include "molsim/levels/ket.hpp"

namespace molsim::spin {

using levels::HalfInt;

struct NucleusSpec {
  HalfInt spin = HalfInt::from_twice(1);                    // I
  Eigen::Matrix3d hyperfine = Eigen::Matrix3d::Zero();     // A, rad/s
  double gyromagnetic_ratio = constants::proton_gyromagnetic_ratio;  // rad/(s T)
};

/// Triplet electron spin S = 1 with zero-field splitting, Zeeman and
/// hyperfine couplings. D and E are angular frequencies (rad/s).
struct SpinSystemSpec {
  double D = 0.0;
  double E = 0.0;
  double g_electron = constants::default_g_electron;
  Eigen::Vector3d magnetic_field = Eigen::Vector3d::Zero();  // tesla, lab frame
  /// Columns are the fine-structure x, y, z axes expressed in the lab frame.
  Eigen::Matrix3d fine_structure_axes = Eigen::Matrix3d::Identity();
  std::vector<NucleusSpec> nuclei;

  /// Throws InvalidArgument on |E| > |D|/3, asymmetric A, I < 1/2, or a
  /// non-orthogonal axis frame.
  void validate() const;
};

struct SpinEigensystem {
  Eigen::VectorXd energies;   // ascending, rad/s
  Eigen::MatrixXcd states;    // columns are eigenvectors in the product basis
};

struct HamiltonianOptions {
  std::size_t max_dimension = 4096;
};

/// 3 * prod_i (2 I_i + 1). Basis order: electron m_S = +1, 0, -1 outermost,
/// then each nucleus m_I = I, I-1, ..., -I.
std::size_t product_dimension(const SpinSystemSpec& spec);

/// Single-spin operators S_x, S_y, S_z for spin s (dimension 2s+1),
/// basis m = s ... -s.
struct SpinMatrices {
  Eigen::MatrixXcd x, y, z;
};
SpinMatrices spin_matrices(HalfInt s);

/// Electron (index 0) or nucleus (index i+1) spin operators embedded in the
/// full product space.
SpinMatrices embedded_operators(const SpinSystemSpec& spec, std::size_t particle);

/// Fine-structure tensor in the lab frame: R diag(E - D/3, -E - D/3, 2D/3) R^T.
Eigen::Matrix3d fine_structure_tensor(const SpinSystemSpec& spec);

/// H = S.D.S + g mu_B B.S / hbar + sum_i S.A_i.I_i - sum_i gamma_i B.I_i (rad/s).
/// Throws DimensionOverflow if the product space exceeds options.max_dimension.
Eigen::MatrixXcd build_spin_hamiltonian(const SpinSystemSpec& spec,
                                        const HamiltonianOptions& options = {});

/// Hermitian eigen-decomposition. Throws NotHermitian if ||H - H^†||_max
/// exceeds 1e-10 * max(1, ||H||_max).
SpinEigensystem diagonalize(const Eigen::MatrixXcd& hamiltonian);

}  // namespace molsim::spin
