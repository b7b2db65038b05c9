#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "molsim/spin/spin_system.hpp"

namespace molsim::spin {

struct CrotOptions {
  /// Polarization of the microwave field acting on the electron spin.
  Eigen::Vector3d drive_axis = Eigen::Vector3d::Ones().normalized();
  /// Step bound: h <= 1 / (steps_per_radian * max eigenfrequency).
  double steps_per_radian = 50.0;
  /// Richardson estimate (|U_N - U_2N| / 15) must fall below this.
  double richardson_tolerance = 1e-6;
  unsigned max_refinements = 4;
};

/// Propagator of a monochromatic magnetic drive
///   H(t) = H0 + rabi * cos(drive t) * (S.n) / |<b|S.n|a>|
/// integrated without a rotating-wave approximation (two-stage Gauss-Legendre,
/// exactly unitary), expressed in the interaction picture of H0 and in the
/// H0 eigenbasis. `rabi` is the population-oscillation frequency of the
/// addressed transition a <-> b.
struct CrotResult {
  Eigen::MatrixXcd unitary;
  /// Basis (a,+1/2), (b,+1/2), (a,-1/2), (b,-1/2) of the two electron levels
  /// and the two nuclear projections.
  Eigen::Matrix4cd qubit_unitary;
  Eigen::Matrix4cd ideal;
  std::array<std::size_t, 4> qubit_states{};
  double fidelity = 0.0;
  int addressed_projection_twice = 0;  // +1 or -1
  double addressed_frequency = 0.0;    // rad/s
  double hyperfine_splitting = 0.0;    // same electron line, other m_I (rad/s)
  double richardson_error = 0.0;
  std::size_t steps = 0;
  std::vector<std::string> warnings;
};

/// Throws PreconditionViolated unless there is exactly one nucleus with I = 1/2,
/// or if the drive polarization does not couple the addressed pair.
CrotResult crot_gate(const SpinSystemSpec& spec, double drive_frequency, double rabi_frequency,
                     double duration, const CrotOptions& options = {});

/// |Tr(ideal^† actual) / dim|^2.
double trace_fidelity(const Eigen::MatrixXcd& ideal, const Eigen::MatrixXcd& actual);

}  // namespace molsim::spin
