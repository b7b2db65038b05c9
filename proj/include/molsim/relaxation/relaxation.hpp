#pragma once

#include <string_view>
#include <vector>

#include "molsim/vibronic/vibronic.hpp"

namespace molsim::relaxation {

enum class RelaxationPath { TwoPhonon, VibronAssisted, Intramolecular };

std::string_view to_string(RelaxationPath path) noexcept;

struct RelaxationInput {
  double vibron_frequency = 0.0;  // rad/s
  double phonon_cutoff = 0.0;     // rad/s
  std::vector<double> other_vibron_frequencies;

  /// Throws InvalidArgument unless all frequencies are positive and listed
  /// vibrons lie below vibron_frequency.
  void validate() const;
};

/// two_phonon when w_v <= 2 w_max; vibron_assisted when some listed w_j leaves
/// w_v - w_j <= 2 w_max; intramolecular otherwise.
RelaxationPath classify_relaxation(const RelaxationInput& input);

/// coupling^2 * int rho(w) rho(w_v - w) (n(w) + 1)(n(w_v - w) + 1) dw with
/// rho = J(w)/w^2, over the part of [0, w_v] where both phonons exist.
/// Arbitrary absolute scale. Throws DomainError when w_v > 2 w_max.
double two_phonon_rate(double vibron_frequency, const vibronic::PhononSpectralDensity& density,
                       double coupling, double temperature);

}  // namespace molsim::relaxation
