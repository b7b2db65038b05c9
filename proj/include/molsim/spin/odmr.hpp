#pragma once

#include <cstddef>
#include <vector>

#include "molsim/foundation/grid.hpp"
#include "molsim/spin/spin_system.hpp"

namespace molsim::spin {

struct OdmrLine {
  double frequency = 0.0;  // rad/s, > 0
  double strength = 0.0;   // sum_a |<f|S_a|i>|^2
  std::size_t lower = 0;   // eigenstate indices
  std::size_t upper = 0;
};

struct OdmrSpectrum {
  std::vector<OdmrLine> lines;     // sorted by frequency
  std::vector<double> intensity;   // Lorentzian-broadened, on the grid
};

struct OdmrOptions {
  /// Pairs closer than this fraction of the largest |energy| count as
  /// degenerate and produce no line.
  double degeneracy_tolerance = 1e-9;
  /// Lines weaker than this are dropped.
  double min_strength = 1e-12;
  HamiltonianOptions hamiltonian;
};

/// Magnetic-dipole stick spectrum of all eigenpair gaps, broadened by a
/// Lorentzian of full width `linewidth` (rad/s) onto `grid`.
OdmrSpectrum odmr_spectrum(const SpinSystemSpec& spec, const FrequencyGrid& grid,
                           double linewidth, const OdmrOptions& options = {});

}  // namespace molsim::spin
