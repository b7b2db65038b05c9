#include "molsim/spin/odmr.hpp"

#include <algorithm>
#include <cmath>

#include "molsim/foundation/errors.hpp"
#include "molsim/kernels/kernels.hpp"

namespace molsim::spin {

OdmrSpectrum odmr_spectrum(const SpinSystemSpec& spec, const FrequencyGrid& grid,
                           double linewidth, const OdmrOptions& options) {
  if (!(linewidth > 0.0)) throw InvalidArgument("linewidth must be > 0");

  const SpinEigensystem eig = diagonalize(build_spin_hamiltonian(spec, options.hamiltonian));
  const SpinMatrices s = embedded_operators(spec, 0);
  const Eigen::MatrixXcd& v = eig.states;
  const Eigen::MatrixXcd sx = v.adjoint() * s.x * v;
  const Eigen::MatrixXcd sy = v.adjoint() * s.y * v;
  const Eigen::MatrixXcd sz = v.adjoint() * s.z * v;

  const auto n = static_cast<std::size_t>(eig.energies.size());
  const double scale = eig.energies.cwiseAbs().maxCoeff();
  const double min_gap = options.degeneracy_tolerance * scale;

  OdmrSpectrum out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = i + 1; f < n; ++f) {
      const double gap = eig.energies[f] - eig.energies[i];
      if (!(gap > min_gap)) continue;
      const double strength =
          std::norm(sx(f, i)) + std::norm(sy(f, i)) + std::norm(sz(f, i));
      if (strength < options.min_strength) continue;
      out.lines.push_back({gap, strength, i, f});
    }
  }
  std::sort(out.lines.begin(), out.lines.end(), [](const OdmrLine& a, const OdmrLine& b) {
    return a.frequency < b.frequency || (a.frequency == b.frequency && a.lower < b.lower);
  });

  const std::vector<double> x = grid.values();
  out.intensity.assign(x.size(), 0.0);
  for (const OdmrLine& line : out.lines) {
    kernels::lorentzian_density(x, line.frequency, 0.5 * linewidth, line.strength,
                                out.intensity);
  }
  return out;
}

}  // namespace molsim::spin
