#include "molsim/relaxation/relaxation.hpp"

#include <algorithm>
#include <cmath>

#include "molsim/foundation/errors.hpp"
#include "molsim/foundation/numeric.hpp"
#include "molsim/foundation/units.hpp"

namespace molsim::relaxation {

std::string_view to_string(RelaxationPath path) noexcept {
  switch (path) {
    case RelaxationPath::TwoPhonon: return "two_phonon";
    case RelaxationPath::VibronAssisted: return "vibron_assisted";
    case RelaxationPath::Intramolecular: return "intramolecular";
  }
  return "unknown";
}

void RelaxationInput::validate() const {
  if (!(vibron_frequency > 0.0)) throw InvalidArgument("vibron frequency must be > 0");
  if (!(phonon_cutoff > 0.0)) throw InvalidArgument("phonon cutoff must be > 0");
  for (double w : other_vibron_frequencies) {
    if (!(w > 0.0 && w < vibron_frequency)) {
      throw InvalidArgument("listed vibron frequencies must lie in (0, vibron frequency)");
    }
  }
}

RelaxationPath classify_relaxation(const RelaxationInput& input) {
  input.validate();
  const double window = 2.0 * input.phonon_cutoff;
  if (input.vibron_frequency <= window) return RelaxationPath::TwoPhonon;
  for (double w : input.other_vibron_frequencies) {
    if (input.vibron_frequency - w <= window) return RelaxationPath::VibronAssisted;
  }
  return RelaxationPath::Intramolecular;
}

double two_phonon_rate(double vibron_frequency, const vibronic::PhononSpectralDensity& density,
                       double coupling, double temperature) {
  density.validate();
  if (!(vibron_frequency > 0.0)) throw DomainError("vibron frequency must be > 0");
  if (!(temperature >= 0.0)) throw DomainError("temperature must be >= 0");
  const double wmax = density.cutoff_frequency;
  if (vibron_frequency > 2.0 * wmax) {
    throw DomainError("vibron frequency exceeds twice the phonon cutoff");
  }
  if (coupling == 0.0 || density.coupling_weight == 0.0) return 0.0;
  const double lo = std::max(0.0, vibron_frequency - wmax);
  const double hi = std::min(vibron_frequency, wmax);
  if (!(hi > lo)) return 0.0;
  const auto stimulated = [&](double w) {
    return temperature > 0.0 ? bose_occupation(w, temperature) + 1.0 : 1.0;
  };
  const auto f = [&](double w) {
    const double u = vibron_frequency - w;
    return density.huang_rhys_density(w) * density.huang_rhys_density(u) * stimulated(w) *
           stimulated(u);
  };
  const auto r = numeric::integrate(f, lo, hi, 1e-12);
  return coupling * coupling * r.value;
}

}  // namespace molsim::relaxation
