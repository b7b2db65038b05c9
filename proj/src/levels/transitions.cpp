#include "molsim/levels/transitions.hpp"

#include <cmath>

#include "molsim/foundation/errors.hpp"

namespace molsim::levels {
namespace {

bool same_occupations(const LevelKet& a, const LevelKet& b) {
  LevelKet x = a, y = b;
  x.manifold = y.manifold;
  x.sublevel = y.sublevel;
  return x == y;
}

bool same_vibrons(const LevelKet& a, const LevelKet& b) {
  LevelKet x = a.relaxed(), y = b.relaxed();
  x.vibrons = a.vibrons;
  y.vibrons = b.vibrons;
  x.manifold = y.manifold;
  x.sublevel = y.sublevel;
  return x == y;
}

// Energy order of excited manifolds: by index, triplet below singlet.
std::pair<unsigned, int> excitation_rank(Manifold m) {
  return {m.index, m.is_triplet() ? 0 : 1};
}

}  // namespace

std::string_view to_string(TransitionClass c) noexcept {
  switch (c) {
    case TransitionClass::ZPL: return "ZPL";
    case TransitionClass::VibronicEmission: return "vibronic_emission";
    case TransitionClass::PhononWing: return "phonon_wing";
    case TransitionClass::ISC: return "ISC";
    case TransitionClass::Phosphorescence: return "phosphorescence";
    case TransitionClass::MicrowaveSpin: return "microwave_spin";
    case TransitionClass::VibrationalRelaxation: return "vibrational_relaxation";
    case TransitionClass::Forbidden: return "forbidden";
  }
  return "?";
}

TransitionClass classify_transition(const LevelKet& from, const LevelKet& to, Channel channel) {
  if (from == to) return TransitionClass::Forbidden;
  if (from.nuclei != to.nuclei) return TransitionClass::Forbidden;

  if (from.manifold == to.manifold) {
    if (from.sublevel != to.sublevel) {
      return same_occupations(from, to) ? TransitionClass::MicrowaveSpin
                                        : TransitionClass::Forbidden;
    }
    const unsigned v_from = from.total_vibrons(), v_to = to.total_vibrons();
    if (v_to < v_from) return TransitionClass::VibrationalRelaxation;
    if (same_vibrons(from, to) && to.total_phonons() < from.total_phonons()) {
      return TransitionClass::VibrationalRelaxation;
    }
    return TransitionClass::Forbidden;
  }

  if (from.manifold.multiplicity != to.manifold.multiplicity) {
    if (channel == Channel::Radiative && from.manifold == T1 && to.manifold == S0 &&
        from.is_relaxed() && to.is_relaxed()) {
      return TransitionClass::Phosphorescence;
    }
    return TransitionClass::ISC;
  }

  if (from.manifold == S1 && to.manifold == S0) {
    if (!from.is_relaxed()) return TransitionClass::Forbidden;
    if (to.total_phonons() > 0) return TransitionClass::PhononWing;
    if (to.total_vibrons() > 0) return TransitionClass::VibronicEmission;
    return TransitionClass::ZPL;
  }
  return TransitionClass::Forbidden;
}

LevelKet kasha_emitting_state(const std::map<LevelKet, double>& populations) {
  double total = 0.0;
  for (const auto& [ket, p] : populations) {
    if (!(p >= 0.0)) throw InvalidArgument("populations must be non-negative");
    total += p;
  }
  if (std::fabs(total - 1.0) > 1e-9) {
    throw InvalidArgument("populations must sum to 1 within 1e-9");
  }

  const LevelKet* best = nullptr;
  double best_p = 0.0;
  for (const auto& [ket, p] : populations) {
    if (p <= 0.0 || ket.manifold.is_ground()) continue;
    if (best == nullptr) {
      best = &ket;
      best_p = p;
      continue;
    }
    const auto r = excitation_rank(ket.manifold);
    const auto rb = excitation_rank(best->manifold);
    // Map order breaks population ties deterministically.
    if (r < rb || (r == rb && p > best_p)) {
      best = &ket;
      best_p = p;
    }
  }
  if (best == nullptr) throw EmptyPopulation("no excited-state population");
  return best->relaxed();
}

}  // namespace molsim::levels
