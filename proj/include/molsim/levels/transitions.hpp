#pragma once

#include <map>
#include <string_view>

#include "molsim/levels/ket.hpp"

namespace molsim::levels {

enum class TransitionClass {
  ZPL,
  VibronicEmission,
  PhononWing,
  ISC,
  Phosphorescence,
  MicrowaveSpin,
  VibrationalRelaxation,
  Forbidden,
};

std::string_view to_string(TransitionClass c) noexcept;

/// Whether a radiative singlet-triplet decay is being asked about. Only
/// affects T1(relaxed) -> S0(relaxed), which is phosphorescence when radiative.
enum class Channel { Nonradiative, Radiative };

/// Total classification of an ordered ket pair.
///
/// - S1 relaxed -> S0: ZPL (S0 relaxed), vibronic emission (vibrons only),
///   phonon wing (any phonon). Emission from an unrelaxed S1 is forbidden.
/// - singlet <-> triplet: ISC, or phosphorescence for a radiative
///   T1(relaxed) -> S0(relaxed).
/// - same triplet manifold, different sublevel, equal occupations: microwave.
/// - same manifold and sublevel: vibrational relaxation when the vibron count
///   drops, or the vibrons are unchanged and the phonon count drops.
/// - identical kets, changed nuclear labels, everything else: forbidden.
TransitionClass classify_transition(const LevelKet& from, const LevelKet& to,
                                    Channel channel = Channel::Nonradiative);

/// Kasha's rule: the relaxed ket of the lowest excited manifold that carries
/// population. Manifolds are ordered by index, with T_j below S_j (exchange
/// energy). Within the manifold the most populated ket supplies the sublevel
/// and nuclear labels.
///
/// Throws InvalidArgument if populations are negative or do not sum to 1
/// within 1e-9, EmptyPopulation if no excited manifold is populated.
LevelKet kasha_emitting_state(const std::map<LevelKet, double>& populations);

}  // namespace molsim::levels
