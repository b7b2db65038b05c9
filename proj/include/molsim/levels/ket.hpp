#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace molsim::levels {

enum class Multiplicity : std::uint8_t { Singlet, Triplet };

/// Electronic manifold S_j or T_j. S0 is the ground state; triplets start at T1.
struct Manifold {
  Multiplicity multiplicity = Multiplicity::Singlet;
  unsigned index = 0;

  bool is_triplet() const noexcept { return multiplicity == Multiplicity::Triplet; }
  bool is_ground() const noexcept { return multiplicity == Multiplicity::Singlet && index == 0; }

  friend auto operator<=>(const Manifold&, const Manifold&) = default;
};

inline constexpr Manifold S0{Multiplicity::Singlet, 0};
inline constexpr Manifold S1{Multiplicity::Singlet, 1};
inline constexpr Manifold T1{Multiplicity::Triplet, 1};

/// Triplet sublevels labelled by the fine-structure axis.
enum class TripletAxis : std::uint8_t { X, Y, Z };

/// A non-negative half-integer or signed half-integer stored as twice its value.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_twice(int t) noexcept { return HalfInt{t}; }
  double value() const noexcept { return 0.5 * twice; }

  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

struct NuclearLabel {
  HalfInt spin;        // I
  HalfInt projection;  // m_I

  friend auto operator<=>(const NuclearLabel&, const NuclearLabel&) = default;
};

/// Host-guest state |S(T)_j[,axis]; nu_v, nu_p; I_i, m_I_i>.
///
/// Occupations are indexed by mode number; entries past the end of a vector
/// are zero. The stored vectors are kept exactly as given so the literal
/// round-trips, while comparisons ignore trailing zeros.
struct LevelKet {
  Manifold manifold = S0;
  std::optional<TripletAxis> sublevel;
  std::vector<unsigned> vibrons;
  std::vector<unsigned> phonons;
  std::vector<NuclearLabel> nuclei;

  unsigned vibron(std::size_t mode) const noexcept {
    return mode < vibrons.size() ? vibrons[mode] : 0u;
  }
  unsigned phonon(std::size_t mode) const noexcept {
    return mode < phonons.size() ? phonons[mode] : 0u;
  }
  unsigned total_vibrons() const noexcept;
  unsigned total_phonons() const noexcept;

  /// No vibron or phonon quanta.
  bool is_relaxed() const noexcept { return total_vibrons() == 0 && total_phonons() == 0; }

  /// Copy with all occupations cleared, nuclear labels kept.
  LevelKet relaxed() const;

  /// Throws InvalidArgument when an invariant is violated.
  void validate() const;

  friend bool operator==(const LevelKet& a, const LevelKet& b) noexcept;
  friend std::strong_ordering operator<=>(const LevelKet& a, const LevelKet& b) noexcept;
};

/// Convenience constructor for a relaxed ket.
LevelKet make_ket(Manifold manifold, std::optional<TripletAxis> sublevel = std::nullopt);

/// Literal form, e.g. `S1;v=[0,1];p=[];n=[(1/2,+1/2)]` or `T1,x;v=[];p=[];n=[]`.
std::string to_string(const LevelKet& ket);

/// Strict parser for the literal form. to_string(parse_ket(s)) == s for every
/// accepted s. Throws KetSyntaxError on malformed input.
LevelKet parse_ket(std::string_view text);

std::string_view to_string(TripletAxis axis) noexcept;
std::string to_string(Manifold manifold);

}  // namespace molsim::levels
