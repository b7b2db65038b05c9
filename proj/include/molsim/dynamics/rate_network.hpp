#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "molsim/dynamics/lindblad.hpp"
#include "molsim/levels/ket.hpp"

namespace molsim::dynamics {

/// Classical population network dp/dt = Q p over labelled states.
class RateNetwork {
 public:
  /// Returns the index of the new state. Throws InvalidArgument on duplicates.
  std::size_t add_state(const levels::LevelKet& label, bool emissive = false);

  /// Adds `rate` (>= 0) to the from -> to transition. Throws InvalidArgument on
  /// self-loops, unknown labels, or negative rates.
  void add_rate(const levels::LevelKet& from, const levels::LevelKet& to, double rate);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<levels::LevelKet>& labels() const noexcept { return labels_; }
  const std::vector<bool>& emissive() const noexcept { return emissive_; }
  const std::map<std::pair<std::size_t, std::size_t>, double>& rates() const noexcept {
    return rates_;
  }

  /// Throws InvalidArgument if the label is absent.
  std::size_t index_of(const levels::LevelKet& label) const;
  bool contains(const levels::LevelKet& label) const;
  double rate(std::size_t from, std::size_t to) const;

  /// Generator Q with Q(to, from) = k(from -> to), columns summing to zero.
  Eigen::MatrixXd generator() const;

 private:
  std::vector<levels::LevelKet> labels_;
  std::vector<bool> emissive_;
  std::map<std::pair<std::size_t, std::size_t>, double> rates_;
};

/// Unique stationary populations. Throws SingularNetwork otherwise.
Eigen::VectorXd steady_populations(const RateNetwork& network);

/// sum over emissive states i of p_i times the total rate from i into the
/// ground manifold S0.
double fluorescence(const RateNetwork& network, const Eigen::VectorXd& populations);

/// (F_on - F_off) / F_off where F_on adds symmetric microwave mixing between
/// the two sublevels. Requires S0, S1 and the three T1 sublevels.
double odmr_contrast(const RateNetwork& network, const levels::LevelKet& a,
                     const levels::LevelKet& b, double mixing_rate);

/// Lindblad system with H = 0 and one jump operator |j><i| per rate, whose
/// steady-state diagonal equals steady_populations().
OpenSystem to_open_system(const RateNetwork& network);

/// Five-state triplet-shelving model S0, S1, T1 x/y/z. Rates in s^-1.
/// Placeholder defaults: 100 us triplet lifetimes, ISC branching 0.6/0.3/0.1.
struct TripletPhotophysics {
  double pump_rate = 1e6;
  double radiative_rate = 1e8;
  double isc_rate = 1e6;
  std::array<double, 3> isc_branching{0.6, 0.3, 0.1};  // into x, y, z
  std::array<double, 3> triplet_decay{1e4, 1e4, 1e4};  // x, y, z -> S0

  void validate() const;
};

RateNetwork make_triplet_network(const TripletPhotophysics& params);

}  // namespace molsim::dynamics
