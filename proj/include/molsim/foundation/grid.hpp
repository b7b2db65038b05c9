#pragma once

#include <cstddef>
#include <vector>

namespace molsim {

/// Uniform grid of angular frequencies (rad/s), endpoints inclusive.
class FrequencyGrid {
 public:
  FrequencyGrid(double start, double stop, std::size_t points);

  double start() const noexcept { return start_; }
  double stop() const noexcept { return stop_; }
  std::size_t size() const noexcept { return points_; }
  double spacing() const noexcept { return (stop_ - start_) / static_cast<double>(points_ - 1); }

  double operator[](std::size_t i) const noexcept {
    return start_ + static_cast<double>(i) * spacing();
  }

  std::vector<double> values() const;

  /// Index of the grid point closest to omega (clamped to the grid).
  std::size_t nearest_index(double omega) const noexcept;

 private:
  double start_;
  double stop_;
  std::size_t points_;
};

}  // namespace molsim
