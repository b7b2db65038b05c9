#include "molsim/foundation/grid.hpp"

#include <cmath>

#include "molsim/foundation/errors.hpp"

namespace molsim {

FrequencyGrid::FrequencyGrid(double start, double stop, std::size_t points)
    : start_(start), stop_(stop), points_(points) {
  if (points < 2) throw InvalidArgument("frequency grid needs at least 2 points");
  if (!std::isfinite(start) || !std::isfinite(stop) || !(stop > start)) {
    throw InvalidArgument("frequency grid must be strictly increasing");
  }
}

std::vector<double> FrequencyGrid::values() const {
  std::vector<double> v(points_);
  for (std::size_t i = 0; i < points_; ++i) v[i] = (*this)[i];
  return v;
}

std::size_t FrequencyGrid::nearest_index(double omega) const noexcept {
  const double pos = std::round((omega - start_) / spacing());
  if (pos <= 0.0) return 0;
  if (pos >= static_cast<double>(points_ - 1)) return points_ - 1;
  return static_cast<std::size_t>(pos);
}

}  // namespace molsim
