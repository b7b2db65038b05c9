#pragma once

// Minimal seeded property-test driver: draw `cases` inputs from a generator,
// report the first failing case with its index and seed.

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace molsim::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng_() >> 11) * 0x1.0p-53);
  }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0.0, 1.0) * n) % n; }
  bool coin() { return (rng_() >> 63) != 0; }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Runs `check(gen, case_index)` for each case; check returns an empty string
/// on success or a description of the violation.
template <class Check>
std::string for_all(std::uint64_t seed, int cases, Check&& check) {
  Gen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const std::string why = check(gen, i);
    if (!why.empty()) {
      std::ostringstream os;
      os << "case " << i << " (seed " << seed << "): " << why;
      return os.str();
    }
  }
  return {};
}

}  // namespace molsim::testing
