#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "molsim/foundation/constants.hpp"
#include "molsim/foundation/errors.hpp"
#include "molsim/vibronic/vibronic.hpp"
#include "support/property.hpp"

using namespace molsim;
using namespace molsim::vibronic;
using Gen = molsim::testing::Gen;

namespace {

constexpr double kTHz = constants::two_pi * 1e12;
constexpr double kGHz = constants::two_pi * 1e9;
constexpr double kZpl = constants::two_pi * 5e14;

// |<m|0_d>|^2 between harmonic-oscillator eigenfunctions, with the excited
// ground state displaced by d = sqrt(2 S) in dimensionless coordinates,
// integrated by the trapezoid rule on a fine grid.
std::vector<double> overlap_oracle(double s, unsigned max_m) {
  const double d = std::sqrt(2.0 * s);
  const double h = 0.005;
  const double lo = -20.0, hi = 20.0 + d;
  const std::size_t n = static_cast<std::size_t>((hi - lo) / h) + 1;
  std::vector<double> sums(max_m + 1, 0.0);
  const double norm0 = std::pow(constants::pi, -0.25);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = lo + h * static_cast<double>(k);
    const double displaced = norm0 * std::exp(-0.5 * (x - d) * (x - d));
    double prev = 0.0, cur = norm0 * std::exp(-0.5 * x * x);
    const double w = (k == 0 || k + 1 == n) ? 0.5 * h : h;
    for (unsigned m = 0; m <= max_m; ++m) {
      sums[m] += w * cur * displaced;
      const double next = std::sqrt(2.0 / (m + 1.0)) * x * cur - std::sqrt(m / (m + 1.0)) * prev;
      prev = cur;
      cur = next;
    }
  }
  for (double& v : sums) v *= v;
  return sums;
}

VibronicModel base_model() {
  VibronicModel m;
  m.zpl_frequency = kZpl;
  m.radiative_rate = 2.0 * kGHz;
  return m;
}

// Cell-centred grid with the ZPL on a grid point.
FrequencyGrid aligned_grid(double below, double above, double spacing) {
  const double nb = std::ceil(below / spacing), na = std::ceil(above / spacing);
  return FrequencyGrid(kZpl - nb * spacing, kZpl + na * spacing,
                       static_cast<std::size_t>(nb + na) + 1);
}

}  // namespace

TEST(FranckCondon, TrivialAndClosedForm) {
  const auto zero = franck_condon_progression(0.0, 5);
  ASSERT_EQ(zero.size(), 6u);
  EXPECT_EQ(zero[0], 1.0);
  for (std::size_t m = 1; m < zero.size(); ++m) EXPECT_EQ(zero[m], 0.0);

  const auto one = franck_condon_progression(1.0, 2);
  EXPECT_NEAR(one[0], std::exp(-1.0), 1e-15);
  EXPECT_NEAR(one[1], std::exp(-1.0), 1e-15);
  EXPECT_NEAR(one[2], 0.5 * std::exp(-1.0), 1e-15);
}

TEST(FranckCondon, MatchesDisplacedOscillatorOverlaps) {
  for (double s : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const auto p = franck_condon_progression(s, 12);
    const auto oracle = overlap_oracle(s, 12);
    for (unsigned m = 0; m <= 12; ++m) EXPECT_NEAR(p[m], oracle[m], 1e-8) << "S=" << s << " m=" << m;
  }
}

TEST(FranckCondon, NormalizedAtFortyQuanta) {
  for (double s : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const auto p = franck_condon_progression(s, 40);
    double sum = 0.0;
    for (double v : p) sum += v;
    EXPECT_GE(sum, 1.0 - 1e-6);
    EXPECT_LE(sum, 1.0 + 1e-12);
  }
}

TEST(FranckCondon, RejectsNegativeHuangRhys) {
  EXPECT_THROW(franck_condon_progression(-0.1, 3), InvalidArgument);
}

TEST(DebyeWaller, ClosedForms) {
  VibronicModel m = base_model();
  EXPECT_EQ(debye_waller(m), 1.0);
  EXPECT_EQ(zpl_branching_ratio(m), 1.0);
  m.vibron_modes.push_back({6.0 * kTHz, 0.3, 0.0});
  EXPECT_NEAR(debye_waller(m), std::exp(-0.3), 1e-14);
}

TEST(DebyeWaller, PhononIntegralMatchesIndependentQuadrature) {
  VibronicModel m = base_model();
  m.phonons.coupling_weight = 0.4;
  for (double t : {0.0, 4.0, 30.0}) {
    m.temperature = t;
    const PhononSpectralDensity& j = m.phonons;
    // Composite Simpson on J(w)/w^2 (2 n + 1); the integrand is finite at 0.
    const std::size_t n = 200000;
    const double h = j.cutoff_frequency / n;
    auto f = [&](double w) {
      if (w == 0.0) return t > 0.0 ? j.coupling_weight / j.peak_frequency * 2.0 *
                                         constants::boltzmann * t / constants::hbar /
                                         j.peak_frequency
                                   : 0.0;
      const double x = w / j.peak_frequency;
      const double density = j.coupling_weight * x * std::exp(-x) / j.peak_frequency;
      const double occ =
          t > 0.0 ? 1.0 / std::expm1(constants::hbar * w / (constants::boltzmann * t)) : 0.0;
      return density * (2.0 * occ + 1.0);
    };
    double sum = f(0.0) + f(j.cutoff_frequency);
    for (std::size_t k = 1; k < n; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(h * k);
    const double expected = sum * h / 3.0;
    EXPECT_NEAR(debye_waller_exponent(m), expected, 1e-8 * expected) << "T=" << t;
  }
}

TEST(DebyeWaller, StrictlyDecreasingInTemperature) {
  VibronicModel m = base_model();
  m.vibron_modes.push_back({6.0 * kTHz, 0.2, 0.0});
  m.phonons.coupling_weight = 0.5;
  double previous = 2.0;
  for (int k = 0; k < 10; ++k) {
    m.temperature = 1.0 + 10.0 * k;
    const double dw = debye_waller(m);
    EXPECT_LT(dw, previous) << "T=" << m.temperature;
    EXPECT_GT(dw, 0.0);
    previous = dw;
  }
}

TEST(DebyeWaller, StrictlyDecreasingInCoupling) {
  const auto failure = molsim::testing::for_all(21, 200, [](Gen& g, int) -> std::string {
    VibronicModel m = base_model();
    m.temperature = g.uniform(0.0, 50.0);
    for (int i = 0; i < 3; ++i) m.vibron_modes.push_back({g.uniform(1.0, 60.0) * kTHz, g.uniform(0.0, 1.0), 0.0});
    m.phonons.coupling_weight = g.uniform(0.0, 1.0);
    const double before = debye_waller(m);
    m.vibron_modes[g.index(3)].huang_rhys += g.uniform(1e-3, 0.5);
    const double after = debye_waller(m);
    if (!(after < before)) return "not decreasing";
    if (!(after > 0.0 && before <= 1.0)) return "out of range";
    return {};
  });
  EXPECT_TRUE(failure.empty()) << failure;
}

TEST(DebyeWaller, ScalingHitsTargetAgainstIndependentRootFind) {
  VibronicModel m = base_model();
  m.vibron_modes = {{6.0 * kTHz, 0.1, 0.0}, {40.0 * kTHz, 0.3, 0.0}};
  m.phonons.coupling_weight = 0.2;
  m.temperature = 4.0;
  const VibronicModel tuned = scale_to_debye_waller(m, 0.30);
  EXPECT_NEAR(debye_waller(tuned), 0.30, 1e-12);
  EXPECT_NEAR(zpl_branching_ratio(tuned), 0.30, 1e-12);

  // Bisection on a common scale factor of all couplings.
  auto scaled = [&](double f) {
    VibronicModel c = m;
    for (auto& v : c.vibron_modes) v.huang_rhys *= f;
    c.phonons.coupling_weight *= f;
    return debye_waller(c);
  };
  double lo = 0.0, hi = 100.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (scaled(mid) > 0.30 ? lo : hi) = mid;
  }
  EXPECT_NEAR(tuned.vibron_modes[0].huang_rhys / 0.1, 0.5 * (lo + hi), 1e-9);
  EXPECT_NEAR(tuned.phonons.coupling_weight / 0.2, 0.5 * (lo + hi), 1e-9);
}

TEST(DebyeWaller, ScalingPreconditions) {
  VibronicModel m = base_model();
  EXPECT_THROW(scale_to_debye_waller(m, 0.5), InvalidArgument);
  EXPECT_NO_THROW(scale_to_debye_waller(m, 1.0));
  m.vibron_modes.push_back({6.0 * kTHz, 0.1, 0.0});
  EXPECT_THROW(scale_to_debye_waller(m, 0.0), InvalidArgument);
  EXPECT_THROW(scale_to_debye_waller(m, 1.5), InvalidArgument);
}

TEST(Spectrum, SingleLorentzianWithoutCoupling) {
  const VibronicModel m = base_model();
  const FrequencyGrid grid = aligned_grid(200 * kGHz, 200 * kGHz, 0.25 * kGHz);
  const Spectrum s = emission_spectrum(m, grid);
  EXPECT_NEAR(s.integral(), 1.0, 1e-12);
  const auto peak = std::max_element(s.intensity.begin(), s.intensity.end()) - s.intensity.begin();
  EXPECT_NEAR(grid[static_cast<std::size_t>(peak)], kZpl, 0.5 * grid.spacing());
  // Symmetric about the ZPL.
  const std::size_t c = grid.nearest_index(kZpl);
  for (std::size_t k = 1; k < 100; ++k) EXPECT_NEAR(s.intensity[c - k], s.intensity[c + k], 1e-9 * s.intensity[c]);
}

TEST(Spectrum, VibronicSidebandWeight) {
  VibronicModel m = base_model();
  m.vibron_modes.push_back({6.0 * kTHz, 0.1, 0.0});
  const FrequencyGrid grid = aligned_grid(7.5 * kTHz, 50 * kGHz, 0.5 * kGHz);
  const Spectrum s = emission_spectrum(m, grid);
  const double window = 50 * kGHz;
  const double zpl = s.integral_over(kZpl - window, kZpl + window);
  const double side = s.integral_over(kZpl - 6 * kTHz - window, kZpl - 6 * kTHz + window);
  EXPECT_NEAR(side / zpl, 0.1, 1e-4);
  EXPECT_NEAR(zpl / (zpl + side), std::exp(-0.1) / (std::exp(-0.1) * 1.1), 1e-4);
}

TEST(Spectrum, PhononWingPeaksAtDensityPeak) {
  VibronicModel m = base_model();
  m.radiative_rate = 0.05 * kGHz;
  m.phonons.coupling_weight = 0.5;
  const FrequencyGrid grid = aligned_grid(6 * kTHz, 10 * kGHz, 5 * kGHz);
  const Spectrum s = emission_spectrum(m, grid);
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] > kZpl - 0.3 * kTHz) continue;
    if (s.intensity[i] > s.intensity[best]) best = i;
  }
  EXPECT_NEAR(kZpl - grid[best], 1.75 * kTHz, grid.spacing());
  EXPECT_NEAR(s.integral(), 1.0, 1e-9);
}

TEST(Spectrum, NormalizedAndNonNegativeForRandomModels) {
  const auto failure = molsim::testing::for_all(22, 25, [](Gen& g, int) -> std::string {
    VibronicModel m = base_model();
    m.radiative_rate = g.uniform(0.5, 5.0) * kGHz;
    m.temperature = g.uniform(0.0, 30.0);
    for (std::size_t i = 0; i < 1 + g.index(3); ++i)
      m.vibron_modes.push_back({g.uniform(2.0, 10.0) * kTHz, g.uniform(0.0, 1.0), g.uniform(0.0, 50.0) * kGHz});
    m.phonons.coupling_weight = g.uniform(0.0, 1.0);
    m.dephasing.constant = g.uniform(0.0, 1.0) * kGHz;
    const FrequencyGrid grid = aligned_grid(13 * kTHz, 5 * kTHz, 2 * kGHz);
    const Spectrum s = emission_spectrum(m, grid);
    if (std::fabs(s.integral() - 1.0) > 1e-6) return "integral " + std::to_string(s.integral());
    for (double v : s.intensity)
      if (!(v >= 0.0)) return "negative intensity";
    return {};
  });
  EXPECT_TRUE(failure.empty()) << failure;
}

TEST(Spectrum, BranchingRatioMatchesWindowIntegral) {
  VibronicModel m = base_model();
  m.radiative_rate = 4.0 * kGHz;
  m.vibron_modes = {{6.0 * kTHz, 0.1, 20 * kGHz}, {10.0 * kTHz, 0.3, 20 * kGHz}};
  m.phonons.coupling_weight = 0.2;
  m.temperature = 4.0;
  const VibronicModel tuned = scale_to_debye_waller(m, 0.30);
  // Wide enough to hold the whole progression, so renormalization is inert.
  const double spacing = 0.5 * kGHz;
  const FrequencyGrid grid = aligned_grid(70 * kTHz, 10 * kTHz, spacing);
  const Spectrum s = emission_spectrum(tuned, grid);

  // Cells within +-5 gamma0 of the ZPL, summed directly, against the share of
  // the ZPL Lorentzian that falls on the same cells.
  const double gamma = tuned.zpl_linewidth();
  const auto half_cells = static_cast<long>(std::llround(5.0 * tuned.radiative_rate / spacing));
  const auto centre = static_cast<long>(grid.nearest_index(kZpl));
  double mass = 0.0;
  for (long k = centre - half_cells; k <= centre + half_cells; ++k) mass += s.intensity[static_cast<std::size_t>(k)] * spacing;
  const double edge = (static_cast<double>(half_cells) + 0.5) * spacing;
  const double lorentz_share = 2.0 * std::atan(2.0 * edge / gamma) / constants::pi;
  EXPECT_NEAR(mass / lorentz_share, zpl_branching_ratio(tuned), 1e-3);
  EXPECT_NEAR(s.integral_over(kZpl - 5.0 * tuned.radiative_rate, kZpl + 5.0 * tuned.radiative_rate), mass, 1e-12);
}

TEST(Spectrum, GridTooNarrow) {
  VibronicModel m = base_model();
  m.vibron_modes.push_back({6.0 * kTHz, 0.1, 0.0});
  EXPECT_THROW(emission_spectrum(m, aligned_grid(5 * kTHz, 50 * kGHz, 1 * kGHz)), GridTooNarrow);
  EXPECT_THROW(emission_spectrum(m, aligned_grid(8 * kTHz, 5 * kGHz, 1 * kGHz)), GridTooNarrow);
}

TEST(Spectrum, CsvExport) {
  const VibronicModel m = base_model();
  const Spectrum s = emission_spectrum(m, aligned_grid(20 * kGHz, 20 * kGHz, 10 * kGHz));
  std::istringstream in(to_csv(s));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "frequency_Hz,normalized_intensity");
  std::getline(in, line);
  const double hz = std::stod(line.substr(0, line.find(',')));
  EXPECT_NEAR(hz, (kZpl - 20 * kGHz) / constants::two_pi, 1e-3);
  std::size_t rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, s.intensity.size());
}

TEST(ModelValidation, RejectsInconsistentInputs) {
  VibronicModel m = base_model();
  m.vibron_modes.push_back({6.0 * kTHz, -0.1, 0.0});
  EXPECT_THROW(m.validate(), InvalidArgument);
  m = base_model();
  m.phonons.cutoff_frequency = 0.5 * m.phonons.peak_frequency;
  EXPECT_THROW(m.validate(), InvalidArgument);
  m = base_model();
  m.radiative_rate = 0.0;
  EXPECT_THROW(m.validate(), InvalidArgument);
}

TEST(ZplDephasing, ActivatedForm) {
  ZplDephasing d{1.0, 10.0, constants::boltzmann * 20.0 / constants::hbar};
  EXPECT_DOUBLE_EQ(d.rate(0.0), 1.0);
  EXPECT_NEAR(d.rate(20.0), 1.0 + 10.0 * std::exp(-1.0), 1e-12);
  VibronicModel m = base_model();
  m.dephasing = d;
  m.temperature = 20.0;
  EXPECT_NEAR(m.zpl_linewidth(), m.radiative_rate + d.rate(20.0), 1e-6);
}

TEST(EnergyGapLaw, Examples) {
  EXPECT_EQ(energy_gap_isc_rate(1e8, 1e-13, 0.0), 1e8);
  const double gap = 2e13;
  EXPECT_NEAR(energy_gap_isc_rate(1e8, 1e-13, 2 * gap) / energy_gap_isc_rate(1e8, 1e-13, gap),
              std::exp(-1e-13 * gap), 1e-14);
  double previous = 2e8;
  for (int k = 0; k < 20; ++k) {
    const double r = energy_gap_isc_rate(1e8, 1e-13, k * 1e12);
    EXPECT_LT(r, previous);
    previous = r;
  }
  EXPECT_THROW(energy_gap_isc_rate(0.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(energy_gap_isc_rate(1.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(energy_gap_isc_rate(1.0, 1.0, -1.0), DomainError);
}
