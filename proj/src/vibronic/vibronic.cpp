#include "molsim/vibronic/vibronic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "molsim/foundation/errors.hpp"
#include "molsim/foundation/numeric.hpp"
#include "molsim/foundation/units.hpp"
#include "molsim/io/text.hpp"
#include "molsim/kernels/kernels.hpp"

namespace molsim::vibronic {
namespace {

double occupation(double omega, double temperature) {
  return temperature > 0.0 ? bose_occupation(omega, temperature) : 0.0;
}

// int_0^{w_max} J(w)/w^2 (2n+1) dw
double phonon_exponent(const PhononSpectralDensity& j, double temperature) {
  if (j.coupling_weight == 0.0) return 0.0;
  const double xm = j.cutoff_frequency / j.peak_frequency;
  if (temperature == 0.0) {
    return j.coupling_weight * (-std::expm1(-xm) - xm * std::exp(-xm));
  }
  const auto f = [&](double w) {
    return j.huang_rhys_density(w) * (2.0 * bose_occupation(w, temperature) + 1.0);
  };
  // Split at the peak so the adaptive rule sees the smooth rise and tail separately.
  const auto lo = numeric::integrate(f, 0.0, j.peak_frequency, 1e-12);
  const auto hi = numeric::integrate(f, j.peak_frequency, j.cutoff_frequency, 1e-12);
  const double value = lo.value + hi.value;
  const double error = lo.error_estimate + hi.error_estimate;
  if (!std::isfinite(value) || error > 1e-8 * std::fabs(value)) {
    throw IntegrationFailure("phonon Debye-Waller integral did not converge to 1e-8");
  }
  return value;
}

struct Line {
  double center;
  double fwhm;
  double weight;
};

// Per-mode distribution over emitted quanta: thermal zero-line weight, and the
// remaining weight shared in zero-temperature Franck-Condon proportions.
std::vector<double> mode_distribution(const VibronMode& mode, double temperature,
                                      const SpectrumOptions& options) {
  if (mode.huang_rhys == 0.0) return {1.0};
  const double s = mode.huang_rhys;
  const double z = std::exp(-s * (2.0 * occupation(mode.frequency, temperature) + 1.0));
  std::vector<double> fc = franck_condon_progression(s, options.max_quanta_per_mode);
  const double excited_fc = -std::expm1(-s);
  std::vector<double> out{z};
  for (std::size_t m = 1; m < fc.size(); ++m) {
    const double w = (1.0 - z) * fc[m] / excited_fc;
    if (w < options.min_line_weight && m > s) break;
    out.push_back(w);
  }
  return out;
}

void enumerate_lines(const VibronicModel& model, const std::vector<std::vector<double>>& dists,
                     std::size_t mode, double center, double fwhm, double weight,
                     const SpectrumOptions& options, std::vector<Line>& out) {
  if (mode == dists.size()) {
    out.push_back({center, fwhm, weight});
    return;
  }
  const VibronMode& vm = model.vibron_modes[mode];
  for (std::size_t m = 0; m < dists[mode].size(); ++m) {
    const double w = weight * dists[mode][m];
    if (w < options.min_line_weight) continue;
    const double q = static_cast<double>(m);
    enumerate_lines(model, dists, mode + 1, center - q * vm.frequency,
                    fwhm + q * vm.relaxation_rate, w, options, out);
  }
}

// Normalized one-phonon sideband density at offset x from a line centre.
double sideband_density(const PhononSpectralDensity& j, double temperature, double norm,
                        double x) {
  const double w = std::fabs(x);
  if (w == 0.0 || w > j.cutoff_frequency) return 0.0;
  const double n = occupation(w, temperature);
  return j.huang_rhys_density(w) * (x < 0.0 ? n + 1.0 : n) / norm;
}

// Adds the sideband mass of each cell into `mass`, using 4-point Gauss-Legendre
// on each smooth piece of the cell.
void add_sideband(const PhononSpectralDensity& j, double temperature, double norm, double center,
                  double weight, const std::vector<double>& lo, const std::vector<double>& hi,
                  std::vector<double>& mass) {
  static constexpr std::array<double, 4> nodes{-0.8611363115940526, -0.3399810435848563,
                                               0.3399810435848563, 0.8611363115940526};
  static constexpr std::array<double, 4> wts{0.3478548451374538, 0.6521451548625461,
                                             0.6521451548625461, 0.3478548451374538};
  const double wmax = j.cutoff_frequency;
  const double breaks[] = {center - wmax, center, center + wmax};
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] <= center - wmax || lo[i] >= center + wmax) continue;
    double a = lo[i];
    double acc = 0.0;
    const auto piece = [&](double p, double q) {
      const double mid = 0.5 * (p + q), half = 0.5 * (q - p);
      for (std::size_t k = 0; k < 4; ++k) {
        acc += wts[k] * half * sideband_density(j, temperature, norm, mid + half * nodes[k] - center);
      }
    };
    for (double b : breaks) {
      if (b > a && b < hi[i]) {
        piece(a, b);
        a = b;
      }
    }
    piece(a, hi[i]);
    mass[i] += weight * acc;
  }
}

}  // namespace

double PhononSpectralDensity::operator()(double omega) const noexcept {
  if (!(omega > 0.0) || omega > cutoff_frequency) return 0.0;
  const double x = omega / peak_frequency;
  return coupling_weight * peak_frequency * x * x * x * std::exp(-x);
}

double PhononSpectralDensity::huang_rhys_density(double omega) const noexcept {
  if (!(omega > 0.0) || omega > cutoff_frequency) return 0.0;
  const double x = omega / peak_frequency;
  return coupling_weight * x * std::exp(-x) / peak_frequency;
}

void PhononSpectralDensity::validate() const {
  if (!(coupling_weight >= 0.0)) throw InvalidArgument("phonon coupling weight must be >= 0");
  if (!(peak_frequency > 0.0)) throw InvalidArgument("phonon peak frequency must be > 0");
  if (!(cutoff_frequency > peak_frequency)) {
    throw InvalidArgument("phonon cutoff must exceed the peak frequency");
  }
}

double ZplDephasing::rate(double temperature) const {
  double r = constant;
  if (activated_amplitude != 0.0 && temperature > 0.0) {
    r += activated_amplitude *
         std::exp(-activation_energy / thermal_angular_frequency(temperature));
  }
  return r;
}

void VibronicModel::validate() const {
  if (!(zpl_frequency > 0.0)) throw InvalidArgument("ZPL frequency must be > 0");
  if (!(radiative_rate > 0.0)) throw InvalidArgument("radiative rate must be > 0");
  if (!(temperature >= 0.0)) throw InvalidArgument("temperature must be >= 0");
  for (const VibronMode& m : vibron_modes) {
    if (!(m.frequency > 0.0)) throw InvalidArgument("vibron frequency must be > 0");
    if (!(m.huang_rhys >= 0.0)) throw InvalidArgument("Huang-Rhys factor must be >= 0");
    if (!(m.relaxation_rate >= 0.0)) throw InvalidArgument("relaxation rate must be >= 0");
  }
  if (dephasing.constant < 0.0 || dephasing.activated_amplitude < 0.0 ||
      dephasing.activation_energy < 0.0) {
    throw InvalidArgument("dephasing terms must be >= 0");
  }
  phonons.validate();
}

double VibronicModel::zpl_linewidth() const { return radiative_rate + dephasing.rate(temperature); }

double Spectrum::integral() const {
  double sum = 0.0;
  for (double v : intensity) sum += v;
  return sum * grid.spacing();
}

double Spectrum::integral_over(double lo, double hi) const {
  const double dw = grid.spacing();
  double sum = 0.0;
  for (std::size_t i = 0; i < intensity.size(); ++i) {
    const double a = grid[i] - 0.5 * dw, b = grid[i] + 0.5 * dw;
    if (b > lo && a < hi) sum += intensity[i];
  }
  return sum * dw;
}

std::vector<double> franck_condon_progression(double s, unsigned max_quanta) {
  if (!(s >= 0.0)) throw InvalidArgument("Huang-Rhys factor must be >= 0");
  std::vector<double> p(max_quanta + 1, 0.0);
  p[0] = std::exp(-s);
  for (unsigned m = 1; m <= max_quanta; ++m) p[m] = p[m - 1] * s / m;
  return p;
}

double debye_waller_exponent(const VibronicModel& model) {
  model.validate();
  double exponent = 0.0;
  for (const VibronMode& m : model.vibron_modes) {
    exponent += m.huang_rhys * (2.0 * occupation(m.frequency, model.temperature) + 1.0);
  }
  return exponent + phonon_exponent(model.phonons, model.temperature);
}

double debye_waller(const VibronicModel& model) { return std::exp(-debye_waller_exponent(model)); }

double zpl_branching_ratio(const VibronicModel& model) { return debye_waller(model); }

VibronicModel scale_to_debye_waller(const VibronicModel& model, double target) {
  if (!(target > 0.0 && target <= 1.0)) throw InvalidArgument("target must lie in (0, 1]");
  const double exponent = debye_waller_exponent(model);
  if (exponent == 0.0) {
    if (target == 1.0) return model;
    throw InvalidArgument("model has no vibronic or phonon coupling to scale");
  }
  // The exponent is linear in every S_i and in the phonon weight.
  const double factor = -std::log(target) / exponent;
  VibronicModel out = model;
  for (VibronMode& m : out.vibron_modes) m.huang_rhys *= factor;
  out.phonons.coupling_weight *= factor;
  return out;
}

Spectrum emission_spectrum(const VibronicModel& model, const FrequencyGrid& grid,
                           const SpectrumOptions& options) {
  model.validate();
  double max_vibron = 0.0;
  for (const VibronMode& m : model.vibron_modes) max_vibron = std::max(max_vibron, m.frequency);
  const double need_lo = model.zpl_frequency - 1.2 * max_vibron;
  const double need_hi = model.zpl_frequency + 5.0 * model.radiative_rate;
  if (grid.start() > need_lo || grid.stop() < need_hi) {
    throw GridTooNarrow("grid must span [zpl - 1.2 max vibron, zpl + 5 gamma0]");
  }

  const double temperature = model.temperature;
  std::vector<std::vector<double>> dists;
  for (const VibronMode& m : model.vibron_modes) {
    dists.push_back(mode_distribution(m, temperature, options));
  }
  std::vector<Line> lines;
  enumerate_lines(model, dists, 0, model.zpl_frequency, model.zpl_linewidth(), 1.0, options,
                  lines);

  const double s_phonon = phonon_exponent(model.phonons, temperature);
  const double zero_phonon = std::exp(-s_phonon);

  const std::size_t n = grid.size();
  const double dw = grid.spacing();
  std::vector<double> lo(n), hi(n), mass(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = grid[i] - 0.5 * dw;
    hi[i] = grid[i] + 0.5 * dw;
  }
  for (const Line& line : lines) {
    kernels::lorentzian_cell_mass(lo, hi, line.center, 0.5 * line.fwhm, line.weight * zero_phonon,
                                  mass);
    if (s_phonon > 0.0) {
      add_sideband(model.phonons, temperature, s_phonon, line.center,
                   line.weight * (1.0 - zero_phonon), lo, hi, mass);
    }
  }

  double total = 0.0;
  for (double m : mass) total += m;
  if (!(total > 0.0)) throw GridTooNarrow("no emission falls on the grid");
  Spectrum out{grid, std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) out.intensity[i] = mass[i] / (total * dw);
  return out;
}

double energy_gap_isc_rate(double prefactor, double gap_slope, double energy_gap) {
  if (!(prefactor > 0.0)) throw DomainError("ISC prefactor must be > 0");
  if (!(gap_slope > 0.0)) throw DomainError("energy-gap slope must be > 0");
  if (!(energy_gap >= 0.0)) throw DomainError("energy gap must be >= 0");
  return prefactor * std::exp(-gap_slope * energy_gap);
}

std::string to_csv(const Spectrum& spectrum) {
  std::vector<double> hz(spectrum.intensity.size()), density(spectrum.intensity.size());
  for (std::size_t i = 0; i < hz.size(); ++i) {
    hz[i] = spectrum.grid[i] / constants::two_pi;
    density[i] = spectrum.intensity[i] * constants::two_pi;
  }
  return io::csv_table({"frequency_Hz", "normalized_intensity"}, {hz, density});
}

}  // namespace molsim::vibronic
