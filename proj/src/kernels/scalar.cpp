// Reference implementations. Plain loops, no intrinsics; every vector variant
// is tested against these.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "variants.hpp"

namespace molsim::kernels::detail {
namespace {

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double scaled_max_error(const double* err, const double* y0, const double* y1, double atol,
                        double rtol, std::size_t n) {
  double worst = 0.0;
  bool nan = false;
  for (std::size_t i = 0; i < n; ++i) {
    const double scale = atol + rtol * std::max(std::fabs(y0[i]), std::fabs(y1[i]));
    const double ratio = std::fabs(err[i]) / scale;
    nan |= std::isnan(ratio);
    worst = std::max(worst, ratio);
  }
  return nan ? HUGE_VAL : worst;
}

void zgemv(const std::complex<double>* a, const std::complex<double>* x,
           std::complex<double>* y, std::size_t n) {
  const double* ad = reinterpret_cast<const double*>(a);
  double* yd = reinterpret_cast<double*>(y);
  std::fill(yd, yd + 2 * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double xr = x[j].real();
    const double xi = x[j].imag();
    const double* col = ad + 2 * n * j;
    for (std::size_t i = 0; i < n; ++i) {
      const double ar = col[2 * i];
      const double ai = col[2 * i + 1];
      yd[2 * i] += ar * xr - ai * xi;
      yd[2 * i + 1] += ai * xr + ar * xi;
    }
  }
}

void lorentzian_density(const double* x, double center, double hwhm, double weight, double* out,
                        std::size_t n) {
  const double scale = weight * hwhm / std::numbers::pi;
  const double h2 = hwhm * hwhm;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - center;
    out[i] += scale / (d * d + h2);
  }
}

void lorentzian_cell_mass(const double* lo, const double* hi, double center, double hwhm,
                          double weight, double* out, std::size_t n) {
  const double scale = weight / std::numbers::pi;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = (hi[i] - center) / hwhm;
    const double b = (lo[i] - center) / hwhm;
    const double ab = a * b;
    // Same-side cells: the difference formula avoids cancellation in the tails.
    const double diff = ab > 0.0 ? std::atan((a - b) / (1.0 + ab)) : std::atan(a) - std::atan(b);
    out[i] += scale * diff;
  }
}

void cavity_response(const double* detuning, const CavityParams& p, double* r_re, double* r_im,
                     double* t_re, double* t_im, double* loss, std::size_t n) {
  const double mirror = std::sqrt(p.kappa_in * p.kappa_out);
  const double intrinsic = p.kappa - p.kappa_in - p.kappa_out;
  const double g2 = p.g * p.g;
  const double half_gamma = 0.5 * p.gamma;
  const double m_re0 = 0.25 * p.kappa * p.gamma + g2;
  const double half_sum = 0.5 * (p.kappa + p.gamma);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = detuning[i];
    const double m_re = m_re0 - d * d;
    const double m_im = d * half_sum;
    const double m2 = m_re * m_re + m_im * m_im;
    const double inv = m2 > 0.0 ? 1.0 / m2 : 0.0;
    const double chi_re = (half_gamma * m_re + d * m_im) * inv;
    const double chi_im = (d * m_re - half_gamma * m_im) * inv;
    t_re[i] = mirror * chi_re;
    t_im[i] = mirror * chi_im;
    r_re[i] = p.kappa_in * chi_re - 1.0;
    r_im[i] = p.kappa_in * chi_im;
    const double e2 = half_gamma * half_gamma + d * d;
    loss[i] = p.kappa_in * (intrinsic * e2 + p.gamma * g2) * inv;
  }
}

void window_mask(const double* s1, const double* t1, double min_t1, double max_s1,
                 std::uint8_t* mask, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) mask[i] = (t1[i] >= min_t1 && s1[i] <= max_s1) ? 1 : 0;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{axpy,
                             scaled_max_error,
                             zgemv,
                             lorentzian_density,
                             lorentzian_cell_mass,
                             cavity_response,
                             window_mask};
  return t;
}

}  // namespace molsim::kernels::detail
