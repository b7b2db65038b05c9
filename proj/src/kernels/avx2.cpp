// AVX2 + FMA variants. Compiled with -mavx2 -mfma -ffp-contract=off; only
// reached when CPUID reports both extensions.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "variants.hpp"

namespace molsim::kernels::detail {
namespace {

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

// Cephes atan, four lanes. Max error a couple of ulp against libm.
inline __m256d atan_pd(__m256d x) {
  const __m256d sign = _mm256_and_pd(x, _mm256_set1_pd(-0.0));
  __m256d ax = abs_pd(x);

  const __m256d big = _mm256_cmp_pd(ax, _mm256_set1_pd(2.41421356237309504880), _CMP_GT_OQ);
  const __m256d mid = _mm256_andnot_pd(big, _mm256_cmp_pd(ax, _mm256_set1_pd(0.66), _CMP_GT_OQ));

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d x_big = _mm256_div_pd(_mm256_set1_pd(-1.0), ax);
  const __m256d x_mid = _mm256_div_pd(_mm256_sub_pd(ax, one), _mm256_add_pd(ax, one));
  __m256d xr = _mm256_blendv_pd(ax, x_mid, mid);
  xr = _mm256_blendv_pd(xr, x_big, big);

  constexpr double morebits = 6.123233995736765886130e-17;
  __m256d base = _mm256_blendv_pd(_mm256_setzero_pd(), _mm256_set1_pd(std::numbers::pi / 4), mid);
  base = _mm256_blendv_pd(base, _mm256_set1_pd(std::numbers::pi / 2), big);
  __m256d extra = _mm256_blendv_pd(_mm256_setzero_pd(), _mm256_set1_pd(0.5 * morebits), mid);
  extra = _mm256_blendv_pd(extra, _mm256_set1_pd(morebits), big);

  const __m256d z = _mm256_mul_pd(xr, xr);
  __m256d p = _mm256_set1_pd(-8.750608600031904122785e-1);
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(-1.615753718733365076637e1));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(-7.500855792314704667340e1));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(-1.228866684490136173410e2));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(-6.485021904942025371773e1));
  __m256d q = _mm256_add_pd(z, _mm256_set1_pd(2.485846490142306297962e1));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(1.650270098316988542046e2));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(4.328810604912902668951e2));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(4.853903996359136964868e2));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(1.945506571482613964425e2));

  __m256d r = _mm256_div_pd(_mm256_mul_pd(z, p), q);
  r = _mm256_fmadd_pd(xr, r, xr);
  r = _mm256_add_pd(_mm256_add_pd(base, r), extra);
  return _mm256_or_pd(r, sign);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

double scaled_max_error(const double* err, const double* y0, const double* y1, double atol,
                        double rtol, std::size_t n) {
  const __m256d vatol = _mm256_set1_pd(atol);
  const __m256d vrtol = _mm256_set1_pd(rtol);
  __m256d worst = _mm256_setzero_pd();
  __m256d nan = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d m = _mm256_max_pd(abs_pd(_mm256_loadu_pd(y0 + i)), abs_pd(_mm256_loadu_pd(y1 + i)));
    const __m256d scale = _mm256_add_pd(vatol, _mm256_mul_pd(vrtol, m));
    const __m256d ratio = _mm256_div_pd(abs_pd(_mm256_loadu_pd(err + i)), scale);
    nan = _mm256_or_pd(nan, _mm256_cmp_pd(ratio, ratio, _CMP_UNORD_Q));
    worst = _mm256_max_pd(worst, ratio);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, worst);
  double result = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  bool any_nan = _mm256_movemask_pd(nan) != 0;
  for (; i < n; ++i) {
    const double scale = atol + rtol * std::max(std::fabs(y0[i]), std::fabs(y1[i]));
    const double ratio = std::fabs(err[i]) / scale;
    any_nan |= std::isnan(ratio);
    result = std::max(result, ratio);
  }
  return any_nan ? HUGE_VAL : result;
}

void zgemv(const std::complex<double>* a, const std::complex<double>* x,
           std::complex<double>* y, std::size_t n) {
  const double* ad = reinterpret_cast<const double*>(a);
  double* yd = reinterpret_cast<double*>(y);
  std::fill(yd, yd + 2 * n, 0.0);
  const std::size_t pairs = n / 2;
  for (std::size_t j = 0; j < n; ++j) {
    const __m256d xr = _mm256_set1_pd(x[j].real());
    const __m256d xi = _mm256_set1_pd(x[j].imag());
    const double* col = ad + 2 * n * j;
    for (std::size_t p = 0; p < pairs; ++p) {
      const __m256d av = _mm256_loadu_pd(col + 4 * p);
      const __m256d swapped = _mm256_permute_pd(av, 0b0101);
      const __m256d prod = _mm256_fmaddsub_pd(av, xr, _mm256_mul_pd(swapped, xi));
      _mm256_storeu_pd(yd + 4 * p, _mm256_add_pd(_mm256_loadu_pd(yd + 4 * p), prod));
    }
    if (n % 2 != 0) {
      const std::size_t i = n - 1;
      const double ar = col[2 * i];
      const double ai = col[2 * i + 1];
      yd[2 * i] += ar * x[j].real() - ai * x[j].imag();
      yd[2 * i + 1] += ai * x[j].real() + ar * x[j].imag();
    }
  }
}

void lorentzian_density(const double* x, double center, double hwhm, double weight, double* out,
                        std::size_t n) {
  const double scale = weight * hwhm / std::numbers::pi;
  const double h2 = hwhm * hwhm;
  const __m256d vc = _mm256_set1_pd(center);
  const __m256d vs = _mm256_set1_pd(scale);
  const __m256d vh2 = _mm256_set1_pd(h2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), vc);
    const __m256d den = _mm256_fmadd_pd(d, d, vh2);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), _mm256_div_pd(vs, den)));
  }
  for (; i < n; ++i) {
    const double d = x[i] - center;
    out[i] += scale / (d * d + h2);
  }
}

void lorentzian_cell_mass(const double* lo, const double* hi, double center, double hwhm,
                          double weight, double* out, std::size_t n) {
  const double scale = weight / std::numbers::pi;
  const __m256d vc = _mm256_set1_pd(center);
  const __m256d vs = _mm256_set1_pd(scale);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d vh = _mm256_set1_pd(hwhm);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_div_pd(_mm256_sub_pd(_mm256_loadu_pd(hi + i), vc), vh);
    const __m256d b = _mm256_div_pd(_mm256_sub_pd(_mm256_loadu_pd(lo + i), vc), vh);
    const __m256d ab = _mm256_mul_pd(a, b);
    const __m256d same_side = _mm256_cmp_pd(ab, _mm256_setzero_pd(), _CMP_GT_OQ);
    const __m256d tail = atan_pd(_mm256_div_pd(_mm256_sub_pd(a, b), _mm256_add_pd(one, ab)));
    const __m256d straddle = _mm256_sub_pd(atan_pd(a), atan_pd(b));
    const __m256d diff = _mm256_blendv_pd(straddle, tail, same_side);
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(vs, diff, _mm256_loadu_pd(out + i)));
  }
  for (; i < n; ++i) {
    const double a = (hi[i] - center) / hwhm;
    const double b = (lo[i] - center) / hwhm;
    const double ab = a * b;
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

  const __m256d v_mirror = _mm256_set1_pd(mirror);
  const __m256d v_intr = _mm256_set1_pd(intrinsic);
  const __m256d v_hg = _mm256_set1_pd(half_gamma);
  const __m256d v_hg2 = _mm256_set1_pd(half_gamma * half_gamma);
  const __m256d v_m0 = _mm256_set1_pd(m_re0);
  const __m256d v_hs = _mm256_set1_pd(half_sum);
  const __m256d v_kin = _mm256_set1_pd(p.kappa_in);
  const __m256d v_gg = _mm256_set1_pd(p.gamma * g2);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_loadu_pd(detuning + i);
    const __m256d d2 = _mm256_mul_pd(d, d);
    const __m256d m_re = _mm256_sub_pd(v_m0, d2);
    const __m256d m_im = _mm256_mul_pd(d, v_hs);
    const __m256d m2 = _mm256_fmadd_pd(m_re, m_re, _mm256_mul_pd(m_im, m_im));
    const __m256d inv = _mm256_and_pd(_mm256_div_pd(one, m2), _mm256_cmp_pd(m2, zero, _CMP_GT_OQ));
    const __m256d chi_re = _mm256_mul_pd(_mm256_fmadd_pd(v_hg, m_re, _mm256_mul_pd(d, m_im)), inv);
    const __m256d chi_im = _mm256_mul_pd(_mm256_fmsub_pd(d, m_re, _mm256_mul_pd(v_hg, m_im)), inv);
    _mm256_storeu_pd(t_re + i, _mm256_mul_pd(v_mirror, chi_re));
    _mm256_storeu_pd(t_im + i, _mm256_mul_pd(v_mirror, chi_im));
    _mm256_storeu_pd(r_re + i, _mm256_fmsub_pd(v_kin, chi_re, one));
    _mm256_storeu_pd(r_im + i, _mm256_mul_pd(v_kin, chi_im));
    const __m256d e2 = _mm256_add_pd(v_hg2, d2);
    const __m256d l = _mm256_mul_pd(v_kin, _mm256_fmadd_pd(v_intr, e2, v_gg));
    _mm256_storeu_pd(loss + i, _mm256_mul_pd(l, inv));
  }
  for (; i < n; ++i) {
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
    loss[i] = p.kappa_in * (intrinsic * (half_gamma * half_gamma + d * d) + p.gamma * g2) * inv;
  }
}

void window_mask(const double* s1, const double* t1, double min_t1, double max_s1,
                 std::uint8_t* mask, std::size_t n) {
  const __m256d vmin = _mm256_set1_pd(min_t1);
  const __m256d vmax = _mm256_set1_pd(max_s1);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ok_t = _mm256_cmp_pd(_mm256_loadu_pd(t1 + i), vmin, _CMP_GE_OQ);
    const __m256d ok_s = _mm256_cmp_pd(_mm256_loadu_pd(s1 + i), vmax, _CMP_LE_OQ);
    const int bits = _mm256_movemask_pd(_mm256_and_pd(ok_t, ok_s));
    for (int k = 0; k < 4; ++k) mask[i + k] = static_cast<std::uint8_t>((bits >> k) & 1);
  }
  for (; i < n; ++i) mask[i] = (t1[i] >= min_t1 && s1[i] <= max_s1) ? 1 : 0;
}

}  // namespace

const KernelTable& avx2_table() {
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
