#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference version and,
// on x86-64, an AVX2+FMA version. The variant is chosen once at startup from
// CPUID and can be overridden (tests pin each variant in turn).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace molsim::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True if this build carries the variant and the CPU can execute it.
bool isa_available(Isa isa) noexcept;

/// Best available variant on this machine.
Isa detected_isa() noexcept;

Isa active_isa() noexcept;

/// Throws InvalidArgument if `isa` is not available.
void set_active_isa(Isa isa);

/// RAII pin of the active variant, restored on destruction.
class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_active_isa(isa); }
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

/// Parameters of the two-sided cavity with an embedded emitter.
struct CavityParams {
  double kappa = 0.0;      // total field decay
  double kappa_in = 0.0;   // input mirror
  double kappa_out = 0.0;  // output mirror
  double gamma = 0.0;      // emitter decay
  double g = 0.0;          // emitter-cavity coupling (0 when decoupled)
};

/// Per-detuning cavity response, structure-of-arrays.
struct CavityResponseView {
  std::span<double> r_re, r_im, t_re, t_im, loss;
};

/// Function table of one variant.
struct KernelTable {
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // max_i |err_i| / (atol + rtol * max(|y0_i|, |y1_i|))
  double (*scaled_max_error)(const double* err, const double* y0, const double* y1,
                             double atol, double rtol, std::size_t n);
  // y = A x, A column-major n x n complex
  void (*zgemv)(const std::complex<double>* a, const std::complex<double>* x,
                std::complex<double>* y, std::size_t n);
  // out_i += weight * (hwhm / pi) / ((x_i - center)^2 + hwhm^2)
  void (*lorentzian_density)(const double* x, double center, double hwhm, double weight,
                             double* out, std::size_t n);
  // out_i += weight * (mass of a unit Lorentzian inside [lo_i, hi_i])
  void (*lorentzian_cell_mass)(const double* lo, const double* hi, double center, double hwhm,
                               double weight, double* out, std::size_t n);
  void (*cavity_response)(const double* detuning, const CavityParams& p, double* r_re,
                          double* r_im, double* t_re, double* t_im, double* loss,
                          std::size_t n);
  // mask_i = (t1_i >= min_t1 && s1_i <= max_s1)
  void (*window_mask)(const double* s1, const double* t1, double min_t1, double max_s1,
                      std::uint8_t* mask, std::size_t n);
};

const KernelTable& table(Isa isa);
const KernelTable& active();

// Span-based entry points bound to the active variant.
void axpy(double a, std::span<const double> x, std::span<double> y);
double scaled_max_error(std::span<const double> err, std::span<const double> y0,
                        std::span<const double> y1, double atol, double rtol);
void zgemv(std::span<const std::complex<double>> a, std::span<const std::complex<double>> x,
           std::span<std::complex<double>> y);
void lorentzian_density(std::span<const double> x, double center, double hwhm, double weight,
                        std::span<double> out);
void lorentzian_cell_mass(std::span<const double> lo, std::span<const double> hi, double center,
                          double hwhm, double weight, std::span<double> out);
void cavity_response(std::span<const double> detuning, const CavityParams& p,
                     const CavityResponseView& out);
void window_mask(std::span<const double> s1, std::span<const double> t1, double min_t1,
                 double max_s1, std::span<std::uint8_t> mask);

}  // namespace molsim::kernels
