#include <atomic>

#include "molsim/foundation/errors.hpp"
#include "variants.hpp"

namespace molsim::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(MOLSIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{detected_isa()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: {
      static const bool has = cpu_has_avx2();
      return has;
    }
  }
  return false;
}

Isa detected_isa() noexcept { return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() noexcept { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw InvalidArgument("kernel variant '" + std::string(isa_name(isa)) +
                          "' is not available on this machine");
  }
  active_slot().store(isa, std::memory_order_relaxed);
}

const KernelTable& table(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return detail::scalar_table();
    case Isa::Avx2:
#if defined(MOLSIM_HAVE_AVX2)
      if (isa_available(Isa::Avx2)) return detail::avx2_table();
#endif
      break;
  }
  throw InvalidArgument("kernel variant '" + std::string(isa_name(isa)) + "' is not available");
}

const KernelTable& active() { return table(active_isa()); }

namespace {
void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw InvalidArgument(std::string(what) + ": length mismatch");
}
}  // namespace

void axpy(double a, std::span<const double> x, std::span<double> y) {
  require_same(x.size(), y.size(), "axpy");
  active().axpy(a, x.data(), y.data(), x.size());
}

double scaled_max_error(std::span<const double> err, std::span<const double> y0,
                        std::span<const double> y1, double atol, double rtol) {
  require_same(err.size(), y0.size(), "scaled_max_error");
  require_same(err.size(), y1.size(), "scaled_max_error");
  return active().scaled_max_error(err.data(), y0.data(), y1.data(), atol, rtol, err.size());
}

void zgemv(std::span<const std::complex<double>> a, std::span<const std::complex<double>> x,
           std::span<std::complex<double>> y) {
  require_same(x.size(), y.size(), "zgemv");
  require_same(a.size(), x.size() * x.size(), "zgemv");
  active().zgemv(a.data(), x.data(), y.data(), x.size());
}

void lorentzian_density(std::span<const double> x, double center, double hwhm, double weight,
                        std::span<double> out) {
  require_same(x.size(), out.size(), "lorentzian_density");
  active().lorentzian_density(x.data(), center, hwhm, weight, out.data(), x.size());
}

void lorentzian_cell_mass(std::span<const double> lo, std::span<const double> hi, double center,
                          double hwhm, double weight, std::span<double> out) {
  require_same(lo.size(), hi.size(), "lorentzian_cell_mass");
  require_same(lo.size(), out.size(), "lorentzian_cell_mass");
  active().lorentzian_cell_mass(lo.data(), hi.data(), center, hwhm, weight, out.data(), lo.size());
}

void cavity_response(std::span<const double> detuning, const CavityParams& p,
                     const CavityResponseView& out) {
  const std::size_t n = detuning.size();
  require_same(n, out.r_re.size(), "cavity_response");
  require_same(n, out.r_im.size(), "cavity_response");
  require_same(n, out.t_re.size(), "cavity_response");
  require_same(n, out.t_im.size(), "cavity_response");
  require_same(n, out.loss.size(), "cavity_response");
  active().cavity_response(detuning.data(), p, out.r_re.data(), out.r_im.data(), out.t_re.data(),
                           out.t_im.data(), out.loss.data(), n);
}

void window_mask(std::span<const double> s1, std::span<const double> t1, double min_t1,
                 double max_s1, std::span<std::uint8_t> mask) {
  require_same(s1.size(), t1.size(), "window_mask");
  require_same(s1.size(), mask.size(), "window_mask");
  active().window_mask(s1.data(), t1.data(), min_t1, max_s1, mask.data(), s1.size());
}

}  // namespace molsim::kernels
