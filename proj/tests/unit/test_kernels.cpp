#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "molsim/foundation/errors.hpp"
#include "molsim/kernels/kernels.hpp"
#include "support/property.hpp"

using namespace molsim;
using kernels::Isa;
using cd = std::complex<double>;

namespace {

std::vector<Isa> variants() {
  std::vector<Isa> v{Isa::Scalar};
  if (kernels::isa_available(Isa::Avx2)) v.push_back(Isa::Avx2);
  return v;
}

std::vector<double> random_vector(molsim::testing::Gen& g, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) x = g.uniform(lo, hi);
  return v;
}

// Lengths that exercise both the vector body and every tail size.
constexpr std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 16, 31, 64, 257};

double rel(double a, double b) { return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)}); }

}  // namespace

TEST(Kernels, DispatchReportsAndPins) {
  EXPECT_TRUE(kernels::isa_available(Isa::Scalar));
  EXPECT_EQ(kernels::isa_name(Isa::Scalar), "scalar");
  {
    kernels::ScopedIsa pin(Isa::Scalar);
    EXPECT_EQ(kernels::active_isa(), Isa::Scalar);
  }
  EXPECT_EQ(kernels::active_isa(), kernels::detected_isa());
  if (!kernels::isa_available(Isa::Avx2)) {
    EXPECT_THROW(kernels::set_active_isa(Isa::Avx2), InvalidArgument);
  }
}

TEST(Kernels, SpanWrappersCheckLengths) {
  std::vector<double> x(3), y(4);
  EXPECT_THROW(kernels::axpy(1.0, x, y), InvalidArgument);
}

TEST(Kernels, AxpyMatchesReference) {
  molsim::testing::Gen g(11);
  for (Isa isa : variants()) {
    const auto& t = kernels::table(isa);
    for (std::size_t n : kLengths) {
      const auto x = random_vector(g, n, -5, 5);
      auto y = random_vector(g, n, -5, 5);
      const auto y0 = y;
      t.axpy(0.7, x.data(), y.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_LE(rel(y[i], y0[i] + 0.7 * x[i]), 4e-16) << kernels::isa_name(isa) << " n=" << n;
      }
    }
  }
}

TEST(Kernels, ScaledMaxErrorIsBitwiseIdenticalAcrossVariants) {
  molsim::testing::Gen g(12);
  for (std::size_t n : kLengths) {
    const auto e = random_vector(g, n, -1e-8, 1e-8);
    const auto a = random_vector(g, n, -3, 3);
    const auto b = random_vector(g, n, -3, 3);
    double ref = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ref = std::max(ref, std::fabs(e[i]) / (1e-12 + 1e-9 * std::max(std::fabs(a[i]), std::fabs(b[i]))));
    }
    for (Isa isa : variants()) {
      EXPECT_EQ(kernels::table(isa).scaled_max_error(e.data(), a.data(), b.data(), 1e-12, 1e-9, n),
                ref)
          << kernels::isa_name(isa) << " n=" << n;
    }
  }
}

TEST(Kernels, ScaledMaxErrorFlagsNaN) {
  std::vector<double> e{0.0, NAN, 0.0, 0.0, 0.0}, y(5, 1.0);
  for (Isa isa : variants()) {
    EXPECT_EQ(kernels::table(isa).scaled_max_error(e.data(), y.data(), y.data(), 1e-12, 1e-9, 5),
              HUGE_VAL);
  }
}

TEST(Kernels, ZgemvMatchesComplexReference) {
  molsim::testing::Gen g(13);
  for (std::size_t n : {1, 2, 3, 4, 5, 9, 16, 25}) {
    std::vector<cd> a(n * n), x(n), y(n);
    for (auto& v : a) v = {g.uniform(-1, 1), g.uniform(-1, 1)};
    for (auto& v : x) v = {g.uniform(-1, 1), g.uniform(-1, 1)};
    std::vector<cd> ref(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) ref[i] += a[i + j * n] * x[j];
    }
    for (Isa isa : variants()) {
      kernels::table(isa).zgemv(a.data(), x.data(), y.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_LE(std::abs(y[i] - ref[i]), 1e-14 * n) << kernels::isa_name(isa);
      }
    }
  }
}

TEST(Kernels, LorentzianDensityMatchesFormula) {
  molsim::testing::Gen g(14);
  for (std::size_t n : kLengths) {
    const auto x = random_vector(g, n, -10, 10);
    for (Isa isa : variants()) {
      std::vector<double> out(n, 1.0);
      kernels::table(isa).lorentzian_density(x.data(), 0.5, 0.3, 2.0, out.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        const double ref = 1.0 + 2.0 * (0.3 / M_PI) / ((x[i] - 0.5) * (x[i] - 0.5) + 0.09);
        EXPECT_LE(rel(out[i], ref), 1e-15);
      }
    }
  }
}

TEST(Kernels, LorentzianCellMassMatchesArctanDifference) {
  molsim::testing::Gen g(15);
  for (std::size_t n : kLengths) {
    std::vector<double> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = g.uniform(-50, 50);
      hi[i] = lo[i] + g.log_uniform(1e-6, 10.0);
    }
    const double c = g.uniform(-5, 5), h = g.log_uniform(1e-3, 3.0);
    for (Isa isa : variants()) {
      std::vector<double> out(n, 0.0);
      kernels::table(isa).lorentzian_cell_mass(lo.data(), hi.data(), c, h, 1.0, out.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        const double ref = (std::atan((hi[i] - c) / h) - std::atan((lo[i] - c) / h)) / M_PI;
        EXPECT_NEAR(out[i], ref, 1e-14 + 1e-12 * ref) << kernels::isa_name(isa);
      }
    }
  }
}

TEST(Kernels, LorentzianCellMassTilesToUnity) {
  // Contiguous cells over a wide span hold all but the far tails.
  const std::size_t n = 20001;
  std::vector<double> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = -1e4 + i * 1.0;
    hi[i] = lo[i] + 1.0;
  }
  for (Isa isa : variants()) {
    std::vector<double> out(n, 0.0);
    kernels::table(isa).lorentzian_cell_mass(lo.data(), hi.data(), 0.3, 0.01, 1.0, out.data(), n);
    double sum = 0.0;
    for (double v : out) sum += v;
    const double below = 0.3 - lo.front(), above = hi.back() - 0.3;
    const double tails = (std::atan(0.01 / below) + std::atan(0.01 / above)) / M_PI;
    EXPECT_NEAR(sum, 1.0 - tails, 1e-12);
  }
}

TEST(Kernels, CavityResponseMatchesComplexFormulaAndVariantsAgree) {
  molsim::testing::Gen g(16);
  for (std::size_t n : kLengths) {
    const auto d = random_vector(g, n, -30, 30);
    kernels::CavityParams p{2.0, 0.8, 0.7, 1.5, 3.0};
    std::vector<std::vector<double>> first;
    for (Isa isa : variants()) {
      std::vector<double> rr(n), ri(n), tr(n), ti(n), loss(n);
      kernels::table(isa).cavity_response(d.data(), p, rr.data(), ri.data(), tr.data(), ti.data(),
                                          loss.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        const cd s(0.0, d[i]);
        const cd chi = 1.0 / (s + p.kappa / 2 + p.g * p.g / (s + p.gamma / 2));
        const cd t = std::sqrt(p.kappa_in * p.kappa_out) * chi;
        const cd r = p.kappa_in * chi - 1.0;
        EXPECT_LE(std::abs(cd(tr[i], ti[i]) - t), 1e-14);
        EXPECT_LE(std::abs(cd(rr[i], ri[i]) - r), 1e-14);
        EXPECT_NEAR(std::norm(r) + std::norm(t) + loss[i], 1.0, 1e-12);
      }
      if (first.empty()) {
        first = {rr, ri, tr, ti, loss};
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          EXPECT_NEAR(rr[i], first[0][i], 1e-15);
          EXPECT_NEAR(loss[i], first[4][i], 1e-15);
        }
      }
    }
  }
}

TEST(Kernels, WindowMaskIsBitwiseIdentical) {
  molsim::testing::Gen g(17);
  for (std::size_t n : kLengths) {
    const auto s1 = random_vector(g, n, 1, 5);
    const auto t1 = random_vector(g, n, 0.5, 4);
    std::vector<std::uint8_t> ref(n);
    for (std::size_t i = 0; i < n; ++i) ref[i] = t1[i] >= 2.0 && s1[i] <= 3.5;
    for (Isa isa : variants()) {
      std::vector<std::uint8_t> m(n, 7);
      kernels::table(isa).window_mask(s1.data(), t1.data(), 2.0, 3.5, m.data(), n);
      EXPECT_EQ(m, ref) << kernels::isa_name(isa);
    }
  }
}
