#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "projlab/error.hpp"
#include "projlab/ff/fourier.hpp"
#include "projlab/ff/line.hpp"
#include "projlab/ff/subspace.hpp"
#include "support.hpp"

using namespace projlab;
using namespace projlab::ff;
using testing_support::ipow;

namespace {

// Direct transform written against plain integer coordinates.
std::vector<Complex> oracle_dft(std::uint32_t p, std::size_t n, const std::vector<Complex>& f) {
  const std::uint64_t size = ipow(p, n);
  auto coords = [&](std::uint64_t idx) {
    std::vector<std::uint64_t> c(n);
    for (std::size_t k = n; k-- > 0;) {
      c[k] = idx % p;
      idx /= p;
    }
    return c;
  };
  std::vector<Complex> out(size);
  for (std::uint64_t xi = 0; xi < size; ++xi) {
    const auto b = coords(xi);
    for (std::uint64_t x = 0; x < size; ++x) {
      const auto a = coords(x);
      std::uint64_t dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += a[k] * b[k];
      out[xi] += f[x] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(dot % p) / p);
    }
  }
  return out;
}

FpFunction random_function(std::uint32_t p, std::size_t n, Rng& rng) {
  std::vector<Complex> v(ipow(p, n));
  for (auto& z : v) z = Complex(rng.unit() * 2 - 1, rng.unit() * 2 - 1);
  return FpFunction(p, n, std::move(v));
}

struct Case {
  std::uint32_t p;
  std::size_t n;
};

std::vector<Case> small_cases() {
  std::vector<Case> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      if (ipow(p, n) <= 343) out.push_back({p, n});
    }
  }
  return out;
}

}  // namespace

TEST(Dft, DeltaTransformsToConstant) {
  const Field f = Field::prime(3);
  const Spectrum s = dft(FpFunction::indicator(f, 2, {FpVec::of(f, {0, 0})}));
  for (const auto& v : s.values()) EXPECT_NEAR(std::abs(v - Complex(1, 0)), 0.0, 1e-12);
}

TEST(Dft, LineThroughOriginIsSupportedOnItsPerp) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field f = Field::prime(p);
    for (const auto& v : enumerate_subspaces(f, 2, 1)) {
      const Spectrum s = dft(FpFunction::indicator(f, 2, v.elements()));
      const FpSubspace perp = v.orthogonal_complement();
      for (std::uint64_t i = 0; i < s.size(); ++i) {
        const double expected = perp.contains(point_at(f, 2, i)) ? p : 0.0;
        EXPECT_NEAR(std::abs(s[i] - Complex(expected, 0)), 0.0, 1e-9) << p << ' ' << i;
      }
    }
  }
}

TEST(Dft, AgreesWithOracleAndFactoredForm) {
  Rng rng(21);
  for (const auto& c : small_cases()) {
    const FpFunction f = random_function(c.p, c.n, rng);
    const Spectrum s = dft(f);
    const auto oracle = oracle_dft(c.p, c.n, f.values());
    const double tol = tolerance(f);
    for (std::uint64_t i = 0; i < s.size(); ++i) EXPECT_LE(std::abs(s[i] - oracle[i]), tol);
    EXPECT_LE(max_abs_diff(dft_factored(f), s), tol);
  }
}

TEST(Dft, PlancherelInversionTranslationLinearity) {
  Rng rng(3);
  for (const auto& c : small_cases()) {
    const Field field = Field::prime(c.p);
    for (int trial = 0; trial < 100; ++trial) {
      const FpFunction f = random_function(c.p, c.n, rng);
      const FpFunction g = random_function(c.p, c.n, rng);
      const double tol = tolerance(f);
      const Spectrum sf = dft(f);
      ASSERT_LE(plancherel_gap(f, sf), tol);
      ASSERT_LE(max_abs_diff(inverse_dft(sf), f), tol);

      const FpVec v = point_at(field, c.n, rng.below(f.size()));
      ASSERT_LE(max_abs_diff(dft(translate(f, v)), modulate(sf, v)), tol);

      const Complex alpha(rng.unit(), -rng.unit()), beta(-2 * rng.unit(), rng.unit());
      const FpFunction h = combine(alpha, f, beta, g);
      ASSERT_LE(max_abs_diff(dft(h), combine(alpha, sf, beta, dft(g))), 4 * tolerance(h) + 4 * tol);
    }
  }
}

TEST(FlatSpectrum, SmallExamples) {
  const Field f = Field::prime(3);
  const FpSubspace e1 = FpSubspace::span(f, 2, {FpVec::of(f, {1, 0})});
  const Spectrum s = flat_spectrum_expected(FpFlat(e1, FpVec::zero(f, 2)));
  for (std::uint64_t i = 0; i < 9; ++i) {
    const FpVec xi = point_at(f, 2, i);
    const double expected = xi[0] == f.zero() ? 3.0 : 0.0;
    EXPECT_NEAR(std::abs(s[i] - Complex(expected, 0)), 0.0, 1e-12);
  }

  // Shifted by (0,1): same support, phase depending on xi_2 only. With the
  // e^{-2 pi i x.xi/p} kernel the phase is e^{-2 pi i xi_2/3}.
  const FpFlat shifted(e1, FpVec::of(f, {0, 1}));
  const Spectrum t = flat_spectrum_expected(shifted);
  const Spectrum direct = dft(FpFunction::indicator(f, 2, shifted.points()));
  for (std::uint64_t i = 0; i < 9; ++i) {
    const FpVec xi = point_at(f, 2, i);
    const Complex expected =
        xi[0] == f.zero() ? 3.0 * std::polar(1.0, -2.0 * std::numbers::pi * xi[1].lo / 3.0) : Complex(0, 0);
    EXPECT_NEAR(std::abs(t[i] - expected), 0.0, 1e-12) << i;
    EXPECT_NEAR(std::abs(direct[i] - expected), 0.0, 1e-9) << i;
  }

  const Spectrum whole = flat_spectrum_expected(FpFlat(FpSubspace::whole(f, 2), FpVec::zero(f, 2)));
  EXPECT_NEAR(whole[0].real(), 9.0, 1e-12);
  for (std::uint64_t i = 1; i < 9; ++i) EXPECT_NEAR(std::abs(whole[i]), 0.0, 1e-12);
}

TEST(FlatSpectrum, MatchesTransformOfEveryFlat) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 2; n <= 3; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (const auto& w : enumerate_flats(f, n, k)) {
          const FpFunction ind = FpFunction::indicator(f, n, w.points());
          ASSERT_LE(max_abs_diff(dft(ind), flat_spectrum_expected(w)), tolerance(ind)) << w.to_string();
        }
      }
    }
  }
}

TEST(HighLow, SmallExamples) {
  const Field f = Field::prime(3);
  const FpFunction constant(3, 2, std::vector<Complex>(9, Complex(2, 0)));
  const auto [hi_c, lo_c] = high_low_split(constant);
  EXPECT_LE(hi_c.max_abs(), 1e-12);

  const auto line = FpLine::through(FpVec::of(f, {0, 0}), FpVec::of(f, {1, 1})).points();
  const FpFunction ind = FpFunction::indicator(f, 2, line);
  const auto [hi, lo] = high_low_split(ind);
  for (std::uint64_t i = 0; i < 9; ++i) {
    EXPECT_NEAR(std::abs(lo[i] - Complex(1.0 / 3, 0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(hi[i] - (ind[i] - Complex(1.0 / 3, 0))), 0.0, 1e-12);
  }
}

TEST(HighLow, SpectraSplitAtZeroFrequency) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const FpFunction f = random_function(5, 2, rng);
    const auto [hi, lo] = high_low_split(f);
    const Spectrum sh = dft(hi), sl = dft(lo), sf = dft(f);
    const double tol = tolerance(f);
    EXPECT_LE(std::abs(sh[0]), tol);
    EXPECT_LE(std::abs(sl[0] - sf[0]), tol);
    for (std::uint64_t i = 1; i < sf.size(); ++i) {
      EXPECT_LE(std::abs(sl[i]), tol);
      EXPECT_LE(std::abs(sh[i] - sf[i]), tol);
    }
  }
}

TEST(Dft, RespectsCap) {
  const FpFunction f = FpFunction::zeros(7, 3);
  EXPECT_THROW(dft(f, 100), SizeLimitError);
  EXPECT_THROW(dft_factored(f, 100), SizeLimitError);
}
