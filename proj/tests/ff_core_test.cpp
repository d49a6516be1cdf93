#include <gtest/gtest.h>

#include <map>
#include <set>

#include "projlab/error.hpp"
#include "projlab/ff/line.hpp"
#include "projlab/ff/projection.hpp"
#include "projlab/ff/subspace.hpp"
#include "support.hpp"

using namespace projlab;
using namespace projlab::ff;
using testing_support::gaussian_oracle;
using testing_support::ipow;
using testing_support::span_indices;

TEST(Field, PrimeArithmeticMatchesModularIntegers) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    const Field f = Field::prime(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        EXPECT_EQ(f.add({a, 0}, {b, 0}).lo, (a + b) % p);
        EXPECT_EQ(f.sub({a, 0}, {b, 0}).lo, (a + p - b) % p);
        EXPECT_EQ(f.mul({a, 0}, {b, 0}).lo, (a * b) % p);
      }
      if (a) {
        EXPECT_EQ(f.mul({a, 0}, f.inv({a, 0})), f.one());
      }
    }
  }
}

TEST(Field, RejectsComposites) {
  EXPECT_THROW(Field::prime(1), DomainError);
  EXPECT_THROW(Field::prime(9), DomainError);
  EXPECT_THROW(Field::quadratic(15), DomainError);
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
}

TEST(Field, QuadraticModulusIsIrreducibleAndFirst) {
  EXPECT_EQ(Field::quadratic(2).c0(), 1u);
  EXPECT_EQ(Field::quadratic(2).c1(), 1u);
  EXPECT_EQ(Field::quadratic(3).c0(), 1u);
  EXPECT_EQ(Field::quadratic(3).c1(), 0u);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Field f = Field::quadratic(p);
    for (std::uint32_t x = 0; x < p; ++x) EXPECT_NE((x * x + f.c1() * x + f.c0()) % p, 0u) << p;
  }
}

TEST(Field, QuadraticProductMatchesPolynomialReduction) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field f = Field::quadratic(p);
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      for (std::uint64_t j = 0; j < f.order(); ++j) {
        const Scalar a = f.element(i), b = f.element(j);
        // (a0 + a1 t)(b0 + b1 t) with t^2 = -c1 t - c0.
        const std::uint64_t t2 = a.hi * b.hi;
        const std::uint64_t lo = (a.lo * b.lo + t2 * (p - f.c0())) % p;
        const std::uint64_t hi = (a.lo * b.hi + a.hi * b.lo + t2 * (p - f.c1())) % p;
        const Scalar got = f.mul(a, b);
        EXPECT_EQ(got.lo, lo);
        EXPECT_EQ(got.hi, hi);
      }
    }
  }
}

TEST(Field, QuadraticMultiplicativeGroupIsCyclic) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field f = Field::quadratic(p);
    const std::uint64_t q = f.order();
    bool generator = false;
    for (std::uint64_t i = 1; i < q && !generator; ++i) {
      std::set<std::uint64_t> seen;
      Scalar x = f.one();
      for (std::uint64_t k = 0; k < q - 1; ++k) {
        seen.insert(f.index(x));
        x = f.mul(x, f.element(i));
      }
      generator = seen.size() == q - 1;
    }
    EXPECT_TRUE(generator) << p;
    for (std::uint64_t i = 1; i < q; ++i) EXPECT_EQ(f.mul(f.element(i), f.inv(f.element(i))), f.one());
  }
}

TEST(Field, FormatParseRoundTrip) {
  const Field f = Field::quadratic(5);
  for (std::uint64_t i = 0; i < f.order(); ++i) EXPECT_EQ(f.parse(f.format(f.element(i))), f.element(i));
  EXPECT_EQ(f.parse("5:-1"), (Scalar{0, 4}));
  EXPECT_THROW(f.parse("1:"), DomainError);
  EXPECT_THROW(Field::prime(5).parse("x"), DomainError);
}

TEST(EnumerateSubspaces, SmallExamples) {
  EXPECT_EQ(enumerate_subspaces(Field::prime(2), 3, 1).size(), 7u);
  EXPECT_EQ(enumerate_flats(Field::prime(3), 2, 1).size(), 12u);
  const auto zero = enumerate_subspaces(Field::prime(2), 2, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].dim(), 0u);
  EXPECT_EQ(zero[0].to_string(), "{0}");
}

TEST(EnumerateSubspaces, MatchesBruteForceSpans) {
  for (std::uint32_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto pts = testing_support::points(f, n);
      for (std::size_t k = 0; k <= n; ++k) {
        std::set<std::set<std::uint64_t>> spans;
        std::vector<std::size_t> pick(k, 0);
        for (;;) {
          std::vector<FpVec> gens;
          for (auto i : pick) gens.push_back(pts[i]);
          auto s = span_indices(f, n, gens);
          if (s.size() == ipow(p, k)) spans.insert(std::move(s));
          std::size_t j = 0;
          while (j < k && ++pick[j] == pts.size()) pick[j++] = 0;
          if (j == k) break;
        }
        const auto listed = enumerate_subspaces(f, n, k);
        ASSERT_EQ(listed.size(), spans.size()) << p << ' ' << n << ' ' << k;
        std::set<std::set<std::uint64_t>> from_listed;
        for (const auto& v : listed) {
          std::set<std::uint64_t> idx;
          for (const auto& e : v.elements()) idx.insert(point_index(e));
          from_listed.insert(idx);
        }
        EXPECT_EQ(from_listed, spans);
      }
    }
  }
}

TEST(EnumerateSubspaces, CountsMatchGaussianBinomial) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        const std::uint64_t expected = gaussian_oracle(p, n, k);
        EXPECT_EQ(gaussian_binomial(p, n, k), expected);
        const auto subs = enumerate_subspaces(f, n, k, 100'000'000);
        EXPECT_EQ(subs.size(), expected) << p << ' ' << n << ' ' << k;
        EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
        EXPECT_EQ(std::adjacent_find(subs.begin(), subs.end()), subs.end());
        const auto flats = enumerate_flats(f, n, k, 100'000'000);
        EXPECT_EQ(flats.size(), expected * ipow(p, n - k));
        EXPECT_TRUE(std::is_sorted(flats.begin(), flats.end()));
      }
    }
  }
}

TEST(EnumerateSubspaces, GuardsAndDomain) {
  EXPECT_THROW(enumerate_subspaces(Field::prime(2), 2, 3), DomainError);
  EXPECT_THROW(enumerate_subspaces(Field::prime(7), 4, 2, 1000), SizeLimitError);
}

TEST(EnumerateSubspaces, SubspacesThroughAFixedLine) {
  for (std::uint32_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 2; n <= 4; ++n) {
      std::vector<std::int64_t> e1(n, 0);
      e1[0] = 1;
      std::vector<Scalar> c;
      for (auto v : e1) c.push_back(f.from_int(v));
      const FpSubspace line = FpSubspace::span(f, n, {FpVec(f, c)});
      for (std::size_t k = 1; k <= n; ++k) {
        std::size_t count = 0;
        for (const auto& v : enumerate_subspaces(f, n, k, 100'000'000)) count += v.contains(line) ? 1 : 0;
        EXPECT_EQ(count, gaussian_oracle(p, n - 1, k - 1)) << p << ' ' << n << ' ' << k;
      }
    }
  }
}

TEST(FpLine, SmallExamples) {
  const Field f3 = Field::prime(3);
  const FpLine l = FpLine::through(FpVec::of(f3, {0, 0}), FpVec::of(f3, {1, 2}));
  const auto got = l.points();
  EXPECT_EQ(std::set<FpVec>(got.begin(), got.end()),
            (std::set<FpVec>{FpVec::of(f3, {0, 0}), FpVec::of(f3, {1, 2}), FpVec::of(f3, {2, 1})}));

  const Field f5 = Field::prime(5);
  const FpLine v = FpLine::through(FpVec::of(f5, {1, 1}), FpVec::of(f5, {1, 3}));
  EXPECT_EQ(v.direction(), FpVec::of(f5, {0, 1}));
  EXPECT_EQ(v.base(), FpVec::of(f5, {1, 0}));

  const auto all = testing_support::points(f3, 2);
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (a == b) continue;
      EXPECT_EQ(FpLine::through(a, b), FpLine::through(b, a));
    }
  }
  EXPECT_THROW(FpLine::through(all[1], all[1]), DegenerateInputError);
}

TEST(FpLine, BaseIsSmallestPointAndLinesMeetOnce) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field f = Field::prime(p);
    for (std::size_t n = 2; n <= 3; ++n) {
      std::vector<std::set<std::uint64_t>> lines;
      for (const auto& flat : enumerate_flats(f, n, 1, 100'000'000)) {
        const FpLine l = FpLine::from_point_direction(flat.translate(), flat.subspace().basis()[0]);
        const auto pts = l.points();
        ASSERT_EQ(pts.size(), p);
        EXPECT_EQ(*std::min_element(pts.begin(), pts.end()), l.base());
        std::set<std::uint64_t> idx;
        for (const auto& x : pts) idx.insert(point_index(x));
        EXPECT_EQ(idx.size(), p);
        lines.push_back(std::move(idx));
      }
      for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
          std::size_t shared = 0;
          for (auto x : lines[i]) shared += lines[j].count(x);
          ASSERT_LE(shared, 1u);
        }
      }
    }
  }
}

TEST(FpLine, QuadraticFieldLinesHaveQPoints) {
  const Field f = Field::quadratic(3);
  const FpLine l = FpLine::through(FpVec::of(f, {0, 0}), FpVec(f, {f.element(4), f.one()}));
  EXPECT_EQ(l.points().size(), 9u);
  EXPECT_EQ(l.direction()[0], f.one());
}

TEST(CosetProject, SmallExamples) {
  const Field f3 = Field::prime(3), f5 = Field::prime(5);
  const FpSubspace e1 = FpSubspace::span(f3, 2, {FpVec::of(f3, {1, 0})});
  EXPECT_EQ(coset_project(e1, testing_support::points(f3, 2)).size(), 3u);
  EXPECT_EQ(coset_project(e1, {FpVec::of(f3, {0, 0}), FpVec::of(f3, {0, 1})}).size(), 1u);
  const FpSubspace self = FpSubspace::span(f5, 2, {FpVec::of(f5, {1, 2})});
  EXPECT_EQ(self.orthogonal_complement(), self);
  EXPECT_EQ(coset_project(self, testing_support::points(f5, 2)).size(), 5u);
  EXPECT_THROW(coset_project(e1, {FpVec::of(f5, {0, 0})}), DomainError);
}

TEST(CosetProject, MonotoneAndBounded) {
  Rng rng(11);
  for (std::uint32_t p : {3u, 5u}) {
    const Field f = Field::prime(p);
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto subs = enumerate_subspaces(f, 3, k);
      for (int trial = 0; trial < 20; ++trial) {
        auto x = testing_support::random_subset(f, 3, 1 + rng.below(20), rng);
        auto bigger = x;
        for (const auto& extra : testing_support::random_subset(f, 3, 5, rng)) bigger.push_back(extra);
        const FpSubspace& v = subs[rng.below(subs.size())];
        const std::size_t small = coset_project(v, x).size();
        EXPECT_LE(small, coset_project(v, bigger).size());
        EXPECT_LE(small, std::min<std::uint64_t>(x.size(), ipow(p, k)));
        EXPECT_EQ(CosetCounter(v).count(x), small);
        // Independent count: group x by its dot products with a basis of V.
        std::set<std::vector<Scalar>> labels;
        for (const auto& pt : x) {
          std::vector<Scalar> key;
          for (const auto& b : v.basis()) key.push_back(pt.dot(b));
          labels.insert(key);
        }
        EXPECT_EQ(labels.size(), small);
      }
    }
  }
}

TEST(RadialLines, SmallExamples) {
  const Field f = Field::prime(3);
  const FpVec o = FpVec::of(f, {0, 0});
  EXPECT_EQ(radial_lines(o, testing_support::points(f, 2)).size(), 4u);
  EXPECT_EQ(radial_lines(o, {FpVec::of(f, {1, 1}), FpVec::of(f, {2, 2})}).size(), 1u);
  EXPECT_TRUE(radial_lines(o, {o}).empty());
}

TEST(RadialLines, PartitionTheTargets) {
  Rng rng(5);
  const Field f = Field::prime(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto y = testing_support::random_subset(f, 2, 1 + rng.below(25), rng);
    const FpVec x = point_at(f, 2, rng.below(25));
    const auto lines = radial_lines(x, y);
    EXPECT_EQ(radial_count(x, y), lines.size());
    for (const auto& pt : y) {
      if (pt == x) continue;
      const auto hits = std::count_if(lines.begin(), lines.end(), [&](const FpLine& l) { return l.contains(pt); });
      EXPECT_EQ(hits, 1);
    }
    for (const auto& l : lines) EXPECT_TRUE(l.contains(x));
  }
}

TEST(OrthogonalComplement, SmallExamples) {
  const Field f3 = Field::prime(3);
  EXPECT_EQ(FpSubspace::span(f3, 2, {FpVec::of(f3, {1, 0})}).orthogonal_complement(),
            FpSubspace::span(f3, 2, {FpVec::of(f3, {0, 1})}));
  for (const auto& v : enumerate_subspaces(f3, 3, 1)) {
    const FpSubspace perp = v.orthogonal_complement();
    EXPECT_EQ(perp.dim(), 2u);
    EXPECT_EQ(perp.orthogonal_complement(), v);
    for (const auto& a : v.basis()) {
      for (const auto& b : perp.basis()) EXPECT_EQ(a.dot(b), f3.zero());
    }
  }
}

TEST(FpFlat, TranslateIsSmallestPoint) {
  const Field f = Field::prime(3);
  for (const auto& w : enumerate_flats(f, 3, 2)) {
    const auto pts = w.points();
    EXPECT_EQ(pts.size(), 9u);
    EXPECT_EQ(*std::min_element(pts.begin(), pts.end()), w.translate());
    for (const auto& x : pts) EXPECT_EQ(FpFlat(w.subspace(), x), w);
  }
}
