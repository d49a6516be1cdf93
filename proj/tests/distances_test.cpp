#include <gtest/gtest.h>

#include <set>

#include "projlab/error.hpp"
#include "projlab/euclid/distances.hpp"
#include "projlab/lab/corpus.hpp"

using namespace projlab;
using namespace projlab::euclid;

namespace {

RatPoint pt(long x, long y) { return RatPoint::of({x, y}); }

std::vector<Rational> squared(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Sums of n squares from {0, 1, ..., p}^2 differences, by brute force on integers.
std::size_t lattice_oracle(long p, int n) {
  std::set<long> values;
  std::vector<long> d(n, 0);
  for (;;) {
    long s = 0;
    for (long x : d) s += x * x;
    values.insert(s);
    int i = 0;
    while (i < n && ++d[i] > p) d[i++] = 0;
    if (i == n) break;
  }
  return values.size();
}

}  // namespace

TEST(DistanceSet, SmallExamples) {
  const std::vector<RatPoint> tri = {pt(0, 0), pt(1, 0), pt(0, 1)};
  EXPECT_EQ(distance_set(tri).values, squared({0, 1, 2}));
  EXPECT_EQ(distance_set(tri, false).values, squared({1, 2}));
  EXPECT_EQ(distance_set({pt(3, 3)}).values, squared({0}));
  EXPECT_TRUE(distance_set({pt(3, 3)}, false).values.empty());
  EXPECT_EQ(pinned_distance_set(pt(0, 0), {pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)}).values, squared({0, 1, 2}));
}

TEST(DistanceSet, PairBoundAndTrueDistanceOracle) {
  Rng rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = lab::uniform_random_lattice(2, 2 + rng.below(49), 20, rng);
    const auto d = distance_set(x);
    EXPECT_LE(d.size(), x.size() * (x.size() - 1) / 2 + 1);
    // Distinct true distances compared pairwise in floating point; lattice
    // squared distances are integers so distinct values differ by >= 1.
    std::vector<double> dist;
    for (const auto& a : x) {
      for (const auto& b : x) dist.push_back(std::sqrt((a - b).dot(a - b).get_d()));
    }
    std::sort(dist.begin(), dist.end());
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < dist.size(); ++i) distinct += i == 0 || dist[i] - dist[i - 1] > 1e-9 ? 1 : 0;
    EXPECT_EQ(d.size(), distinct);
  }
}

TEST(Lattice, SmallExamples) {
  const auto four = lattice_report(4, 2);
  EXPECT_EQ(four.lhs, 15);
  EXPECT_EQ(four.rhs, 33);
  EXPECT_TRUE(four.holds);
  const auto one = lattice_report(1, 2);
  EXPECT_EQ(one.lhs, 3);
  EXPECT_EQ(one.rhs, 3);
  EXPECT_TRUE(one.holds);
  for (std::uint32_t p = 2; p <= 8; ++p) {
    const auto r = lattice_report(p, 1);
    EXPECT_EQ(r.lhs, static_cast<long>(p + 1));
    EXPECT_TRUE(r.holds);
  }
}

TEST(Lattice, BoundAcrossRange) {
  for (long p = 1; p <= 50; ++p) {
    const auto r = lattice_report(static_cast<std::uint32_t>(p), 2);
    ASSERT_EQ(r.lhs, static_cast<long>(lattice_oracle(p, 2)));
    ASSERT_TRUE(r.holds);
  }
  for (long p = 1; p <= 12; ++p) {
    const auto r = lattice_report(static_cast<std::uint32_t>(p), 3);
    ASSERT_EQ(r.lhs, static_cast<long>(lattice_oracle(p, 3)));
    ASSERT_TRUE(r.holds);
  }
  EXPECT_THROW(lattice_report(200, 3, 1000), SizeLimitError);
}

TEST(GkRatio, Cases) {
  const auto two = gk_ratio({pt(0, 0), pt(1, 2)});
  EXPECT_EQ(two.distances, 2u);
  std::string prev;
  for (long side : {4, 8, 16}) {
    std::vector<RatPoint> g;
    for (long x = 0; x < side; ++x) {
      for (long y = 0; y < side; ++y) g.push_back(pt(x, y));
    }
    const auto r = gk_ratio(g);
    EXPECT_EQ(r.points, static_cast<std::size_t>(side * side));
    EXPECT_FALSE(r.ratio.empty());
    EXPECT_EQ(r.ratio.find('.') + 7, r.ratio.size());
  }
}

TEST(DotProducts, SmallExamples) {
  const std::vector<RatPoint> sq = {pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)};
  EXPECT_EQ(dot_product_set(pt(1, 0), {pt(3, 1), pt(3, 2), pt(5, 0)}), squared({3, 5}));
  EXPECT_EQ(dot_product_set(pt(0, 0), sq), squared({0}));
  EXPECT_EQ(dot_product_set(pt(1, 2), sq), squared({0, 1, 2, 3}));
  EXPECT_EQ(dot_product_set(pt(-3, -6), sq), squared({-9, -6, -3, 0}));
  EXPECT_TRUE(dot_scaling_check(pt(1, 2), 1, sq).holds);
  const auto r = dot_scaling_check(pt(1, 2), -3, sq);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_THROW(dot_scaling_check(pt(1, 2), 0, sq), DomainError);
}

TEST(DotProducts, ScalingOnRandomTriples) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const RatPoint a = pt(static_cast<long>(rng.between(-9, 9)), static_cast<long>(rng.between(1, 9)));
    Rational lambda(static_cast<long>(rng.between(1, 9)) * (rng.chance(1, 2) ? -1 : 1), static_cast<long>(rng.between(1, 9)));
    lambda.canonicalize();
    const auto set = lab::uniform_random_lattice(2, 1 + rng.below(30), 20, rng);
    ASSERT_TRUE(dot_scaling_check(a, lambda, set).holds);
    auto scaled = dot_product_set(a.scaled(lambda), set);
    std::vector<Rational> expected;
    for (const auto& v : dot_product_set(a, set)) expected.push_back(lambda * v);
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(scaled, expected);
  }
}
