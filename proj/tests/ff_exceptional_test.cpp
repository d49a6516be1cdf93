#include <gtest/gtest.h>

#include <set>

#include "projlab/error.hpp"
#include "projlab/ff/exceptional.hpp"
#include "projlab/ff/line.hpp"
#include "projlab/ff/projection.hpp"
#include "support.hpp"

using namespace projlab;
using namespace projlab::ff;
using testing_support::ipow;
using testing_support::random_subset;

namespace {

std::vector<FpVec> line_points(const Field& f, std::initializer_list<std::int64_t> dir) {
  return FpLine::from_point_direction(FpVec::zero(f, 2), FpVec::of(f, dir)).points();
}

// Directions of F_q^2 as (1, a) and (0, 1); the projection along theta is
// counted by the distinct values of x . theta.
std::size_t subfield_oracle(std::uint32_t p) {
  const Field fq = Field::quadratic(p);
  std::vector<std::pair<Scalar, Scalar>> dirs = {{fq.zero(), fq.one()}};
  for (std::uint64_t a = 0; a < fq.order(); ++a) dirs.push_back({fq.one(), fq.element(a)});
  std::size_t count = 0;
  for (const auto& [t0, t1] : dirs) {
    std::set<Scalar> values;
    for (std::uint32_t x0 = 0; x0 < p; ++x0) {
      for (std::uint32_t x1 = 0; x1 < p; ++x1) {
        values.insert(fq.add(fq.mul({x0, 0}, t0), fq.mul({x1, 0}, t1)));
      }
    }
    count += values.size() <= p ? 1 : 0;
  }
  return count;
}

// Pins seeing fewer than s lines, by building every line through the pin.
std::vector<FpVec> radial_oracle(const Field& f, const std::vector<FpVec>& y, std::size_t s) {
  std::vector<FpVec> out;
  for (const auto& x : testing_support::points(f, 2)) {
    std::set<FpLine> lines;
    for (const auto& t : y) {
      if (t != x) lines.insert(FpLine::through(x, t));
    }
    if (lines.size() < s) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(OrthExceptional, FullGridHasNone) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field f = Field::prime(p);
    const auto grid = testing_support::points(f, 3);
    for (std::size_t k = 1; k <= 2; ++k) EXPECT_TRUE(orth_exceptional_set(grid, k, ipow(p, k)).empty());
  }
}

TEST(OrthExceptional, LineCollapsesAlongItsPerp) {
  const Field f = Field::prime(3);
  const auto x = line_points(f, {1, 2});
  const auto e = orth_exceptional_set(x, 1, 2);
  ASSERT_EQ(e.size(), 1u);
  const FpSubspace theta = FpSubspace::span(f, 2, {FpVec::of(f, {1, 2})});
  EXPECT_EQ(e[0], theta.orthogonal_complement());
}

TEST(OrthExceptional, MonotoneInSAndEmptyPastThreshold) {
  Rng rng(17);
  for (std::uint32_t p : {3u, 5u}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_subset(f, 3, 1 + rng.below(ipow(p, 3)), rng);
      for (std::size_t k = 1; k <= 2; ++k) {
        std::vector<FpSubspace> prev;
        for (std::uint64_t s = 1; s <= ipow(p, k); ++s) {
          const auto e = orth_exceptional_set(x, k, s);
          EXPECT_TRUE(std::includes(e.begin(), e.end(), prev.begin(), prev.end()));
          if (x.size() >= ipow(p, 3 - k) * s) {
            EXPECT_TRUE(e.empty()) << x.size() << ' ' << s;
          }
          prev = e;
        }
      }
    }
  }
}

TEST(OrthExceptional, RequiresProperRank) {
  const Field f = Field::prime(3);
  EXPECT_THROW(orth_exceptional_set({FpVec::of(f, {0, 0})}, 2, 1), DomainError);
  EXPECT_THROW(orth_exceptional_set({}, 1, 1), DomainError);
}

TEST(Falconer, FullGridHasZeroLhs) {
  const Field f = Field::prime(5);
  const auto reports = falconer_ff_report(testing_support::points(f, 2), 1);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.lhs, 0);
    EXPECT_EQ(r.bound_id, "ff_falconer_k1");
    EXPECT_EQ(r.tier, Tier::blocking);
  }
}

TEST(Falconer, LineExampleHasOneExceptionalDirection) {
  const Field f = Field::prime(5);
  const auto reports = falconer_ff_report(line_points(f, {1, 3}), 1);
  bool seen = false;
  for (const auto& r : reports) {
    if (r.params["s"] == 2) {
      EXPECT_EQ(r.lhs, 1);
      EXPECT_EQ(r.rhs, 4);
      EXPECT_EQ(r.constant, 2);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Falconer, RandomSetsHoldWithConstantTwo) {
  Rng rng(1);
  const Field f = Field::prime(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_subset(f, 2, 10 + rng.below(40), rng);
    for (const auto& r : falconer_ff_report(x, 1)) {
      ASSERT_TRUE(r.holds) << r.to_json_line();
      // Recount lhs from the projection profile.
      const auto prof = projection_profile(x, 1);
      const auto s = r.params["s"].get<std::uint64_t>();
      const auto count = std::count_if(prof.sizes.begin(), prof.sizes.end(), [s](std::size_t v) { return v < s; });
      ASSERT_EQ(r.lhs, static_cast<long>(count));
      Rational expected(2 * 7 * static_cast<long>(s), static_cast<long>(x.size()));
      expected.canonicalize();
      ASSERT_EQ(r.rhs, expected);
    }
  }
}

TEST(Falconer, HigherRankIsTracked) {
  Rng rng(4);
  const Field f = Field::prime(3);
  const auto reports = falconer_ff_report(random_subset(f, 3, 12, rng), 2);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_EQ(r.bound_id, "ff_falconer_rank_k");
    EXPECT_EQ(r.tier, Tier::tracked);
  }
}

TEST(RadialExceptional, SmallExamples) {
  const Field f3 = Field::prime(3);
  const auto grid = testing_support::points(f3, 2);
  EXPECT_TRUE(radial_exceptional_set(f3, 2, grid, 4).empty());
  EXPECT_EQ(radial_exceptional_set(f3, 2, grid, 5).size(), 9u);

  const Field f5 = Field::prime(5);
  const auto line = line_points(f5, {1, 1});
  auto e = radial_exceptional_set(f5, 2, line, 2);
  auto sorted_line = line;
  std::sort(sorted_line.begin(), sorted_line.end());
  EXPECT_EQ(e, sorted_line);

  EXPECT_EQ(radial_exceptional_set(f5, 2, {}, 1).size(), 25u);
  // A singleton is seen along one line from every other pin.
  EXPECT_EQ(radial_exceptional_set(f5, 2, {line[0]}, 1), std::vector<FpVec>{line[0]});
  EXPECT_EQ(radial_exceptional_set(f5, 2, {line[0]}, 2).size(), 25u);
}

TEST(RadialExceptional, AgreesWithPairwiseLineOracle) {
  Rng rng(9);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 5; ++trial) {
      const auto y = random_subset(f, 2, rng.below(p * p + 1), rng);
      std::vector<FpVec> prev;
      for (std::size_t s = 1; s <= p + 2; ++s) {
        const auto e = radial_exceptional_set(f, 2, y, s);
        EXPECT_EQ(e, radial_oracle(f, y, s)) << p << ' ' << s;
        EXPECT_TRUE(std::includes(e.begin(), e.end(), prev.begin(), prev.end()));
        prev = e;
      }
    }
  }
}

TEST(RadialBound, EightNFamilyOnNearlyFullGrid) {
  Rng rng(12);
  const Field f = Field::prime(17);
  auto y = testing_support::points(f, 2);
  for (int i = 0; i < 10; ++i) y.erase(y.begin() + static_cast<long>(rng.below(y.size())));
  ASSERT_EQ(y.size(), 279u);
  const auto res = radial_bound_report(f, 2, y);
  std::size_t eight = 0;
  for (const auto& r : res.reports) {
    EXPECT_TRUE(r.holds) << r.to_json_line();
    eight += r.bound_id == "ff_radial_8n" ? 1 : 0;
  }
  EXPECT_GT(eight, 0u);
}

TEST(RadialBound, FamiliesGatedBySize) {
  Rng rng(2);
  const Field f = Field::prime(11);
  // 100 <= 8n p = 176 but 100 >= 6p = 66.
  const auto mid = radial_bound_report(f, 2, random_subset(f, 2, 100, rng));
  ASSERT_EQ(mid.skipped.size(), 1u);
  EXPECT_NE(mid.skipped[0].find("ff_radial_8n"), std::string::npos);
  for (const auto& r : mid.reports) EXPECT_EQ(r.bound_id, "ff_radial_12");
  EXPECT_FALSE(mid.reports.empty());

  const auto small = radial_bound_report(f, 2, random_subset(f, 2, 60, rng));
  EXPECT_EQ(small.skipped.size(), 2u);
  EXPECT_TRUE(small.reports.empty());
}

TEST(RadialBound, FullGridSeesAllLines) {
  const Field f = Field::prime(13);
  const auto grid = testing_support::points(f, 2);
  EXPECT_TRUE(radial_exceptional_set(f, 2, grid, 14).empty());
  const auto res = radial_bound_report(f, 2, grid);
  for (const auto& r : res.reports) {
    if (r.params["s"].get<std::uint64_t>() <= 13) {
      EXPECT_EQ(r.lhs, 0);
    }
  }
}

TEST(FullGrid, IncidenceIdentity) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto ex = example_fullgrid(p);
    EXPECT_EQ(ex.points.size(), p * p);
    EXPECT_EQ(ex.lines.size(), p * p);
    EXPECT_EQ(ex.incidences, std::uint64_t{p} * p * p);
    EXPECT_TRUE(ex.report.holds);
    std::uint64_t recount = 0;
    for (const auto& l : ex.lines) {
      std::size_t on = 0;
      for (const auto& x : ex.points) on += l.contains(x) ? 1 : 0;
      EXPECT_EQ(on, p);
      recount += on;
    }
    EXPECT_EQ(recount, ex.incidences);
  }
}

// The sweep finds one direction per point of the projective line over the
// prime subfield, i.e. p + 1 of them.
TEST(Subfield, CountMatchesDirectionSweep) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto ex = example_subfield(p);
    EXPECT_EQ(ex.points.size(), p * p);
    EXPECT_EQ(ex.field.order(), std::uint64_t{p} * p);
    const std::size_t oracle = subfield_oracle(p);
    EXPECT_EQ(oracle, p + 1);
    EXPECT_EQ(ex.small_directions.size(), oracle);
    EXPECT_EQ(ex.report.lhs, static_cast<long>(oracle));
    EXPECT_EQ(ex.report.rhs, static_cast<long>(p));
    EXPECT_FALSE(ex.report.holds);
  }
}

TEST(Subfield, OrthogonalSweepAgrees) {
  const auto ex = example_subfield(3);
  const auto e = orth_exceptional_set(ex.points, 1, 4);
  EXPECT_EQ(e.size(), ex.small_directions.size());
}
