#include <gtest/gtest.h>

#include <cmath>

#include "projlab/error.hpp"
#include "projlab/euclid/furst.hpp"
#include "projlab/euclid/incidence.hpp"

using namespace projlab;
using namespace projlab::euclid;

namespace {

RatPoint pt(long x, long y) { return RatPoint::of({x, y}); }

RatLine line(long m, long c) { return RatLine::from_point_direction(pt(0, c), pt(1, m)); }

// Direct enumeration of (x, x', l) with x, x' on l (x = x' allowed).
std::uint64_t triples_oracle(const std::vector<RatLine>& lines, const std::vector<RatPoint>& pins) {
  std::uint64_t n = 0;
  for (const auto& l : lines) {
    for (const auto& a : pins) {
      for (const auto& b : pins) n += l.contains(a) && l.contains(b) ? 1 : 0;
    }
  }
  return n;
}

}  // namespace

TEST(Furst, GridWithAxisLines) {
  FurstConfig cfg;
  for (long x = 0; x < 3; ++x) {
    for (long y = 0; y < 3; ++y) cfg.points.push_back(pt(x, y));
  }
  for (long i = 0; i < 3; ++i) {
    cfg.lines.push_back(RatLine::through(pt(i, 0), pt(i, 1)));
    cfg.lines.push_back(RatLine::through(pt(0, i), pt(1, i)));
  }
  cfg.s = 3;
  cfg.t = 6;
  validate_primal(cfg);
  const auto r = furst_verify(cfg);
  EXPECT_TRUE(r[0].holds);
  EXPECT_EQ(r[0].rhs, 9);
  EXPECT_EQ(r[0].tier, Tier::blocking);
  // 2 sqrt 6 = 4.899
  EXPECT_NEAR(mpq_class(r[0].lhs).get_d(), 2 * std::sqrt(6.0), 1e-6);
}

TEST(Furst, SingleLine) {
  for (std::size_t s = 2; s <= 8; ++s) {
    FurstConfig cfg;
    for (long i = 0; i < static_cast<long>(s); ++i) cfg.points.push_back(pt(i, 2 * i));
    cfg.lines = {RatLine::through(pt(0, 0), pt(1, 2))};
    cfg.s = s;
    cfg.t = 1;
    const auto r = furst_verify(cfg);
    EXPECT_TRUE(r[0].holds);
    EXPECT_EQ(r[0].lhs, static_cast<long>(s - 1));
    EXPECT_EQ(r[0].rhs, static_cast<long>(s));
  }
}

TEST(Furst, ValidatorRejects) {
  FurstConfig cfg;
  cfg.points = {pt(0, 0), pt(1, 0)};
  cfg.lines = {line(0, 0), line(0, 1)};
  cfg.s = 2;
  cfg.t = 2;
  EXPECT_THROW(validate_primal(cfg), ConfigInvalidError);
  EXPECT_THROW(furst_verify(cfg), ConfigInvalidError);
  cfg.lines = {line(0, 0)};
  EXPECT_THROW(furst_verify(cfg), ConfigInvalidError);
}

TEST(GridExample, SmallExamples) {
  const auto a = grid_example(3, 3);
  ASSERT_EQ(a.lines.size(), 3u);
  for (const auto& l : a.lines) EXPECT_EQ(l.direction(), pt(1, 0));
  EXPECT_GE(a.points.size(), 9u);
  validate_primal(a);

  const auto b = grid_example(2, 1);
  EXPECT_EQ(b.lines.size(), 1u);
  EXPECT_EQ(b.points.size(), 2u);

  const auto c = grid_example(4, 8);
  validate_primal(c);
  for (const auto& r : furst_verify(c)) EXPECT_TRUE(r.holds) << r.to_json_line();
}

TEST(GridExample, EveryLineCarriesExactlySPoints) {
  for (std::size_t s = 2; s <= 16; ++s) {
    for (std::size_t t : {s, (s * s + s) / 2, s * s}) {
      const auto cfg = grid_example(s, t);
      ASSERT_EQ(cfg.lines.size(), t);
      const auto tally = incidences(cfg.points, cfg.lines);
      for (const auto& [l, count] : tally.per_line) ASSERT_EQ(count, s);
      const auto r = furst_verify(cfg);
      ASSERT_TRUE(r[0].holds);
      // |F| / (s^{3/2} t^{1/2}) stays bounded across the sweep.
      const double ratio = cfg.points.size() / (std::pow(s, 1.5) * std::sqrt(static_cast<double>(t)));
      EXPECT_LT(ratio, 4.0) << s << ' ' << t;
    }
  }
}

TEST(DualFurst, SharedLineExample) {
  const std::vector<RatPoint> pins = {pt(0, 0), pt(4, 0)};
  std::vector<RatLine> lines = {line(0, 0)};
  for (long m : {1, 2, 3}) lines.push_back(RatLine::from_point_direction(pins[0], pt(1, m)));
  for (long m : {1, 2, 3}) lines.push_back(RatLine::from_point_direction(pins[1], pt(1, m)));
  ASSERT_EQ(unique_lines(lines).size(), 7u);
  const auto r = dual_furst_verify(lines, pins, 4, 2);
  EXPECT_EQ(r.j_count, triples_oracle(lines, pins));
  EXPECT_EQ(r.j_count, r.j_oracle);
  EXPECT_EQ(r.j_count, 10u);
  EXPECT_TRUE(r.chain[0].holds);
  EXPECT_TRUE(r.chain[1].holds);
}

TEST(DualFurst, SinglePin) {
  for (std::size_t s = 1; s <= 6; ++s) {
    std::vector<RatLine> lines;
    for (long m = 0; m < static_cast<long>(s); ++m) lines.push_back(RatLine::from_point_direction(pt(1, 1), pt(1, m)));
    const auto r = dual_furst_verify(lines, {pt(1, 1)}, s, 1);
    EXPECT_EQ(r.j_count, s);
    EXPECT_TRUE(r.bound.holds);
  }
}

TEST(DualFurst, PencilCorpusAgreesWithTriples) {
  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const long t = 2 + static_cast<long>(rng.below(5));
    const long s = 2 + static_cast<long>(rng.below(5));
    std::vector<RatPoint> pins;
    std::vector<RatLine> lines;
    for (long i = 0; i < t; ++i) {
      pins.push_back(pt(3 * i, 0));
      lines.push_back(line(0, 0));
      for (long j = 1; j < s; ++j) {
        lines.push_back(RatLine::from_point_direction(pins.back(), pt(static_cast<long>(rng.between(-3, 3)), j)));
      }
    }
    lines = unique_lines(lines);
    try {
      const auto r = dual_furst_verify(lines, pins, static_cast<std::size_t>(s), static_cast<std::size_t>(t));
      EXPECT_EQ(r.j_count, triples_oracle(lines, pins));
      EXPECT_EQ(r.j_count, j_count_by_lines(lines, pins));
      EXPECT_EQ(r.j_oracle, j_count_by_triples(lines, pins));
      EXPECT_TRUE(r.chain[0].holds);
      EXPECT_TRUE(r.chain[1].holds);
    } catch (const ConfigInvalidError&) {
      // Random directions may coincide and leave a pin on fewer than s lines.
    }
  }
}

TEST(DualFurst, RejectsUnderfilledPins) {
  EXPECT_THROW(dual_furst_verify({line(0, 0)}, {pt(0, 0)}, 2, 1), ConfigInvalidError);
  EXPECT_THROW(dual_furst_verify({line(0, 0), line(1, 0)}, {pt(0, 0)}, 2, 2), ConfigInvalidError);
}
