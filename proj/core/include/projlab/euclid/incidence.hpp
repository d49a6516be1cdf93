#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "projlab/euclid/line.hpp"
#include "projlab/report/bound_report.hpp"
#include "projlab/rng.hpp"

namespace projlab::euclid {

struct IncidenceTally {
  std::uint64_t total = 0;
  std::map<RatLine, std::uint64_t> per_line;
  std::map<RatPoint, std::uint64_t> per_point;
};

// Exact incidence count; duplicates in P or L are counted once.
IncidenceTally incidences(const std::vector<RatPoint>& p, const std::vector<RatLine>& l);

// Lines spanned by pairs of distinct points, each with the number of points of X on it.
std::vector<std::pair<RatLine, std::size_t>> spanned_lines(const std::vector<RatPoint>& x);
// Pairwise intersection points of L, each with the number of lines of L through it.
std::vector<std::pair<RatPoint, std::size_t>> intersection_points(const std::vector<RatLine>& l);

// [0]: |I| <= min(|P||L|^{1/2} + |L|, |L||P|^{1/2} + |P|)
// [1]: |I| <= 4(|P|^{2/3}|L|^{2/3} + |P| + |L|)
std::array<BoundReport, 2> bound_report_cs_st(const std::vector<RatPoint>& p, const std::vector<RatLine>& l);

std::vector<RatPoint> rich_points(const std::vector<RatLine>& l, std::size_t r);
std::vector<RatLine> rich_lines(const std::vector<RatPoint>& p, std::size_t r);

// p -> {y = p1 x - p2}; the inverse sends y = m x + b to (m, -b).
RatLine dualize(const RatPoint& p);
RatPoint dualize_line(const RatLine& l);  // NotRepresentableError on vertical lines
std::vector<RatLine> dualize(const std::vector<RatPoint>& p);
std::vector<RatPoint> dualize_lines(const std::vector<RatLine>& l);

// (x, y) -> (x + lambda y, y)
RatPoint shear(const RatPoint& p, const Rational& lambda);
RatLine shear(const RatLine& l, const Rational& lambda);
// A nonzero lambda making every line of L non-vertical after shearing.
Rational choose_shear(const std::vector<RatLine>& l, Rng& rng, int max_retries = 1000);

struct PlanarConfiguration {
  std::vector<RatPoint> points;
  std::vector<RatLine> lines;
  // 2 x n integer matrix of the map used (empty for n = 2).
  std::vector<std::vector<long>> map;
};

// Image under a random integer linear map to Q^2 that keeps points distinct,
// lines distinct and nondegenerate, and every point/line incidence status.
// Images are listed in the order of the sorted, deduplicated inputs.
PlanarConfiguration generic_project(const std::vector<RatPoint>& p, const std::vector<RatLine>& l, Rng& rng,
                                    int max_retries = 1000);

}  // namespace projlab::euclid
