#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "projlab/euclid/line.hpp"
#include "projlab/report/bound_report.hpp"

namespace projlab::euclid {

// Primal (s, t) configuration: at least t lines, each through at least s of the points.
struct FurstConfig {
  std::vector<RatPoint> points;
  std::vector<RatLine> lines;
  std::size_t s = 2;
  std::size_t t = 1;
};

// ConfigInvalidError naming the first offending line.
void validate_primal(const FurstConfig& cfg);

// (a) (s-1) t^{1/2} <= |F| (blocking)
// (b) min(s^2, st)/4 <= |F| (tracked)
// (c) (9/104)^{3/2} min(st, s^{3/2} t^{1/2}) <= |F| (tracked; proved for s >= 13)
std::array<BoundReport, 3> furst_verify(const FurstConfig& cfg);

// J = sum over lines of (pins on the line)^2.
std::uint64_t j_count_by_lines(const std::vector<RatLine>& lines, const std::vector<RatPoint>& pins);
// J as the number of triples (x, x', l) with x, x' on l, counted per ordered pin pair.
std::uint64_t j_count_by_triples(const std::vector<RatLine>& lines, const std::vector<RatPoint>& pins);

struct DualFurstResult {
  BoundReport bound;                 // min(s^2, st)/2 <= |L|, tracked
  std::array<BoundReport, 2> chain;  // (|X|s)^2/|L| <= J and J <= |X| s_max + |X|^2, blocking
  std::uint64_t j_count = 0;
  std::uint64_t j_oracle = 0;
};

// Every pin must lie on >= s lines and |pins| >= t; ConfigInvalidError otherwise.
DualFurstResult dual_furst_verify(const std::vector<RatLine>& lines, const std::vector<RatPoint>& pins, std::size_t s,
                                  std::size_t t);

// Lines y = m x + c with slopes m in [0, M), M = ceil(sqrt(t/s)), intercepts
// c in [0, sM), the first t in (m, c) order; points are their lattice points with
// x in [0, s). Each line carries exactly s points.
FurstConfig grid_example(std::size_t s, std::size_t t);

}  // namespace projlab::euclid
