#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "projlab/euclid/line.hpp"
#include "projlab/report/bound_report.hpp"

namespace projlab::euclid {

// Lines through at least two points of X.
std::vector<RatLine> connecting_lines(const std::vector<RatPoint>& x);
// Lines through some x in X and y in Y with x != y.
std::vector<RatLine> connecting_lines(const std::vector<RatPoint>& x, const std::vector<RatPoint>& y);

// Largest number of points of X on one line (|X| when |X| <= 2).
std::size_t max_collinear(const std::vector<RatPoint>& x);

struct Nonconcentration {
  std::size_t max_collinear = 0;
  Rational c;  // (|Y| - max_collinear) / |Y|
  bool collinear = false;
  std::string note;
};
Nonconcentration nonconcentration(const std::vector<RatPoint>& y);

enum class BeckBranch { concentrated, spread, neither };
const char* branch_name(BeckBranch b);

struct BeckDiagnostics {
  std::size_t max_collinear = 0;
  Rational nonconcentration_c;
  std::size_t connecting_count = 0;
  std::map<int, std::size_t> dyadic_profile;  // j -> #lines with 2^j <= richness < 2^{j+1}
  BeckBranch branch = BeckBranch::neither;
  Rational minimal_c;
  nlohmann::json to_json() const;
};

struct BeckResult {
  BoundReport report;
  BeckDiagnostics diagnostics;
};

// Dichotomy at constant C >= 1: some line holds |X|/C points, or |L(X)| >= |X|^2/(2C^2).
BeckResult beck_report(const std::vector<RatPoint>& x, const Rational& c);
// Bivariate form: a line with |X|/C points of X and |Y|/C points of Y, or |L(X,Y)| >= |X||Y|/(2C^2).
BeckResult beck_report(const std::vector<RatPoint>& x, const std::vector<RatPoint>& y, const Rational& c);

// |L(X)| >= |X| t / 4 with t = |X| - max_collinear(X); the measured constant goes to params.
BoundReport erdos_beck_report(const std::vector<RatPoint>& x);

// Projective directions of Y \ {x} seen from x.
std::size_t pinned_count(const RatPoint& x, const std::vector<RatPoint>& y);

// Lower bounds on max_{x in X} pinned_count(x, Y):
// (i) |Y|^{1/2}/2 for noncollinear X (blocking), (ii) (2C)^{-1} min(|X|,|Y|),
// (iii) (12C)^{-3/2} min(|X|^{1/2}|Y|^{1/2}, |Y|), C = max_collinear(X) (tracked).
std::array<BoundReport, 3> pinned_radial_report(const std::vector<RatPoint>& x, const std::vector<RatPoint>& y);

struct ContainmentOptions {
  std::uint64_t seed = 1;
  std::size_t outside_samples = 100;
};

// For noncollinear Y and 1 <= s <= c(Y)|Y|: every pin of P_2(L(Y)) u Y sees >= 2
// directions, Y lies in P_2(L(Y)), and sampled pins outside P_2(L(Y)) see >= s.
BoundReport radial_containment_check(const std::vector<RatPoint>& y, std::size_t s,
                                     const ContainmentOptions& options = {});

}  // namespace projlab::euclid
