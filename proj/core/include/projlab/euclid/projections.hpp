#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "projlab/euclid/line.hpp"
#include "projlab/report/bound_report.hpp"

namespace projlab::euclid {

// Projective direction: representative with first nonzero coordinate 1.
class DirectionClass {
 public:
  explicit DirectionClass(const RatPoint& v) : vector_(v.normalized()) {}
  const RatPoint& vector() const { return vector_; }
  std::string to_string() const { return vector_.to_string(); }
  friend bool operator==(const DirectionClass&, const DirectionClass&) = default;
  friend auto operator<=>(const DirectionClass& a, const DirectionClass& b) { return a.vector_ <=> b.vector_; }

 private:
  RatPoint vector_;
};

// Classes of x - y over distinct pairs. DomainError when |X| < 2.
std::vector<DirectionClass> direction_set(const std::vector<RatPoint>& x);

// Number of lines in direction theta needed to cover X.
std::size_t covering_count(const std::vector<RatPoint>& x, const DirectionClass& theta);

struct ExceptionalDirections {
  std::vector<DirectionClass> set;
  // (a) |E_{floor(sqrt|X|)}| <= 1, blocking
  // (b) |E_s| <= 4s for s <= |X|/2, tracked
  // (c) |E_s| <= max(1728 s^2/|X|, 12) for s <= |X|/2, tracked
  std::array<BoundReport, 3> reports;
};

// {theta in S(X) : covering_count(X, theta) < s}; directions outside S(X)
// cover X with |X| lines. Requires 1 <= s <= |X|.
ExceptionalDirections exceptional_directions(const std::vector<RatPoint>& x, std::size_t s);
// Just the set.
std::vector<DirectionClass> exceptional_direction_set(const std::vector<RatPoint>& x, std::size_t s);

struct OrdinaryLines {
  std::vector<RatLine> lines;
  bool collinear = false;
};

// Spanned lines through exactly two points. Requires |X| >= 3.
OrdinaryLines ordinary_lines(const std::vector<RatPoint>& x);

bool is_collinear(const std::vector<RatPoint>& x);

// |S(X)| >= |X| - 1 for planar noncollinear X, reported as |X| - 1 <= |S(X)|.
BoundReport ungar_report(const std::vector<RatPoint>& x);

}  // namespace projlab::euclid
