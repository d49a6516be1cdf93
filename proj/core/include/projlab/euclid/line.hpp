#pragma once

#include <compare>
#include <optional>
#include <string>

#include "projlab/euclid/point.hpp"

namespace projlab::euclid {

// Line {base + t*direction} with direction's first nonzero coordinate 1 and
// base the foot of the perpendicular from the origin.
class RatLine {
 public:
  static RatLine through(const RatPoint& a, const RatPoint& b);
  static RatLine from_point_direction(const RatPoint& point, const RatPoint& direction);

  const RatPoint& direction() const { return direction_; }
  const RatPoint& base() const { return base_; }
  std::size_t dim() const { return base_.dim(); }

  bool contains(const RatPoint& p) const;
  bool parallel_to(const RatLine& other) const { return direction_ == other.direction_; }
  // The single common point of two non-parallel intersecting lines.
  std::optional<RatPoint> intersect(const RatLine& other) const;
  bool is_vertical() const;  // planar, direction (0, 1)
  // Planar non-vertical lines as y = slope x + intercept.
  Rational slope() const;
  Rational intercept() const;

  std::string to_string() const;

  friend bool operator==(const RatLine&, const RatLine&) = default;
  friend std::strong_ordering operator<=>(const RatLine& a, const RatLine& b) {
    if (auto c = a.direction_ <=> b.direction_; c != 0) return c;
    return a.base_ <=> b.base_;
  }

 private:
  RatLine(RatPoint direction, RatPoint base) : direction_(std::move(direction)), base_(std::move(base)) {}

  RatPoint direction_;
  RatPoint base_;
};

std::vector<RatLine> unique_lines(std::vector<RatLine> l);

}  // namespace projlab::euclid
