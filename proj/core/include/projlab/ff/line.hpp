#pragma once

#include <compare>
#include <string>
#include <vector>

#include "projlab/ff/vec.hpp"

namespace projlab::ff {

// Affine line {base + t*direction}. direction has leading coordinate 1 and base
// is the lexicographically smallest point, so equal lines have equal fields.
class FpLine {
 public:
  static FpLine through(const FpVec& x, const FpVec& y);
  static FpLine from_point_direction(const FpVec& point, const FpVec& direction);

  const FpVec& direction() const { return direction_; }
  const FpVec& base() const { return base_; }
  const Field& field() const { return base_.field(); }
  std::size_t dim() const { return base_.dim(); }

  bool contains(const FpVec& v) const;
  // base + t*direction for t in field element order.
  std::vector<FpVec> points() const;

  std::string to_string() const;

  friend bool operator==(const FpLine&, const FpLine&) = default;
  friend std::strong_ordering operator<=>(const FpLine& a, const FpLine& b) {
    if (auto c = a.direction_ <=> b.direction_; c != 0) return c;
    return a.base_ <=> b.base_;
  }

 private:
  FpLine(FpVec direction, FpVec base) : direction_(std::move(direction)), base_(std::move(base)) {}

  FpVec direction_;
  FpVec base_;
};

}  // namespace projlab::ff
