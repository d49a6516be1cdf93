#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "projlab/report/rational.hpp"

namespace projlab::euclid {

std::strong_ordering compare(const Rational& a, const Rational& b);

// Point (or vector) of Q^n with canonical rational coordinates.
class RatPoint {
 public:
  explicit RatPoint(std::vector<Rational> coords);
  static RatPoint of(std::initializer_list<long> coords);
  static RatPoint zero(std::size_t n);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;

  RatPoint operator+(const RatPoint& o) const;
  RatPoint operator-(const RatPoint& o) const;
  RatPoint scaled(const Rational& c) const;
  Rational dot(const RatPoint& o) const;

  std::size_t leading() const;
  // Divided by the first nonzero coordinate. DegenerateInputError on zero.
  RatPoint normalized() const;

  std::string to_string() const;

  friend bool operator==(const RatPoint& a, const RatPoint& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const RatPoint& a, const RatPoint& b);

 private:
  std::vector<Rational> coords_;
};

void require_same_dim(const RatPoint& a, const RatPoint& b);
std::vector<RatPoint> unique_points(std::vector<RatPoint> x);

}  // namespace projlab::euclid
