#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "projlab/ff/field.hpp"

namespace projlab::ff {

// Point of F_q^n.
class FpVec {
 public:
  FpVec(Field field, std::vector<Scalar> coords);
  static FpVec zero(Field field, std::size_t n);
  // Integer coordinates reduced mod p (prime-field convenience).
  static FpVec of(Field field, std::initializer_list<std::int64_t> coords);

  const Field& field() const { return field_; }
  std::size_t dim() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }
  bool is_zero() const;

  FpVec operator+(const FpVec& other) const;
  FpVec operator-(const FpVec& other) const;
  FpVec scaled(Scalar c) const;
  Scalar dot(const FpVec& other) const;
  // this + c * other
  FpVec axpy(Scalar c, const FpVec& other) const;

  // Index of the first nonzero coordinate, or dim() if zero.
  std::size_t leading() const;
  // Scaled so the first nonzero coordinate is 1. DegenerateInputError on zero.
  FpVec normalized() const;

  // Whitespace-delimited scalars.
  std::string to_string() const;

  friend bool operator==(const FpVec& a, const FpVec& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }
  // Lexicographic, first coordinate most significant. Only meaningful within one space.
  friend std::strong_ordering operator<=>(const FpVec& a, const FpVec& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  Field field_;
  std::vector<Scalar> coords_;
};

// DomainError unless a and b live in the same F_q^n.
void require_same_space(const FpVec& a, const FpVec& b);

// Points of F_q^n are indexed 0..q^n-1 consistently with FpVec ordering.
std::uint64_t point_index(const FpVec& v);
FpVec point_at(const Field& field, std::size_t n, std::uint64_t index);
// All q^n points in order; SizeLimitError when q^n > cap.
std::vector<FpVec> all_points(const Field& field, std::size_t n, std::uint64_t cap);

}  // namespace projlab::ff
