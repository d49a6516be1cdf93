#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projlab/report/rational.hpp"

namespace projlab {

// coef * radicand^(1/root), coef and radicand nonnegative.
struct RootTerm {
  Rational coef;
  Rational radicand;
  unsigned root = 1;
};

// Nonnegative sum of root terms, compared exactly by refining rational enclosures.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& value);  // NOLINT(google-explicit-constructor)
  Surd(long value) : Surd(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  static Surd root(const Rational& radicand, unsigned k, const Rational& coef = 1);

  Surd& operator+=(const Surd& other);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  Surd scaled(const Rational& c) const;

  // [lo, hi] containing the value, each root enclosed to within 2^-bits relative units.
  std::pair<Rational, Rational> enclose(unsigned bits) const;
  // Exact value when every term is rational.
  std::optional<Rational> exact() const;
  std::string to_string() const;

 private:
  std::vector<RootTerm> terms_;
};

struct Comparison {
  bool holds = false;
  // Rational witnesses: holds ? lhs_value <= rhs_value : lhs_value > rhs_value, with
  // lhs_value an upper (resp. lower) enclosure endpoint of the left side and
  // rhs_value the opposite endpoint of the right side.
  Rational lhs_value;
  Rational rhs_value;
  // Set when refinement hit the precision limit without separating the sides.
  bool at_precision_limit = false;
};

Comparison compare_le(const Surd& lhs, const Surd& rhs);

}  // namespace projlab
