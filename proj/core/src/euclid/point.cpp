#include "projlab/euclid/point.hpp"

#include <algorithm>

#include "projlab/error.hpp"

namespace projlab::euclid {

std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RatPoint::RatPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("points need at least one coordinate");
  for (Rational& c : coords_) c.canonicalize();
}

RatPoint RatPoint::of(std::initializer_list<long> coords) {
  std::vector<Rational> v;
  for (long c : coords) v.emplace_back(c);
  return RatPoint(std::move(v));
}

RatPoint RatPoint::zero(std::size_t n) { return RatPoint(std::vector<Rational>(n, Rational(0))); }

bool RatPoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

void require_same_dim(const RatPoint& a, const RatPoint& b) {
  if (a.dim() != b.dim()) {
    throw DomainError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

RatPoint RatPoint::operator+(const RatPoint& o) const {
  require_same_dim(*this, o);
  std::vector<Rational> v(dim());
  for (std::size_t i = 0; i < dim(); ++i) v[i] = coords_[i] + o.coords_[i];
  return RatPoint(std::move(v));
}

RatPoint RatPoint::operator-(const RatPoint& o) const {
  require_same_dim(*this, o);
  std::vector<Rational> v(dim());
  for (std::size_t i = 0; i < dim(); ++i) v[i] = coords_[i] - o.coords_[i];
  return RatPoint(std::move(v));
}

RatPoint RatPoint::scaled(const Rational& c) const {
  std::vector<Rational> v(dim());
  for (std::size_t i = 0; i < dim(); ++i) v[i] = coords_[i] * c;
  return RatPoint(std::move(v));
}

Rational RatPoint::dot(const RatPoint& o) const {
  require_same_dim(*this, o);
  Rational acc = 0;
  for (std::size_t i = 0; i < dim(); ++i) acc += coords_[i] * o.coords_[i];
  return acc;
}

std::size_t RatPoint::leading() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords_[i] != 0) return i;
  }
  return dim();
}

RatPoint RatPoint::normalized() const {
  const std::size_t i0 = leading();
  if (i0 == dim()) throw DegenerateInputError("zero vector has no direction");
  const Rational inv = 1 / coords_[i0];
  return scaled(inv);
}

std::string RatPoint::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out += ' ';
    out += projlab::to_string(coords_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const RatPoint& a, const RatPoint& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(a.coords_[i], b.coords_[i]); c != 0) return c;
  }
  return a.dim() <=> b.dim();
}

std::vector<RatPoint> unique_points(std::vector<RatPoint> x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

}  // namespace projlab::euclid
