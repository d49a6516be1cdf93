#include "projlab/euclid/line.hpp"

#include <algorithm>

#include "projlab/error.hpp"

namespace projlab::euclid {

RatLine RatLine::from_point_direction(const RatPoint& point, const RatPoint& direction) {
  require_same_dim(point, direction);
  RatPoint dir = direction.normalized();
  const Rational t = point.dot(dir) / dir.dot(dir);
  RatPoint base = point - dir.scaled(t);
  return RatLine(std::move(dir), std::move(base));
}

RatLine RatLine::through(const RatPoint& a, const RatPoint& b) {
  require_same_dim(a, b);
  if (a == b) throw DegenerateInputError("a line needs two distinct points");
  return from_point_direction(a, b - a);
}

bool RatLine::contains(const RatPoint& p) const {
  require_same_dim(p, base_);
  const std::size_t i0 = direction_.leading();
  const Rational t = p[i0] - base_[i0];
  for (std::size_t i = 0; i < dim(); ++i) {
    if (p[i] - base_[i] != t * direction_[i]) return false;
  }
  return true;
}

std::optional<RatPoint> RatLine::intersect(const RatLine& other) const {
  require_same_dim(base_, other.base_);
  if (parallel_to(other)) return std::nullopt;
  // base + s d = other.base + t e, solved in the least-squares normal form and verified.
  const RatPoint& d = direction_;
  const RatPoint& e = other.direction_;
  const RatPoint w = other.base_ - base_;
  const Rational dd = d.dot(d), de = d.dot(e), ee = e.dot(e);
  const Rational wd = w.dot(d), we = w.dot(e);
  const Rational det = dd * ee - de * de;
  const Rational s = (wd * ee - we * de) / det;
  RatPoint candidate = base_ + d.scaled(s);
  if (!other.contains(candidate)) return std::nullopt;  // skew
  return candidate;
}

bool RatLine::is_vertical() const { return dim() == 2 && direction_[0] == 0; }

Rational RatLine::slope() const {
  if (dim() != 2 || is_vertical()) throw NotRepresentableError("slope of a vertical or non-planar line");
  return direction_[1];
}

Rational RatLine::intercept() const {
  const Rational m = slope();
  return base_[1] - m * base_[0];
}

std::string RatLine::to_string() const {
  return "dir " + direction_.to_string() + " base " + base_.to_string();
}

std::vector<RatLine> unique_lines(std::vector<RatLine> l) {
  std::sort(l.begin(), l.end());
  l.erase(std::unique(l.begin(), l.end()), l.end());
  return l;
}

}  // namespace projlab::euclid
