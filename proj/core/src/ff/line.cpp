#include "projlab/ff/line.hpp"

#include "projlab/error.hpp"

namespace projlab::ff {

FpLine FpLine::from_point_direction(const FpVec& point, const FpVec& direction) {
  require_same_space(point, direction);
  FpVec dir = direction.normalized();
  const std::size_t i0 = dir.leading();
  // Shifting coordinate i0 to zero gives the lexicographic minimum: earlier
  // coordinates are constant along the line.
  FpVec base = point.axpy(point.field().neg(point[i0]), dir);
  return FpLine(std::move(dir), std::move(base));
}

FpLine FpLine::through(const FpVec& x, const FpVec& y) {
  require_same_space(x, y);
  if (x == y) throw DegenerateInputError("a line needs two distinct points");
  return from_point_direction(x, y - x);
}

bool FpLine::contains(const FpVec& v) const {
  require_same_space(v, base_);
  const FpVec diff = v - base_;
  const Scalar t = diff[direction_.leading()];
  return diff == direction_.scaled(t);
}

std::vector<FpVec> FpLine::points() const {
  std::vector<FpVec> out;
  const Field& f = field();
  out.reserve(f.order());
  for (std::uint64_t t = 0; t < f.order(); ++t) out.push_back(base_.axpy(f.element(t), direction_));
  return out;
}

std::string FpLine::to_string() const {
  return "dir " + direction_.to_string() + " base " + base_.to_string();
}

}  // namespace projlab::ff
