#include "projlab/ff/projection.hpp"

#include <algorithm>

#include "projlab/error.hpp"

namespace projlab::ff {

namespace {

void require_ambient(const FpSubspace& v, const std::vector<FpVec>& x) {
  for (const FpVec& p : x) {
    if (!(p.field() == v.field()) || p.dim() != v.ambient_dim()) {
      throw DomainError("point set and subspace live in different spaces");
    }
  }
}

}  // namespace

std::vector<FpVec> unique_points(std::vector<FpVec> x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

std::vector<FpVec> coset_project(const FpSubspace& v, const std::vector<FpVec>& x) {
  require_ambient(v, x);
  const FpSubspace perp = v.orthogonal_complement();
  std::vector<FpVec> labels;
  labels.reserve(x.size());
  for (const FpVec& p : x) labels.push_back(perp.reduce(p));
  return unique_points(std::move(labels));
}

CosetCounter::CosetCounter(const FpSubspace& v) : perp_(v.orthogonal_complement()) {}

std::size_t CosetCounter::count(const std::vector<FpVec>& x) const {
  std::vector<std::uint64_t> labels;
  labels.reserve(x.size());
  for (const FpVec& p : x) labels.push_back(point_index(perp_.reduce(p)));
  std::sort(labels.begin(), labels.end());
  return static_cast<std::size_t>(std::unique(labels.begin(), labels.end()) - labels.begin());
}

std::vector<FpLine> radial_lines(const FpVec& x, const std::vector<FpVec>& y) {
  std::vector<FpLine> out;
  for (const FpVec& p : y) {
    require_same_space(x, p);
    if (p != x) out.push_back(FpLine::through(x, p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t radial_count(const FpVec& x, const std::vector<FpVec>& y) {
  // A line through x is determined by its normalized direction.
  std::vector<std::uint64_t> dirs;
  dirs.reserve(y.size());
  for (const FpVec& p : y) {
    require_same_space(x, p);
    if (p != x) dirs.push_back(point_index((p - x).normalized()));
  }
  std::sort(dirs.begin(), dirs.end());
  return static_cast<std::size_t>(std::unique(dirs.begin(), dirs.end()) - dirs.begin());
}

}  // namespace projlab::ff
