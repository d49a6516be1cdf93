#pragma once

#include <cstddef>
#include <vector>

#include "projlab/ff/line.hpp"
#include "projlab/ff/subspace.hpp"

namespace projlab::ff {

// Distinct cosets of V^perp meeting X, each labelled by its canonical
// representative. Its size is |P_V(X)|: the number of translates of V^perp
// needed to cover X. This stays well defined when V meets V^perp.
std::vector<FpVec> coset_project(const FpSubspace& v, const std::vector<FpVec>& x);

// Counts cosets of a fixed V^perp; reuses the complement across many sets.
class CosetCounter {
 public:
  explicit CosetCounter(const FpSubspace& v);
  std::size_t count(const std::vector<FpVec>& x) const;

 private:
  FpSubspace perp_;
};

// {line_through(x, y) : y in Y, y != x}, sorted and duplicate-free.
std::vector<FpLine> radial_lines(const FpVec& x, const std::vector<FpVec>& y);
// |radial_lines(x, Y)| without building lines.
std::size_t radial_count(const FpVec& x, const std::vector<FpVec>& y);

// Sorted, duplicate-free copy.
std::vector<FpVec> unique_points(std::vector<FpVec> x);

}  // namespace projlab::ff
