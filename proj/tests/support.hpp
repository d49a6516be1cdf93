#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "projlab/ff/vec.hpp"
#include "projlab/rng.hpp"

namespace testing_support {

using projlab::ff::Field;
using projlab::ff::FpVec;

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Product formula for the number of k-subspaces of an n-space over q elements.
inline std::uint64_t gaussian_oracle(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= ipow(q, n - i) - 1;
    den *= ipow(q, i + 1) - 1;
  }
  return num / den;
}

// All points as plain index-addressable vectors.
inline std::vector<FpVec> points(const Field& f, std::size_t n) { return projlab::ff::all_points(f, n, 10'000'000); }

// Span of vectors as the set of point indices, by closing under all linear combinations.
inline std::set<std::uint64_t> span_indices(const Field& f, std::size_t n, const std::vector<FpVec>& gens) {
  std::set<std::uint64_t> span = {projlab::ff::point_index(FpVec::zero(f, n))};
  std::vector<FpVec> members = {FpVec::zero(f, n)};
  for (const auto& g : gens) {
    std::vector<FpVec> next;
    for (const auto& m : members) {
      for (std::uint64_t c = 0; c < f.order(); ++c) {
        const FpVec v = m + g.scaled(f.element(c));
        if (span.insert(projlab::ff::point_index(v)).second) next.push_back(v);
      }
    }
    members.insert(members.end(), next.begin(), next.end());
  }
  return span;
}

inline std::vector<FpVec> random_subset(const Field& f, std::size_t n, std::size_t size, projlab::Rng& rng) {
  const std::uint64_t total = ipow(f.order(), n);
  std::set<std::uint64_t> picked;
  while (picked.size() < size) picked.insert(rng.below(total));
  std::vector<FpVec> out;
  for (auto i : picked) out.push_back(projlab::ff::point_at(f, n, i));
  return out;
}

}  // namespace testing_support
