#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "projlab/euclid/point.hpp"
#include "projlab/limits.hpp"
#include "projlab/report/bound_report.hpp"

namespace projlab::euclid {

// Distinct squared distances; squaring is injective on [0, inf) so counts agree.
struct SquaredDistanceSet {
  std::vector<Rational> values;  // sorted
  bool include_zero = true;
  std::size_t size() const { return values.size(); }
};

SquaredDistanceSet distance_set(const std::vector<RatPoint>& x, bool include_zero = true);
SquaredDistanceSet pinned_distance_set(const RatPoint& a, const std::vector<RatPoint>& x, bool include_zero = true);

// X = [0,p]^n: |Delta(X)| (zero included) <= n p^2 + 1.
BoundReport lattice_report(std::uint32_t p, std::size_t n, std::uint64_t cap = kDefaultCap);

// Tracking data |Delta(X)| against |X| / log|X| (natural log).
struct GkRatio {
  std::size_t points = 0;
  std::size_t distances = 0;  // zero included
  std::string reference;      // |X|/log|X|, 6 decimals
  std::string ratio;          // distances / reference, 6 decimals
  nlohmann::json to_json() const;
};
GkRatio gk_ratio(const std::vector<RatPoint>& x);

// {a . y : y in A}, sorted.
std::vector<Rational> dot_product_set(const RatPoint& a, const std::vector<RatPoint>& set);

// lhs = |Pi^{lambda a}(A) symmetric-difference lambda Pi^a(A)|, rhs = 0. DomainError on lambda = 0.
BoundReport dot_scaling_check(const RatPoint& a, const Rational& lambda, const std::vector<RatPoint>& set);

}  // namespace projlab::euclid
