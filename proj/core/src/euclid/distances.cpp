#include "projlab/euclid/distances.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>

#include "projlab/error.hpp"

namespace projlab::euclid {

namespace {

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Rational squared_distance(const RatPoint& a, const RatPoint& b) {
  const RatPoint d = a - b;
  return d.dot(d);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

SquaredDistanceSet distance_set(const std::vector<RatPoint>& x_in, bool include_zero) {
  const std::vector<RatPoint> x = unique_points(x_in);
  SquaredDistanceSet out;
  out.include_zero = include_zero;
  if (include_zero && !x.empty()) out.values.emplace_back(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) out.values.push_back(squared_distance(x[i], x[j]));
  }
  sort_unique(out.values);
  return out;
}

SquaredDistanceSet pinned_distance_set(const RatPoint& a, const std::vector<RatPoint>& x, bool include_zero) {
  SquaredDistanceSet out;
  out.include_zero = include_zero;
  for (const RatPoint& y : x) {
    Rational d = squared_distance(a, y);
    if (d != 0 || include_zero) out.values.push_back(std::move(d));
  }
  sort_unique(out.values);
  return out;
}

BoundReport lattice_report(std::uint32_t p, std::size_t n, std::uint64_t cap) {
  if (n == 0) throw DomainError("lattice dimension must be positive");
  const std::uint64_t count = saturating_pow(std::uint64_t{p} + 1, n);
  require_within_cap(count, cap, "lattice [0,p]^n");
  // Integer coordinates keep the pair sweep in machine arithmetic.
  std::vector<std::vector<std::int64_t>> pts(count, std::vector<std::int64_t>(n));
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t rest = i;
    for (std::size_t k = n; k-- > 0;) {
      pts[i][k] = static_cast<std::int64_t>(rest % (p + 1));
      rest /= p + 1;
    }
  }
  const std::uint64_t bound = n * std::uint64_t{p} * p;
  std::vector<bool> seen(bound + 1, false);
  seen[0] = true;
  for (std::uint64_t i = 0; i < count; ++i) {
    for (std::uint64_t j = i + 1; j < count; ++j) {
      std::int64_t d = 0;
      for (std::size_t k = 0; k < n; ++k) d += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
      seen[static_cast<std::size_t>(d)] = true;
    }
  }
  const auto distinct = static_cast<unsigned long>(std::count(seen.begin(), seen.end(), true));
  BoundReport r = make_report("lattice_distances", "lattice distance count |Delta([0,p]^n)| <= n p^2 (+1 for zero)",
                              Rational(distinct), Rational(static_cast<unsigned long>(bound + 1)), 1, Tier::blocking);
  r.params = {{"p", p},
              {"n", n},
              {"distances_with_zero", distinct},
              {"distances_without_zero", distinct - 1},
              {"bound_without_zero", bound}};
  return r;
}

nlohmann::json GkRatio::to_json() const {
  return {{"points", points}, {"distances", distances}, {"reference", reference}, {"ratio", ratio}};
}

GkRatio gk_ratio(const std::vector<RatPoint>& x_in) {
  const std::vector<RatPoint> x = unique_points(x_in);
  if (x.size() < 2) throw DomainError("distance ratio needs at least two points");
  GkRatio g;
  g.points = x.size();
  g.distances = distance_set(x, true).size();
  const double ref = static_cast<double>(x.size()) / std::log(static_cast<double>(x.size()));
  g.reference = fixed6(ref);
  g.ratio = fixed6(static_cast<double>(g.distances) / ref);
  return g;
}

std::vector<Rational> dot_product_set(const RatPoint& a, const std::vector<RatPoint>& set) {
  std::vector<Rational> out;
  out.reserve(set.size());
  for (const RatPoint& y : set) out.push_back(a.dot(y));
  sort_unique(out);
  return out;
}

BoundReport dot_scaling_check(const RatPoint& a, const Rational& lambda, const std::vector<RatPoint>& set) {
  if (lambda == 0) throw DomainError("scaling factor must be nonzero");
  const std::vector<Rational> base = dot_product_set(a, set);
  const std::vector<Rational> scaled = dot_product_set(a.scaled(lambda), set);
  std::vector<Rational> expected;
  for (const Rational& v : base) expected.push_back(lambda * v);
  sort_unique(expected);
  std::vector<Rational> diff;
  std::set_symmetric_difference(scaled.begin(), scaled.end(), expected.begin(), expected.end(),
                                std::back_inserter(diff));
  BoundReport r = make_report("dot_product_scaling", "pinned dot-product scaling Pi^{lambda a}(A) = lambda Pi^a(A)",
                              Rational(static_cast<unsigned long>(diff.size())), 0, 1, Tier::blocking);
  r.params = {{"lambda", to_string(lambda)},
              {"set_size", set.size()},
              {"base_count", base.size()},
              {"scaled_count", scaled.size()}};
  return r;
}

}  // namespace projlab::euclid
