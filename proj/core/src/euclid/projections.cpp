#include "projlab/euclid/projections.hpp"

#include <algorithm>
#include <stdexcept>

#include "projlab/error.hpp"
#include "projlab/euclid/incidence.hpp"

namespace projlab::euclid {

namespace {

std::size_t isqrt(std::size_t v) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Number of distinct lines x + R theta: each is keyed by its point with the
// leading coordinate of theta set to zero.
std::size_t fibre_count(const std::vector<RatPoint>& x, const RatPoint& theta) {
  const std::size_t lead = theta.leading();
  std::vector<RatPoint> keys;
  keys.reserve(x.size());
  for (const RatPoint& p : x) keys.push_back(p - theta.scaled(p[lead]));
  std::sort(keys.begin(), keys.end());
  return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

// Covering counts over S(X), in direction_set order. x is deduplicated.
std::vector<std::size_t> covering_profile(const std::vector<RatPoint>& x, const std::vector<DirectionClass>& dirs) {
  std::vector<std::size_t> out;
  out.reserve(dirs.size());
  for (const DirectionClass& theta : dirs) out.push_back(fibre_count(x, theta.vector()));
  return out;
}

std::vector<DirectionClass> below(const std::vector<DirectionClass>& dirs, const std::vector<std::size_t>& counts,
                                  std::size_t s) {
  std::vector<DirectionClass> out;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (counts[i] < s) out.push_back(dirs[i]);
  }
  return out;
}

}  // namespace

std::vector<DirectionClass> direction_set(const std::vector<RatPoint>& x_in) {
  const std::vector<RatPoint> x = unique_points(x_in);
  if (x.size() < 2) throw DomainError("direction set needs at least two distinct points");
  std::vector<DirectionClass> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) out.emplace_back(x[j] - x[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t covering_count(const std::vector<RatPoint>& x_in, const DirectionClass& theta) {
  const std::vector<RatPoint> x = unique_points(x_in);
  if (x.empty()) throw DomainError("covering count of an empty set");
  return fibre_count(x, theta.vector());
}

std::vector<DirectionClass> exceptional_direction_set(const std::vector<RatPoint>& x_in, std::size_t s) {
  const std::vector<RatPoint> x = unique_points(x_in);
  if (s < 1 || s > x.size()) throw DomainError("threshold s must satisfy 1 <= s <= |X|");
  if (x.size() < 2) return {};
  const std::vector<DirectionClass> dirs = direction_set(x);
  return below(dirs, covering_profile(x, dirs), s);
}

ExceptionalDirections exceptional_directions(const std::vector<RatPoint>& x_in, std::size_t s) {
  const std::vector<RatPoint> x = unique_points(x_in);
  if (s < 1 || s > x.size()) throw DomainError("threshold s must satisfy 1 <= s <= |X|");
  const std::vector<DirectionClass> dirs = x.size() < 2 ? std::vector<DirectionClass>{} : direction_set(x);
  const std::vector<std::size_t> counts = covering_profile(x, dirs);
  ExceptionalDirections out{below(dirs, counts, s), {}};
  const std::size_t size = x.size();
  const Rational nx(static_cast<unsigned long>(size));
  const Rational rs(static_cast<unsigned long>(s));
  const Rational count(static_cast<unsigned long>(out.set.size()));

  const std::size_t s0 = isqrt(size);
  const std::size_t e0 = below(dirs, counts, s0).size();
  BoundReport a = make_report("ese_product_set", "product-set exceptional bound |E_{|X|^{1/2}}(X)| <= 1",
                              Rational(static_cast<unsigned long>(e0)), 1, 1, Tier::blocking);
  a.params = {{"set_size", size}, {"s", s0}};

  const bool in_range = 2 * s <= size;
  BoundReport b = make_report("ese_cauchy_schwarz", "Cauchy-Schwarz exceptional bound |E_s(X)| <= C s", count,
                              4 * rs, 4, Tier::tracked);
  b.params = {{"set_size", size}, {"s", s}, {"empirical_constant", to_string(count / rs)}};

  const Rational st_main = 1728 * rs * rs / nx;
  const Rational st_rhs = st_main > 12 ? st_main : Rational(12);
  const Rational scale = rs * rs / nx > 1 ? Rational(rs * rs / nx) : Rational(1);
  BoundReport c = make_report("ese_szemeredi_trotter",
                              "Szemeredi-Trotter exceptional bound |E_s(X)| <= C max(s^2/|X|, 1)", count, st_rhs,
                              1728, Tier::tracked);
  c.params = {{"set_size", size}, {"s", s}, {"empirical_constant", to_string(count / scale)}};
  if (!in_range) {
    b.note = "s outside the range s <= |X|/2";
    c.note = b.note;
  }
  out.reports = {a, b, c};
  return out;
}

bool is_collinear(const std::vector<RatPoint>& x_in) {
  const std::vector<RatPoint> x = unique_points(x_in);
  if (x.size() < 3) return true;
  const RatLine l = RatLine::through(x[0], x[1]);
  return std::all_of(x.begin() + 2, x.end(), [&l](const RatPoint& p) { return l.contains(p); });
}

OrdinaryLines ordinary_lines(const std::vector<RatPoint>& x_in) {
  const std::vector<RatPoint> x = unique_points(x_in);
  if (x.size() < 3) throw DomainError("ordinary lines need at least three distinct points");
  OrdinaryLines out;
  out.collinear = is_collinear(x);
  if (out.collinear) return out;
  for (auto& [line, m] : spanned_lines(x)) {
    if (m == 2) out.lines.push_back(line);
  }
  // Sylvester-Gallai only holds over the reals; an empty result here is a bug.
  if (out.lines.empty()) throw std::logic_error("noncollinear set without an ordinary line");
  return out;
}

BoundReport ungar_report(const std::vector<RatPoint>& x_in) {
  const std::vector<RatPoint> x = unique_points(x_in);
  if (x.empty() || x.front().dim() != 2) throw PreconditionError("direction count bound needs a planar set");
  if (is_collinear(x)) throw PreconditionError("direction count bound needs a noncollinear set");
  const std::size_t dirs = direction_set(x).size();
  BoundReport r = make_report("ungar_directions", "direction count |S(Y)| >= |Y| - 1",
                              Rational(static_cast<unsigned long>(x.size() - 1)),
                              Rational(static_cast<unsigned long>(dirs)), 1, Tier::blocking);
  r.params = {{"set_size", x.size()}, {"directions", dirs}};
  return r;
}

}  // namespace projlab::euclid
