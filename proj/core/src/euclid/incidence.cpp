#include "projlab/euclid/incidence.hpp"

#include <algorithm>
#include <cmath>

#include "projlab/error.hpp"

namespace projlab::euclid {

namespace {

const char* const kCsAnchor = "Cauchy-Schwarz incidence bound |I| <= min(|P||L|^{1/2}+|L|, |L||P|^{1/2}+|P|)";
const char* const kStAnchor = "Szemeredi-Trotter incidence bound |I| <= 4(|P|^{2/3}|L|^{2/3}+|P|+|L|)";

// m with m(m-1)/2 == pairs.
std::size_t points_from_pairs(std::size_t pairs) {
  auto m = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(pairs))) / 2.0);
  while (m * (m - 1) / 2 > pairs) --m;
  while ((m + 1) * m / 2 <= pairs) ++m;
  return m;
}

void require_planar(const RatPoint& p) {
  if (p.dim() != 2) throw DomainError("point-line duality is planar");
}

}  // namespace

IncidenceTally incidences(const std::vector<RatPoint>& p_in, const std::vector<RatLine>& l_in) {
  const std::vector<RatPoint> p = unique_points(p_in);
  const std::vector<RatLine> l = unique_lines(l_in);
  if (!p.empty() && !l.empty()) require_same_dim(p.front(), l.front().base());
  for (const RatPoint& x : p) require_same_dim(x, p.front());
  for (const RatLine& line : l) require_same_dim(line.base(), l.front().base());
  IncidenceTally t;
  for (const RatLine& line : l) t.per_line[line] = 0;
  for (const RatPoint& x : p) t.per_point[x] = 0;
  for (const RatLine& line : l) {
    for (const RatPoint& x : p) {
      if (line.contains(x)) {
        ++t.total;
        ++t.per_line[line];
        ++t.per_point[x];
      }
    }
  }
  return t;
}

std::vector<std::pair<RatLine, std::size_t>> spanned_lines(const std::vector<RatPoint>& x_in) {
  const std::vector<RatPoint> x = unique_points(x_in);
  std::map<RatLine, std::size_t> pairs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) ++pairs[RatLine::through(x[i], x[j])];
  }
  std::vector<std::pair<RatLine, std::size_t>> out;
  out.reserve(pairs.size());
  for (auto& [line, c] : pairs) out.emplace_back(line, points_from_pairs(c));
  return out;
}

std::vector<std::pair<RatPoint, std::size_t>> intersection_points(const std::vector<RatLine>& l_in) {
  const std::vector<RatLine> l = unique_lines(l_in);
  std::map<RatPoint, std::size_t> pairs;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      if (auto p = l[i].intersect(l[j])) ++pairs[*p];
    }
  }
  std::vector<std::pair<RatPoint, std::size_t>> out;
  out.reserve(pairs.size());
  for (auto& [p, c] : pairs) out.emplace_back(p, points_from_pairs(c));
  return out;
}

std::array<BoundReport, 2> bound_report_cs_st(const std::vector<RatPoint>& p_in, const std::vector<RatLine>& l_in) {
  const std::vector<RatPoint> p = unique_points(p_in);
  const std::vector<RatLine> l = unique_lines(l_in);
  const IncidenceTally tally = incidences(p, l);
  const Rational np(static_cast<unsigned long>(p.size()));
  const Rational nl(static_cast<unsigned long>(l.size()));
  const Surd lhs(Rational(static_cast<unsigned long>(tally.total)));

  const Surd cs1 = Surd::root(nl, 2, np) + Surd(nl);
  const Surd cs2 = Surd::root(np, 2, nl) + Surd(np);
  BoundReport a = make_report("cauchy_schwarz_incidence", kCsAnchor, lhs, cs1, 1, Tier::blocking);
  BoundReport b = make_report("cauchy_schwarz_incidence", kCsAnchor, lhs, cs2, 1, Tier::blocking);
  // |I| <= min(x, y) iff it is below both; keep the tighter certificate.
  BoundReport cs = !a.holds ? a : !b.holds ? b : (a.rhs <= b.rhs ? a : b);
  cs.params["points"] = p.size();
  cs.params["lines"] = l.size();
  cs.params["incidences"] = tally.total;
  cs.params["rhs_expr"] = "min(" + cs1.to_string() + ", " + cs2.to_string() + ")";

  const Surd st = Surd::root(np * np * nl * nl, 3, 4) + Surd(4 * np) + Surd(4 * nl);
  BoundReport sz = make_report("szemeredi_trotter_incidence", kStAnchor, lhs, st, 4, Tier::blocking);
  sz.params["points"] = p.size();
  sz.params["lines"] = l.size();
  sz.params["incidences"] = tally.total;
  return {cs, sz};
}

std::vector<RatPoint> rich_points(const std::vector<RatLine>& l, std::size_t r) {
  if (r < 2) throw DomainError("richness threshold must be at least 2");
  std::vector<RatPoint> out;
  for (auto& [p, m] : intersection_points(l)) {
    if (m >= r) out.push_back(p);
  }
  return out;
}

std::vector<RatLine> rich_lines(const std::vector<RatPoint>& p, std::size_t r) {
  if (r < 2) throw DomainError("richness threshold must be at least 2");
  std::vector<RatLine> out;
  for (auto& [line, m] : spanned_lines(p)) {
    if (m >= r) out.push_back(line);
  }
  return out;
}

RatLine dualize(const RatPoint& p) {
  require_planar(p);
  return RatLine::from_point_direction(RatPoint({Rational(0), Rational(-p[1])}), RatPoint({Rational(1), p[0]}));
}

RatPoint dualize_line(const RatLine& l) {
  require_planar(l.base());
  if (l.is_vertical()) throw NotRepresentableError("vertical line has no dual point; shear first");
  return RatPoint({l.slope(), Rational(-l.intercept())});
}

std::vector<RatLine> dualize(const std::vector<RatPoint>& p) {
  std::vector<RatLine> out;
  out.reserve(p.size());
  for (const RatPoint& x : p) out.push_back(dualize(x));
  return unique_lines(std::move(out));
}

std::vector<RatPoint> dualize_lines(const std::vector<RatLine>& l) {
  std::vector<RatPoint> out;
  out.reserve(l.size());
  for (const RatLine& x : l) out.push_back(dualize_line(x));
  return unique_points(std::move(out));
}

RatPoint shear(const RatPoint& p, const Rational& lambda) {
  require_planar(p);
  return RatPoint({p[0] + lambda * p[1], p[1]});
}

RatLine shear(const RatLine& l, const Rational& lambda) {
  require_planar(l.base());
  const RatPoint& d = l.direction();
  return RatLine::from_point_direction(shear(l.base(), lambda), RatPoint({d[0] + lambda * d[1], d[1]}));
}

Rational choose_shear(const std::vector<RatLine>& l, Rng& rng, int max_retries) {
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const long num = rng.between(1, 16) * (rng.chance(1, 2) ? 1 : -1);
    const long den = rng.between(1, 16);
    Rational lambda(num, den);
    lambda.canonicalize();
    const bool ok = std::none_of(l.begin(), l.end(), [&lambda](const RatLine& line) {
      const RatPoint& d = line.direction();
      return d[0] + lambda * d[1] == 0;
    });
    if (ok) return lambda;
  }
  throw RetryLimitError("no shear found that removes vertical lines");
}

namespace {

RatPoint map_point(const std::vector<std::vector<long>>& m, const RatPoint& x) {
  std::vector<Rational> out(m.size(), Rational(0));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < x.dim(); ++c) out[r] += m[r][c] * x[c];
  }
  return RatPoint(std::move(out));
}

}  // namespace

PlanarConfiguration generic_project(const std::vector<RatPoint>& p_in, const std::vector<RatLine>& l_in, Rng& rng,
                                    int max_retries) {
  const std::vector<RatPoint> p = unique_points(p_in);
  const std::vector<RatLine> l = unique_lines(l_in);
  std::size_t n = 0;
  if (!p.empty()) n = p.front().dim();
  if (!l.empty()) n = l.front().dim();
  for (const RatPoint& x : p) {
    if (x.dim() != n) throw DomainError("mixed dimensions");
  }
  for (const RatLine& x : l) {
    if (x.dim() != n) throw DomainError("mixed dimensions");
  }
  if (n == 2 || (p.empty() && l.empty())) return {p, l, {}};
  if (n < 2) throw DomainError("generic projection needs dimension at least 2");

  std::vector<std::vector<bool>> on(p.size(), std::vector<bool>(l.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) on[i][j] = l[j].contains(p[i]);
  }
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<std::vector<long>> m(2, std::vector<long>(n));
    for (auto& row : m) {
      for (long& e : row) e = rng.between(-9, 9);
    }
    std::vector<RatPoint> ip;
    for (const RatPoint& x : p) ip.push_back(map_point(m, x));
    if (unique_points(ip).size() != p.size()) continue;
    std::vector<RatLine> il;
    bool ok = true;
    for (const RatLine& line : l) {
      const RatPoint d = map_point(m, line.direction());
      if (d.is_zero()) {
        ok = false;
        break;
      }
      il.push_back(RatLine::from_point_direction(map_point(m, line.base()), d));
    }
    if (!ok || unique_lines(il).size() != l.size()) continue;
    for (std::size_t i = 0; i < p.size() && ok; ++i) {
      for (std::size_t j = 0; j < l.size() && ok; ++j) ok = il[j].contains(ip[i]) == on[i][j];
    }
    if (!ok) continue;
    return {std::move(ip), std::move(il), m};
  }
  throw RetryLimitError("generic projection: no admissible map in " + std::to_string(max_retries) + " attempts");
}

}  // namespace projlab::euclid
