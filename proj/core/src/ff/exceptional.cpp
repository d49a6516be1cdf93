#include "projlab/ff/exceptional.hpp"

#include <algorithm>

#include "projlab/error.hpp"
#include "projlab/ff/projection.hpp"

namespace projlab::ff {

namespace {

const char* const kFalconerAnchor = "finite-field Falconer projection bound |E_s(X)| <= C p^{k(n-k)} s/|X|";
const char* const kRadialAnchor = "finite-field radial high-low bound |E_s(Y)| <= 8n p^{n-1} s/|Y|";
const char* const kRadial12Anchor = "finite-field radial bound |E_s(Y)| <= 12 q^{n-1} s/|Y|";

const FpVec& first_point(const std::vector<FpVec>& x) {
  if (x.empty()) throw DomainError("point set must be nonempty");
  for (const FpVec& v : x) require_same_space(v, x.front());
  return x.front();
}

}  // namespace

std::string format_points(const std::vector<FpVec>& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += x[i].to_string();
  }
  return out;
}

ProjectionProfile projection_profile(const std::vector<FpVec>& x, std::size_t k, std::uint64_t cap) {
  const FpVec& ref = first_point(x);
  const std::size_t n = ref.dim();
  if (k < 1 || k + 1 > n) throw DomainError("projection rank must satisfy 1 <= k <= n-1");
  ProjectionProfile prof;
  prof.subspaces = enumerate_subspaces(ref.field(), n, k, cap);
  prof.sizes.reserve(prof.subspaces.size());
  for (const FpSubspace& v : prof.subspaces) prof.sizes.push_back(CosetCounter(v).count(x));
  return prof;
}

std::vector<FpSubspace> orth_exceptional_set(const std::vector<FpVec>& x, std::size_t k, std::uint64_t s,
                                             std::uint64_t cap) {
  const ProjectionProfile prof = projection_profile(x, k, cap);
  std::vector<FpSubspace> out;
  for (std::size_t i = 0; i < prof.subspaces.size(); ++i) {
    if (prof.sizes[i] < s) out.push_back(prof.subspaces[i]);
  }
  return out;
}

std::vector<BoundReport> falconer_ff_report(const std::vector<FpVec>& x_in, std::size_t k,
                                            const FalconerOptions& options) {
  const std::vector<FpVec> x = unique_points(x_in);
  const FpVec& ref = first_point(x);
  if (ref.field().degree() != 1) throw DomainError("Falconer report is defined over prime fields");
  const std::uint64_t p = ref.field().p();
  const std::size_t n = ref.dim();
  const ProjectionProfile prof = projection_profile(x, k, options.cap);

  const std::uint64_t size = x.size();
  const std::uint64_t s_max = std::min<std::uint64_t>(size, saturating_pow(p, k) / 2);
  const Rational constant = k == 1 ? Rational(2) : options.higher_rank_constant;
  const Tier tier = k == 1 ? Tier::blocking : Tier::tracked;
  const Integer grass_scale(std::to_string(saturating_pow(p, k * (n - k))));

  std::vector<BoundReport> out;
  for (std::uint64_t s = 1; s <= s_max; ++s) {
    const auto exceptional = static_cast<std::uint64_t>(
        std::count_if(prof.sizes.begin(), prof.sizes.end(), [s](std::size_t m) { return m < s; }));
    const Rational rhs = constant * Rational(grass_scale) * Rational(s) / Rational(size);
    BoundReport r = make_report(k == 1 ? "ff_falconer_k1" : "ff_falconer_rank_k", kFalconerAnchor,
                                Rational(exceptional), rhs, constant, tier);
    r.params = {{"p", p}, {"n", n}, {"k", k}, {"s", s}, {"set_size", size}};
    if (k >= 2) {
      r.params["constant_kind"] = "empirical";
      if (!r.holds) r.note = "constant recalibration";
    } else if (!r.holds) {
      r.note = "counterexample";
      r.params["counterexample"] = format_points(x);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::size_t> radial_profile(const Field& field, std::size_t n, const std::vector<FpVec>& y,
                                        std::uint64_t cap) {
  for (const FpVec& v : y) {
    if (!(v.field() == field) || v.dim() != n) throw DomainError("point from another space");
  }
  const std::uint64_t total = saturating_pow(field.order(), n);
  require_within_cap(total, cap, "radial pin sweep");
  std::vector<std::size_t> counts(total);
  for (std::uint64_t i = 0; i < total; ++i) counts[i] = radial_count(point_at(field, n, i), y);
  return counts;
}

std::vector<FpVec> radial_exceptional_set(const Field& field, std::size_t n, const std::vector<FpVec>& y,
                                          std::uint64_t s, std::uint64_t cap) {
  const std::vector<std::size_t> counts = radial_profile(field, n, y, cap);
  std::vector<FpVec> out;
  for (std::uint64_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < s) out.push_back(point_at(field, n, i));
  }
  return out;
}

RadialBoundReport radial_bound_report(const Field& field, std::size_t n, const std::vector<FpVec>& y_in,
                                      std::uint64_t cap) {
  if (field.degree() != 1) throw DomainError("radial report is defined over prime fields");
  const std::vector<FpVec> y = unique_points(y_in);
  const std::vector<std::size_t> counts = radial_profile(field, n, y, cap);
  const std::uint64_t size = y.size();
  const std::uint64_t pn1 = saturating_pow(field.p(), n - 1);
  auto exceptional = [&counts](std::uint64_t s) {
    return static_cast<std::uint64_t>(
        std::count_if(counts.begin(), counts.end(), [s](std::size_t c) { return c < s; }));
  };

  RadialBoundReport out;
  const std::uint64_t threshold8 = 8 * n * pn1;
  if (size > threshold8) {
    const Rational constant(static_cast<unsigned long>(8 * n));
    // s <= p^{n-1}/sqrt(2)  <=>  2 s^2 <= p^{2(n-1)}
    for (std::uint64_t s = 1; s <= size && 2 * s * s <= pn1 * pn1; ++s) {
      const Rational rhs = constant * Rational(Integer(std::to_string(pn1))) * Rational(s) / Rational(size);
      BoundReport r = make_report("ff_radial_8n", kRadialAnchor, Rational(exceptional(s)), rhs, constant,
                                  Tier::blocking);
      r.params = {{"p", field.p()}, {"n", n}, {"s", s}, {"set_size", size}};
      if (!r.holds) r.params["counterexample"] = format_points(y);
      out.reports.push_back(std::move(r));
    }
  } else {
    out.skipped.push_back("ff_radial_8n: precondition unmet (|Y| = " + std::to_string(size) +
                          " <= 8n p^{n-1} = " + std::to_string(threshold8) + ")");
  }

  const std::uint64_t threshold12 = 6 * pn1;
  if (size >= threshold12) {
    const Rational constant(12);
    for (std::uint64_t s = 1; s <= pn1 / 4; ++s) {
      const Rational rhs = constant * Rational(Integer(std::to_string(pn1))) * Rational(s) / Rational(size);
      BoundReport r = make_report("ff_radial_12", kRadial12Anchor, Rational(exceptional(s)), rhs, constant,
                                  Tier::blocking);
      r.params = {{"p", field.p()}, {"n", n}, {"s", s}, {"set_size", size}};
      if (!r.holds) r.params["counterexample"] = format_points(y);
      out.reports.push_back(std::move(r));
    }
  } else {
    out.skipped.push_back("ff_radial_12: precondition unmet (|Y| = " + std::to_string(size) +
                          " < 6 p^{n-1} = " + std::to_string(threshold12) + ")");
  }
  return out;
}

FullGridExample example_fullgrid(std::uint32_t p, std::uint64_t cap) {
  const Field field = Field::prime(p);
  FullGridExample ex;
  ex.points = all_points(field, 2, cap);
  // Canonical directions in order: (0,1), (1,0), (1,1), ..., (1,p-1).
  std::vector<FpVec> directions;
  for (std::uint64_t i = 0; i < ex.points.size() && directions.size() < p; ++i) {
    const FpVec& d = ex.points[i];
    if (!d.is_zero() && d.normalized() == d) directions.push_back(d);
  }
  for (const FpVec& d : directions) {
    for (std::uint32_t c = 0; c < p; ++c) {
      // Lines in direction d are indexed by a point on the axis transversal to d.
      const FpVec start = d.leading() == 0 ? FpVec::of(field, {0, c}) : FpVec::of(field, {c, 0});
      ex.lines.push_back(FpLine::from_point_direction(start, d));
    }
  }
  std::sort(ex.lines.begin(), ex.lines.end());
  for (const FpLine& l : ex.lines) {
    for (const FpVec& x : ex.points) ex.incidences += l.contains(x) ? 1 : 0;
  }
  const Rational identity = Rational(static_cast<unsigned long>(ex.lines.size())) * Rational(p);
  ex.report = make_report("fullgrid_incidences", "full-grid incidence identity |I(P,L)| = |L| p = p^3", identity,
                          Rational(static_cast<unsigned long>(ex.incidences)), 1, Tier::blocking);
  ex.report.params = {{"p", p},
                      {"points", ex.points.size()},
                      {"lines", ex.lines.size()},
                      {"incidences", ex.incidences}};
  return ex;
}

SubfieldExample example_subfield(std::uint32_t p, std::uint64_t cap) {
  SubfieldExample ex{Field::quadratic(p), {}, {}, {}};
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      ex.points.emplace_back(ex.field, std::vector<Scalar>{{a, 0}, {b, 0}});
    }
  }
  std::sort(ex.points.begin(), ex.points.end());
  const ProjectionProfile prof = projection_profile(ex.points, 1, cap);
  for (std::size_t i = 0; i < prof.subspaces.size(); ++i) {
    if (prof.sizes[i] <= p) ex.small_directions.push_back(prof.subspaces[i]);
  }
  const auto count = static_cast<unsigned long>(ex.small_directions.size());
  ex.report = make_report("subfield_exceptional_count",
                          "subfield example #{theta : |P_theta(F_p^2)| <= p} = p in F_{p^2}^2",
                          Rational(count), Rational(p), 1, Tier::blocking);
  ex.report.holds = count == p;
  std::vector<std::string> dirs;
  for (const FpSubspace& v : ex.small_directions) dirs.push_back(v.to_string());
  ex.report.params = {{"p", p},
                      {"q", ex.field.order()},
                      {"modulus", "t^2 + " + std::to_string(ex.field.c1()) + "t + " + std::to_string(ex.field.c0())},
                      {"set_size", ex.points.size()},
                      {"directions_swept", prof.subspaces.size()},
                      {"count", count},
                      {"directions", dirs}};
  if (count != p) {
    ex.report.note = "count differs from the claimed value p; see params.directions";
  }
  return ex;
}

}  // namespace projlab::ff
