#include "projlab/euclid/beck.hpp"

#include <algorithm>
#include <set>

#include "projlab/error.hpp"
#include "projlab/euclid/incidence.hpp"
#include "projlab/euclid/projections.hpp"
#include "projlab/rng.hpp"

namespace projlab::euclid {

namespace {

const char* const kBeckAnchor = "Beck dichotomy: max line >= |X|/C or |L(X)| >= |X|^2/(2C^2)";
const char* const kBeck2Anchor = "bivariate Beck dichotomy: joint rich line or |L(X,Y)| >= |X||Y|/(2C^2)";
constexpr unsigned long kGrid = 1UL << 16;

int floor_log2(std::size_t v) {
  int j = -1;
  while (v) {
    v >>= 1;
    ++j;
  }
  return j;
}

Rational ul(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

// Smallest k/2^16 >= 1 (k <= upper*2^16) satisfying a monotone predicate.
template <class Pred>
Rational grid_minimum(std::size_t upper, Pred holds) {
  unsigned long lo = kGrid;
  unsigned long hi = std::max<unsigned long>(kGrid, static_cast<unsigned long>(upper) * kGrid);
  if (holds(Rational(lo, kGrid))) return 1;
  while (hi - lo > 1) {
    const unsigned long mid = lo + (hi - lo) / 2;
    if (holds(Rational(mid, kGrid))) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  Rational r(hi, kGrid);
  r.canonicalize();
  return r;
}

}  // namespace

const char* branch_name(BeckBranch b) {
  switch (b) {
    case BeckBranch::concentrated: return "concentrated";
    case BeckBranch::spread: return "spread";
    default: return "neither";
  }
}

std::vector<RatLine> connecting_lines(const std::vector<RatPoint>& x) {
  if (unique_points(x).size() < 2) throw DomainError("connecting lines need two distinct points");
  std::vector<RatLine> out;
  for (auto& [line, m] : spanned_lines(x)) out.push_back(line);
  return out;
}

std::vector<RatLine> connecting_lines(const std::vector<RatPoint>& x_in, const std::vector<RatPoint>& y_in) {
  const std::vector<RatPoint> x = unique_points(x_in);
  const std::vector<RatPoint> y = unique_points(y_in);
  std::vector<RatLine> out;
  for (const RatPoint& a : x) {
    for (const RatPoint& b : y) {
      if (a != b) out.push_back(RatLine::through(a, b));
    }
  }
  if (out.empty()) throw DomainError("no pair of distinct points (x, y) in X x Y");
  return unique_lines(std::move(out));
}

std::size_t max_collinear(const std::vector<RatPoint>& x_in) {
  const std::vector<RatPoint> x = unique_points(x_in);
  if (x.size() <= 2) return x.size();
  std::size_t best = 2;
  for (auto& [line, m] : spanned_lines(x)) best = std::max(best, m);
  return best;
}

Nonconcentration nonconcentration(const std::vector<RatPoint>& y_in) {
  const std::vector<RatPoint> y = unique_points(y_in);
  if (y.size() < 3) throw DomainError("nonconcentration needs at least three points");
  Nonconcentration out;
  out.max_collinear = max_collinear(y);
  out.collinear = out.max_collinear == y.size();
  out.c = Rational(ul(y.size() - out.max_collinear) / ul(y.size()));
  if (out.collinear) out.note = "collinear input: c(Y) = 0";
  return out;
}

nlohmann::json BeckDiagnostics::to_json() const {
  nlohmann::json profile = nlohmann::json::object();
  for (auto& [j, c] : dyadic_profile) profile[std::to_string(j)] = c;
  return {{"max_collinear", max_collinear},
          {"nonconcentration_c", to_string(nonconcentration_c)},
          {"connecting_count", connecting_count},
          {"dyadic_profile", profile},
          {"branch", branch_name(branch)},
          {"minimal_C", to_string(minimal_c)}};
}

BeckResult beck_report(const std::vector<RatPoint>& x_in, const Rational& c) {
  if (c < 1) throw DomainError("Beck constant must be at least 1");
  const std::vector<RatPoint> x = unique_points(x_in);
  const std::size_t n = x.size();
  BeckResult out;
  BeckDiagnostics& d = out.diagnostics;
  const auto lines = n >= 2 ? spanned_lines(x) : std::vector<std::pair<RatLine, std::size_t>>{};
  d.max_collinear = n <= 2 ? n : 2;
  for (auto& [line, m] : lines) {
    d.max_collinear = std::max(d.max_collinear, m);
    ++d.dyadic_profile[floor_log2(m)];
  }
  d.connecting_count = lines.size();
  d.nonconcentration_c = n == 0 ? Rational(0) : Rational(ul(n - d.max_collinear) / ul(n));

  const Rational nx = ul(n);
  const Rational mc = ul(d.max_collinear);
  const Rational nl = ul(d.connecting_count);
  auto concentrated = [&](const Rational& cc) { return nx <= cc * mc; };
  auto spread = [&](const Rational& cc) { return nx * nx <= 2 * cc * cc * nl; };
  d.branch = concentrated(c) ? BeckBranch::concentrated : spread(c) ? BeckBranch::spread : BeckBranch::neither;
  d.minimal_c = grid_minimum(n, [&](const Rational& cc) { return concentrated(cc) || spread(cc); });

  if (d.branch == BeckBranch::concentrated) {
    out.report = make_report("beck_dichotomy", kBeckAnchor, nx, c * mc, c, Tier::blocking);
  } else {
    out.report = make_report("beck_dichotomy", kBeckAnchor, nx * nx / (2 * c * c), nl, c, Tier::blocking);
  }
  out.report.params = {{"set_size", n}, {"C", to_string(c)}, {"diagnostics", d.to_json()}};
  if (!out.report.holds) {
    std::string pts;
    for (const RatPoint& p : x) pts += (pts.empty() ? "" : ", ") + p.to_string();
    out.report.params["counterexample"] = pts;
  }
  return out;
}

BeckResult beck_report(const std::vector<RatPoint>& x_in, const std::vector<RatPoint>& y_in, const Rational& c) {
  if (c < 1) throw DomainError("Beck constant must be at least 1");
  const std::vector<RatPoint> x = unique_points(x_in);
  const std::vector<RatPoint> y = unique_points(y_in);
  BeckResult out;
  BeckDiagnostics& d = out.diagnostics;

  std::vector<RatPoint> all = x;
  all.insert(all.end(), y.begin(), y.end());
  all = unique_points(std::move(all));
  // Joint counts (|X cap l|, |Y cap l|) for every line holding two points of X u Y,
  // plus the single-point lines every point lies on.
  std::set<std::pair<std::size_t, std::size_t>> joint;
  for (const RatPoint& p : all) {
    const bool in_x = std::binary_search(x.begin(), x.end(), p);
    const bool in_y = std::binary_search(y.begin(), y.end(), p);
    joint.emplace(in_x ? 1 : 0, in_y ? 1 : 0);
  }
  if (all.size() >= 2) {
    for (const RatLine& line : connecting_lines(all)) {
      std::size_t cx = 0, cy = 0;
      for (const RatPoint& p : x) cx += line.contains(p) ? 1 : 0;
      for (const RatPoint& p : y) cy += line.contains(p) ? 1 : 0;
      joint.emplace(cx, cy);
    }
  }
  const auto mixed = connecting_lines(x, y);
  for (const RatLine& line : mixed) {
    std::size_t m = 0;
    for (const RatPoint& p : all) m += line.contains(p) ? 1 : 0;
    ++d.dyadic_profile[floor_log2(m)];
  }
  d.connecting_count = mixed.size();
  d.max_collinear = max_collinear(all);
  d.nonconcentration_c = Rational(ul(all.size() - d.max_collinear) / ul(all.size()));

  const Rational nx = ul(x.size()), ny = ul(y.size()), nl = ul(d.connecting_count);
  auto concentrated = [&](const Rational& cc) {
    return std::any_of(joint.begin(), joint.end(), [&](const auto& jc) {
      return nx <= cc * ul(jc.first) && ny <= cc * ul(jc.second);
    });
  };
  auto spread = [&](const Rational& cc) { return nx * ny <= 2 * cc * cc * nl; };
  d.branch = concentrated(c) ? BeckBranch::concentrated : spread(c) ? BeckBranch::spread : BeckBranch::neither;
  d.minimal_c = grid_minimum(std::max({x.size(), y.size(), std::size_t{1}}),
                             [&](const Rational& cc) { return concentrated(cc) || spread(cc); });

  if (d.branch == BeckBranch::concentrated) {
    // Smallest C' with a jointly rich line; concentrated iff C' <= C.
    Rational need = -1;
    for (const auto& [jx, jy] : joint) {
      if (jx == 0 || jy == 0) continue;
      const Rational rx = nx / ul(jx), ry = ny / ul(jy);
      const Rational r = rx > ry ? rx : ry;
      if (need < 0 || r < need) need = r;
    }
    out.report = make_report("beck_bivariate", kBeck2Anchor, need, c, c, Tier::blocking);
    out.report.note = "joint concentration on one line";
  } else {
    out.report = make_report("beck_bivariate", kBeck2Anchor, nx * ny / (2 * c * c), nl, c, Tier::blocking);
  }
  out.report.params = {{"x_size", x.size()}, {"y_size", y.size()}, {"C", to_string(c)},
                       {"diagnostics", d.to_json()}};
  return out;
}

BoundReport erdos_beck_report(const std::vector<RatPoint>& x_in) {
  const std::vector<RatPoint> x = unique_points(x_in);
  if (x.size() < 3) throw DomainError("Erdos-Beck report needs at least three points");
  const std::size_t mc = max_collinear(x);
  const std::size_t t = x.size() - mc;
  const std::size_t lines = connecting_lines(x).size();
  const Rational nx = ul(x.size());
  BoundReport r = make_report("erdos_beck", "Erdos-Beck |L(X)| >= c |X| t, t = |X| - max line", nx * ul(t) / 4,
                              ul(lines), Rational(1, 4), Tier::tracked);
  r.params = {{"set_size", x.size()}, {"max_collinear", mc}, {"t", t}, {"connecting_lines", lines}};
  if (t > 0) r.params["empirical_constant"] = to_string(ul(lines) / (nx * ul(t)));
  return r;
}

std::size_t pinned_count(const RatPoint& x, const std::vector<RatPoint>& y) {
  std::vector<DirectionClass> dirs;
  for (const RatPoint& p : y) {
    require_same_dim(x, p);
    if (p != x) dirs.emplace_back(p - x);
  }
  std::sort(dirs.begin(), dirs.end());
  return static_cast<std::size_t>(std::unique(dirs.begin(), dirs.end()) - dirs.begin());
}

std::array<BoundReport, 3> pinned_radial_report(const std::vector<RatPoint>& x_in, const std::vector<RatPoint>& y_in) {
  const std::vector<RatPoint> x = unique_points(x_in);
  const std::vector<RatPoint> y = unique_points(y_in);
  if (x.empty()) throw DomainError("pinned radial report needs at least one pin");
  std::size_t best = 0;
  for (const RatPoint& p : x) best = std::max(best, pinned_count(p, y));
  const std::size_t cx = max_collinear(x);
  const Rational nx = ul(x.size()), ny = ul(y.size()), c = ul(cx);
  const Surd measured(ul(best));
  const nlohmann::json params = {{"pins", x.size()}, {"targets", y.size()}, {"max_pinned", best}, {"C", cx}};
  const bool degenerate = best == 0;

  BoundReport a = make_report("pinned_radial_product", "pinned radial bound max_x |pi_x(Y)| >= |Y|^{1/2}/2",
                              Surd::root(ny, 2, Rational(1, 2)), measured, Rational(1, 2), Tier::blocking);
  if (is_collinear(x)) {
    a.tier = Tier::tracked;
    a.note = "precondition unmet: pins collinear";
  }

  const Rational min_xy = nx < ny ? nx : ny;
  BoundReport b = make_report("pinned_radial_cauchy_schwarz",
                              "pinned radial bound max_x |pi_x(Y)| >= (2C)^{-1} min(|X|,|Y|)", min_xy / (2 * c),
                              ul(best), 1 / (2 * c), Tier::tracked);

  // (12C)^{-3/2} min(sqrt(|X||Y|), |Y|) = sqrt(min(|X||Y|, |Y|^2) / (12C)^3)
  const Rational k3 = 12 * c * 12 * c * 12 * c;
  const Rational inner = nx * ny < ny * ny ? Rational(nx * ny) : Rational(ny * ny);
  BoundReport st = make_report("pinned_radial_szemeredi_trotter",
                               "pinned radial bound max_x |pi_x(Y)| >= (12C)^{-3/2} min(|X|^{1/2}|Y|^{1/2},|Y|)",
                               Surd::root(inner / k3, 2), measured, 1 / k3, Tier::tracked);
  st.params = {{"constant_form", "square root of the recorded constant"}};

  for (BoundReport* r : {&a, &b, &st}) {
    nlohmann::json merged = params;
    for (auto it = r->params.begin(); it != r->params.end(); ++it) merged[it.key()] = it.value();
    r->params = merged;
    if (degenerate) r->note = r->note.empty() ? "degenerate: no target visible from any pin" : r->note + "; degenerate";
  }
  return {a, b, st};
}

BoundReport radial_containment_check(const std::vector<RatPoint>& y_in, std::size_t s,
                                     const ContainmentOptions& options) {
  const std::vector<RatPoint> y = unique_points(y_in);
  if (y.size() < 3 || is_collinear(y)) throw PreconditionError("radial containment needs a noncollinear set");
  const Nonconcentration nc = nonconcentration(y);
  if (s < 1 || ul(s) > nc.c * ul(y.size())) {
    throw PreconditionError("radial containment needs 1 <= s <= c(Y)|Y| = " +
                            std::to_string(y.size() - nc.max_collinear));
  }
  const std::vector<RatLine> lines = connecting_lines(y);
  std::vector<RatPoint> p2 = rich_points(lines, 2);

  std::size_t pin_failures = 0, outside_y = 0, min_candidate = SIZE_MAX;
  for (const RatPoint& p : y) {
    if (!std::binary_search(p2.begin(), p2.end(), p)) ++outside_y;
  }
  std::vector<RatPoint> candidates = p2;
  candidates.insert(candidates.end(), y.begin(), y.end());
  candidates = unique_points(std::move(candidates));
  std::size_t exceptional_candidates = 0;
  for (const RatPoint& p : candidates) {
    const std::size_t cnt = pinned_count(p, y);
    min_candidate = std::min(min_candidate, cnt);
    if (cnt < 2) ++pin_failures;
    if (cnt < s) ++exceptional_candidates;
  }

  // Pins outside P_2(L(Y)): half generic, half on a connecting line.
  Rng rng(options.seed);
  Rational lo = y.front()[0], hi = y.front()[0];
  for (const RatPoint& p : y) {
    for (const Rational& c : p.coords()) {
      if (c < lo) lo = c;
      if (c > hi) hi = c;
    }
  }
  const Rational span = hi - lo + 2;
  std::size_t min_outside = SIZE_MAX, sampled = 0, attempts = 0;
  while (sampled < options.outside_samples && attempts < 100 * options.outside_samples + 1000) {
    ++attempts;
    std::optional<RatPoint> pin;
    if (sampled % 2 == 0) {
      std::vector<Rational> coords;
      for (std::size_t i = 0; i < y.front().dim(); ++i) {
        Rational v(static_cast<long>(rng.below(4096)), 4096);
        coords.push_back(lo - 1 + v * span);
      }
      pin = RatPoint(std::move(coords));
    } else {
      const RatLine& l = lines[rng.below(lines.size())];
      Rational t(static_cast<long>(rng.below(8192)) - 4096, static_cast<long>(rng.between(1, 97)));
      t.canonicalize();
      pin = l.base() + l.direction().scaled(t);
    }
    if (std::binary_search(p2.begin(), p2.end(), *pin)) continue;
    min_outside = std::min(min_outside, pinned_count(*pin, y));
    ++sampled;
  }

  const Rational lhs = ul(s);
  const Rational rhs = min_outside == SIZE_MAX ? lhs : ul(min_outside);
  BoundReport r = make_report("radial_containment", "radial exceptional containment E_s(Y) in P_2(L(Y))", lhs, rhs,
                              1, Tier::blocking);
  if (pin_failures || outside_y) {
    r.holds = false;
    r.lhs = 2;
    r.rhs = ul(min_candidate);
    r.note = "a candidate pin sees fewer than 2 directions or a point of Y is not 2-rich";
  }
  r.params = {{"set_size", y.size()},
              {"s", s},
              {"c_numerator", y.size() - nc.max_collinear},
              {"candidates", candidates.size()},
              {"exceptional_candidates", exceptional_candidates},
              {"min_candidate_count", min_candidate},
              {"pin_failures", pin_failures},
              {"points_outside_p2", outside_y},
              {"outside_samples", sampled},
              {"min_outside_count", min_outside == SIZE_MAX ? 0 : min_outside}};
  return r;
}

}  // namespace projlab::euclid
