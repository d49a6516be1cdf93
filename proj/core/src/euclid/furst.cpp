#include "projlab/euclid/furst.hpp"

#include <algorithm>

#include "projlab/error.hpp"

namespace projlab::euclid {

namespace {

Rational ul(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

std::size_t points_on(const RatLine& l, const std::vector<RatPoint>& pts) {
  std::size_t c = 0;
  for (const RatPoint& p : pts) c += l.contains(p) ? 1 : 0;
  return c;
}

}  // namespace

void validate_primal(const FurstConfig& cfg) {
  if (cfg.s < 2 || cfg.t < 1) throw ConfigInvalidError("Furstenberg parameters need s >= 2 and t >= 1");
  const std::vector<RatPoint> pts = unique_points(cfg.points);
  const std::vector<RatLine> lines = unique_lines(cfg.lines);
  if (lines.size() < cfg.t) {
    throw ConfigInvalidError("only " + std::to_string(lines.size()) + " distinct lines, need t = " +
                             std::to_string(cfg.t));
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t m = points_on(lines[i], pts);
    if (m < cfg.s) {
      throw ConfigInvalidError("line " + std::to_string(i) + " (" + lines[i].to_string() + ") carries " +
                               std::to_string(m) + " < s = " + std::to_string(cfg.s) + " points");
    }
  }
}

std::array<BoundReport, 3> furst_verify(const FurstConfig& cfg) {
  validate_primal(cfg);
  const std::size_t f = unique_points(cfg.points).size();
  const std::size_t nl = unique_lines(cfg.lines).size();
  const Rational s = ul(cfg.s), t = ul(cfg.t);
  const Surd measured(ul(f));
  const nlohmann::json params = {{"s", cfg.s}, {"t", cfg.t}, {"points", f}, {"lines", nl}};

  BoundReport a = make_report("furstenberg_exact", "Furstenberg bound (s-1) t^{1/2} <= |F|", Surd::root(t, 2, s - 1),
                              measured, 1, Tier::blocking);

  const Rational min_b = cfg.s <= cfg.t ? Rational(s * s) : Rational(s * t);
  BoundReport b = make_report("furstenberg_cauchy_schwarz", "Furstenberg bound |F| >= C min(s^2, st)", min_b / 4,
                              ul(f), Rational(1, 4), Tier::tracked);
  b.params["ratio_to_scale"] = to_string(ul(f) / min_b);

  // (9/104)^{3/2} m = sqrt((9/104)^3 m^2), m = st if t <= s else s^{3/2} t^{1/2}.
  const Rational k3 = Rational(729, 1124864);
  const Rational m2 = cfg.t <= cfg.s ? Rational(s * s * t * t) : Rational(s * s * s * t);
  BoundReport c = make_report("furstenberg_szemeredi_trotter",
                              "Furstenberg bound |F| >= C min(st, s^{3/2} t^{1/2})", Surd::root(k3 * m2, 2), measured,
                              k3, Tier::tracked);
  c.params["constant_form"] = "square root of the recorded constant";
  c.params["ratio_to_scale_squared"] = to_string(ul(f) * ul(f) / m2);
  if (cfg.s < 13) c.note = "s < 13: constant not covered by the incidence argument";

  for (BoundReport* r : {&a, &b, &c}) {
    for (auto it = params.begin(); it != params.end(); ++it) r->params[it.key()] = it.value();
  }
  return {a, b, c};
}

std::uint64_t j_count_by_lines(const std::vector<RatLine>& lines_in, const std::vector<RatPoint>& pins_in) {
  const std::vector<RatLine> lines = unique_lines(lines_in);
  const std::vector<RatPoint> pins = unique_points(pins_in);
  std::uint64_t j = 0;
  for (const RatLine& l : lines) {
    const std::uint64_t m = points_on(l, pins);
    j += m * m;
  }
  return j;
}

std::uint64_t j_count_by_triples(const std::vector<RatLine>& lines_in, const std::vector<RatPoint>& pins_in) {
  const std::vector<RatLine> lines = unique_lines(lines_in);
  const std::vector<RatPoint> pins = unique_points(pins_in);
  std::vector<std::vector<bool>> on(pins.size(), std::vector<bool>(lines.size()));
  for (std::size_t i = 0; i < pins.size(); ++i) {
    for (std::size_t k = 0; k < lines.size(); ++k) on[i][k] = lines[k].contains(pins[i]);
  }
  std::uint64_t j = 0;
  for (std::size_t a = 0; a < pins.size(); ++a) {
    for (std::size_t b = 0; b < pins.size(); ++b) {
      for (std::size_t k = 0; k < lines.size(); ++k) j += (on[a][k] && on[b][k]) ? 1 : 0;
    }
  }
  return j;
}

DualFurstResult dual_furst_verify(const std::vector<RatLine>& lines_in, const std::vector<RatPoint>& pins_in,
                                  std::size_t s, std::size_t t) {
  const std::vector<RatLine> lines = unique_lines(lines_in);
  const std::vector<RatPoint> pins = unique_points(pins_in);
  if (s < 1 || t < 1) throw ConfigInvalidError("dual Furstenberg parameters need s, t >= 1");
  if (pins.size() < t) {
    throw ConfigInvalidError("only " + std::to_string(pins.size()) + " pins, need t = " + std::to_string(t));
  }
  std::size_t s_max = 0;
  for (std::size_t i = 0; i < pins.size(); ++i) {
    std::size_t deg = 0;
    for (const RatLine& l : lines) deg += l.contains(pins[i]) ? 1 : 0;
    if (deg < s) {
      throw ConfigInvalidError("pin " + std::to_string(i) + " (" + pins[i].to_string() + ") lies on " +
                               std::to_string(deg) + " < s = " + std::to_string(s) + " lines");
    }
    s_max = std::max(s_max, deg);
  }
  DualFurstResult out;
  out.j_count = j_count_by_lines(lines, pins);
  out.j_oracle = j_count_by_triples(lines, pins);
  const Rational x = ul(pins.size()), j = Rational(static_cast<unsigned long>(out.j_count));
  const Rational rs = ul(s), rt = ul(t), nl = ul(lines.size());
  const nlohmann::json params = {{"s", s},         {"t", t},           {"pins", pins.size()}, {"lines", lines.size()},
                                 {"s_max", s_max}, {"J", out.j_count}, {"J_oracle", out.j_oracle}};

  out.chain[0] = make_report("dual_furstenberg_j_lower", "triple count lower bound J >= (|X|s)^2/|L|",
                             (x * rs) * (x * rs) / nl, j, 1, Tier::blocking);
  out.chain[1] = make_report("dual_furstenberg_j_upper", "triple count upper bound J <= |X| s_max + |X|^2", j,
                             x * ul(s_max) + x * x, 1, Tier::blocking);
  const Rational scale = s <= t ? Rational(rs * rs) : Rational(rs * rt);
  out.bound = make_report("dual_furstenberg", "dual Furstenberg bound |L| >= C min(s^2, st)", scale / 2, nl,
                          Rational(1, 2), Tier::tracked);
  out.bound.params["ratio_to_scale"] = to_string(nl / scale);
  for (BoundReport* r : {&out.chain[0], &out.chain[1], &out.bound}) {
    for (auto it = params.begin(); it != params.end(); ++it) r->params[it.key()] = it.value();
    if (out.j_count != out.j_oracle) {
      r->holds = false;
      r->note = "J counts disagree between the two methods";
    }
  }
  return out;
}

FurstConfig grid_example(std::size_t s, std::size_t t) {
  if (s < 2 || t < 1) throw DomainError("grid example needs s >= 2 and t >= 1");
  std::size_t m_count = 1;
  while (m_count * m_count * s < t) ++m_count;  // M = ceil(sqrt(t/s))
  FurstConfig cfg;
  cfg.s = s;
  cfg.t = t;
  std::vector<RatPoint> pts;
  for (std::size_t m = 0; m < m_count && cfg.lines.size() < t; ++m) {
    for (std::size_t c = 0; c < s * m_count && cfg.lines.size() < t; ++c) {
      const long lm = static_cast<long>(m), lc = static_cast<long>(c);
      cfg.lines.push_back(RatLine::through(RatPoint::of({0, lc}), RatPoint::of({1, lm + lc})));
      for (std::size_t x = 0; x < s; ++x) {
        const long lx = static_cast<long>(x);
        pts.push_back(RatPoint::of({lx, lm * lx + lc}));
      }
    }
  }
  cfg.points = unique_points(std::move(pts));
  cfg.lines = unique_lines(std::move(cfg.lines));
  validate_primal(cfg);
  return cfg;
}

}  // namespace projlab::euclid
