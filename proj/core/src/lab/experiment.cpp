#include "projlab/lab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "projlab/error.hpp"
#include "projlab/euclid/beck.hpp"
#include "projlab/euclid/distances.hpp"
#include "projlab/euclid/furst.hpp"
#include "projlab/euclid/incidence.hpp"
#include "projlab/euclid/projections.hpp"
#include "projlab/ff/exceptional.hpp"
#include "projlab/ff/fourier.hpp"
#include "projlab/lab/corpus.hpp"
#include "projlab/rng.hpp"

namespace projlab::lab {

namespace {

using Kind = ParamSpec::Kind;

ParamSpec integer(std::string name, std::string def, std::string help) {
  return {std::move(name), Kind::integer, std::move(def), false, std::move(help)};
}
ParamSpec rational(std::string name, std::string def, std::string help) {
  return {std::move(name), Kind::rational, std::move(def), false, std::move(help)};
}
ParamSpec text(std::string name, std::string def, std::string help) {
  return {std::move(name), Kind::text, std::move(def), false, std::move(help)};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& path, const std::string& value) {
  try {
    if (value.empty() || value[0] == '-' || value[0] == '+') throw std::invalid_argument(value);
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(path, "expected a nonnegative integer, got '" + value + "'");
  }
}

// Validated parameter view.
class Params {
 public:
  Params(const ExperimentConfig& c) : config_(c) {}
  std::uint64_t u(const std::string& k) const { return parse_u64(path(k), get(k)); }
  std::size_t z(const std::string& k) const { return static_cast<std::size_t>(u(k)); }
  std::uint32_t p() const { return static_cast<std::uint32_t>(u("p")); }
  long l(const std::string& k) const { return static_cast<long>(u(k)); }
  Rational q(const std::string& k) const { return parse_rational(get(k)); }
  const std::string& get(const std::string& k) const { return config_.params.at(k); }
  std::string path(const std::string& k) const { return config_.experiment + "." + k; }

 private:
  const ExperimentConfig& config_;
};

struct ItemOutput {
  std::vector<BoundReport> reports;
  std::map<std::string, std::vector<std::vector<std::string>>> rows;
};

struct Plan {
  std::size_t items = 0;
  std::function<ItemOutput(std::size_t)> work;
  std::map<std::string, std::vector<std::string>> headers;
};

std::size_t draw_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

std::string str(std::uint64_t v) { return std::to_string(v); }

BoundReport zero_report(std::string id, std::string anchor, std::uint64_t mismatches) {
  return make_report(std::move(id), std::move(anchor), Rational(static_cast<unsigned long>(mismatches)), 0, 0,
                     Tier::blocking);
}

BoundReport tolerance_report(std::string id, std::string anchor, double diff, double tol) {
  BoundReport r = make_report(std::move(id), std::move(anchor), Rational(diff), Rational(tol),
                              Rational(1, 1000000000), Tier::blocking);
  r.params = {{"diff", diff}, {"tolerance", tol}};
  return r;
}

std::vector<euclid::RatPoint> noncollinear_lattice(std::size_t size, long range, Rng& rng) {
  for (;;) {
    auto x = uniform_random_lattice(2, size, range, rng);
    if (!euclid::is_collinear(x)) return x;
  }
}

const char* kBeckKinds[] = {"random", "collinear_heavy", "grid"};

std::vector<euclid::RatPoint> beck_corpus_set(std::size_t index, std::size_t size, long range, Rng& rng) {
  switch (index % 3) {
    case 0:
      return uniform_random_lattice(2, size, range, rng);
    case 1:
      return line_plus_noise(size, Rational(3, 4), range, rng);
    default: {
      std::size_t side = 1;
      while (side * side < size) ++side;
      return grid(side, 2);
    }
  }
}

// Primal (s, t) configurations: grid examples for s in [s_min, s_max] with
// t in {s, s^2}, then random lattice sets with their s-rich lines.
euclid::FurstConfig furst_item(const Params& prm, std::uint64_t seed, std::size_t i, std::string& kind) {
  const std::size_t s_min = prm.z("s_min");
  const std::size_t grid_items = 2 * (prm.z("s_max") - s_min + 1);
  if (i < grid_items) {
    const std::size_t s = s_min + i / 2;
    kind = "grid";
    return euclid::grid_example(s, i % 2 == 0 ? s : s * s);
  }
  kind = "random";
  Rng rng(derive_seed(seed, i));
  const std::size_t size = draw_size(rng, prm.z("size_min"), prm.z("size_max"));
  euclid::FurstConfig cfg;
  cfg.points = uniform_random_lattice(2, size, prm.l("range"), rng);
  cfg.s = 2 + static_cast<std::size_t>(rng.below(3));
  cfg.lines = euclid::rich_lines(cfg.points, cfg.s);
  if (cfg.lines.empty()) {
    cfg.s = 2;
    cfg.lines = euclid::rich_lines(cfg.points, 2);
  }
  cfg.t = cfg.lines.size();
  return cfg;
}

std::size_t furst_items(const Params& prm) {
  return 2 * (prm.z("s_max") - prm.z("s_min") + 1) + prm.z("random_configs");
}

Plan plan_ff_falconer(const ExperimentConfig& c) {
  const Params prm(c);
  const ff::Field field = ff::Field::prime(prm.p());
  const std::size_t n = prm.z("n"), k = prm.z("k");
  const std::size_t lo = prm.z("size_min");
  const std::size_t hi = prm.z("size_max") ? prm.z("size_max") : saturating_pow(field.order(), n);
  Plan plan;
  plan.items = prm.z("sets");
  plan.headers["sets"] = {"item", "size", "exceptional_at_half"};
  plan.work = [=, seed = c.seed, cap = c.cap](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const auto x = uniform_random_fp(field, n, draw_size(rng, lo, hi), rng);
    ItemOutput out;
    out.reports = ff::falconer_ff_report(x, k, {2, cap});
    const std::uint64_t half = std::max<std::uint64_t>(1, x.size() / 2);
    out.rows["sets"].push_back({str(i), str(x.size()), str(ff::orth_exceptional_set(x, k, half, cap).size())});
    return out;
  };
  return plan;
}

Plan plan_ff_radial(const ExperimentConfig& c) {
  const Params prm(c);
  const ff::Field field = ff::Field::prime(prm.p());
  const std::size_t n = prm.z("n");
  const std::size_t lo = prm.z("size_min");
  const std::size_t hi = prm.z("size_max") ? prm.z("size_max") : saturating_pow(field.order(), n);
  Plan plan;
  plan.items = prm.z("sets");
  plan.headers["skipped"] = {"item", "size", "family"};
  plan.work = [=, seed = c.seed, cap = c.cap](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const auto y = uniform_random_fp(field, n, draw_size(rng, lo, hi), rng);
    auto result = ff::radial_bound_report(field, n, y, cap);
    ItemOutput out;
    out.reports = std::move(result.reports);
    for (const auto& family : result.skipped) out.rows["skipped"].push_back({str(i), str(y.size()), family});
    return out;
  };
  return plan;
}

Plan plan_ff_fourier(const ExperimentConfig& c) {
  const Params prm(c);
  const std::uint32_t p = prm.p();
  const std::size_t n = prm.z("n");
  const ff::Field field = ff::Field::prime(p);
  Plan plan;
  plan.items = prm.z("functions");
  plan.work = [=, seed = c.seed, cap = c.cap](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t size = saturating_pow(p, n);
    std::vector<ff::Complex> values(size);
    for (auto& v : values) {
      v = ff::Complex(static_cast<double>(rng.between(-8, 8)), static_cast<double>(rng.between(-8, 8)));
    }
    const ff::FpFunction f(p, n, std::move(values));
    const double tol = ff::tolerance(f);
    const ff::Spectrum spec = ff::dft(f, cap);
    ItemOutput out;
    out.reports.push_back(tolerance_report("fourier_plancherel", "sum |f|^2 = p^{-n} sum |f^|^2",
                                           ff::plancherel_gap(f, spec), tol));
    out.reports.push_back(tolerance_report("fourier_inversion", "inverse transform recovers f",
                                           ff::max_abs_diff(ff::inverse_dft(spec, cap), f), tol));
    out.reports.push_back(tolerance_report("fourier_factored", "factored transform agrees with direct summation",
                                           ff::max_abs_diff(ff::dft_factored(f, cap), spec), tol));

    const ff::FpVec v = ff::point_at(field, n, rng.below(size));
    out.reports.push_back(tolerance_report("fourier_translation", "(f(. + v))^ = e(v . xi / p) f^",
                                           ff::max_abs_diff(ff::dft(ff::translate(f, v), cap), ff::modulate(spec, v)),
                                           tol));

    const std::size_t k = static_cast<std::size_t>(rng.below(n + 1));
    std::vector<ff::FpVec> gens;
    for (std::size_t j = 0; j < k; ++j) gens.push_back(ff::point_at(field, n, rng.below(size)));
    const ff::FpFlat w(ff::FpSubspace::span(field, n, gens), ff::point_at(field, n, rng.below(size)));
    const ff::FpFunction ind = ff::FpFunction::indicator(field, n, w.points(cap));
    BoundReport flat = tolerance_report("fourier_flat", "transform of a flat indicator is supported on V^perp",
                                        ff::max_abs_diff(ff::dft(ind, cap), ff::flat_spectrum_expected(w)),
                                        ff::tolerance(ind));
    flat.params["flat"] = w.to_string();
    out.reports.push_back(std::move(flat));
    return out;
  };
  return plan;
}

Plan plan_euclid_incidence(const ExperimentConfig& c) {
  const Params prm(c);
  const std::size_t configs = prm.z("configs"), max_points = prm.z("max_points"), max_lines = prm.z("max_lines");
  const long range = prm.l("range");
  const bool duality = prm.u("duality") != 0;
  Plan plan;
  plan.items = configs + prm.z("grids");
  plan.headers["incidences"] = {"item", "points", "lines", "incidences"};
  plan.work = [=, seed = c.seed](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    std::vector<euclid::RatPoint> pts;
    std::vector<euclid::RatLine> lines;
    if (i < configs) {
      pts = uniform_random_lattice(2, static_cast<std::size_t>(rng.below(max_points + 1)), range, rng);
      const std::size_t nl = static_cast<std::size_t>(rng.below(max_lines + 1));
      for (std::size_t j = 0; j < nl; ++j) {
        if (pts.size() >= 2 && rng.chance(1, 2)) {
          const std::size_t a = rng.below(pts.size());
          std::size_t b = rng.below(pts.size() - 1);
          if (b >= a) ++b;
          lines.push_back(euclid::RatLine::through(pts[a], pts[b]));
        } else {
          const auto two = uniform_random_lattice(2, 2, range, rng);
          lines.push_back(euclid::RatLine::through(two[0], two[1]));
        }
      }
      lines = euclid::unique_lines(std::move(lines));
    } else {
      // [0,k) x [0,2k^2) against y = mx + b, m < k, b < k^2: k^4 incidences.
      const long k = static_cast<long>(i - configs) + 2;
      for (long x = 0; x < k; ++x) {
        for (long y = 0; y < 2 * k * k; ++y) pts.push_back(euclid::RatPoint::of({x, y}));
      }
      for (long m = 0; m < k; ++m) {
        for (long b = 0; b < k * k; ++b) {
          lines.push_back(euclid::RatLine::from_point_direction(euclid::RatPoint::of({0, b}),
                                                                euclid::RatPoint::of({1, m})));
        }
      }
    }
    ItemOutput out;
    const auto pair = euclid::bound_report_cs_st(pts, lines);
    out.reports.assign(pair.begin(), pair.end());
    const std::uint64_t total = euclid::incidences(pts, lines).total;
    out.rows["incidences"].push_back({str(i), str(pts.size()), str(lines.size()), str(total)});

    if (duality && i < configs) {
      // Spanned lines must stay non-vertical too, for the rich-line duality.
      std::vector<euclid::RatLine> guard = pts.size() >= 2 ? euclid::connecting_lines(pts) : std::vector<euclid::RatLine>{};
      guard.insert(guard.end(), lines.begin(), lines.end());
      const Rational lambda = euclid::choose_shear(guard, rng);
      std::vector<euclid::RatPoint> sp;
      std::vector<euclid::RatLine> sl;
      for (const auto& q : pts) sp.push_back(euclid::shear(q, lambda));
      for (const auto& l : lines) sl.push_back(euclid::shear(l, lambda));

      std::uint64_t involution = 0;
      for (const auto& q : sp) involution += euclid::dualize_line(euclid::dualize(q)) == q ? 0 : 1;
      for (const auto& l : sl) involution += euclid::dualize(euclid::dualize_line(l)) == l ? 0 : 1;
      BoundReport inv = zero_report("duality_involution", "point-line duality is an involution", involution);
      inv.params = {{"shear", to_string(lambda)}};
      out.reports.push_back(std::move(inv));

      const std::uint64_t sheared = euclid::incidences(sp, sl).total;
      const std::uint64_t dual = euclid::incidences(euclid::dualize_lines(sl), euclid::dualize(sp)).total;
      const std::uint64_t gap = (sheared > dual ? sheared - dual : dual - sheared) +
                                (sheared > total ? sheared - total : total - sheared);
      BoundReport inc = zero_report("duality_incidence", "duality and shearing preserve incidences", gap);
      inc.params = {{"incidences", total}, {"dual_incidences", dual}};
      out.reports.push_back(std::move(inc));

      std::uint64_t rich_gap = 0;
      for (std::size_t r = 2; r <= 3; ++r) {
        auto a = euclid::rich_points(euclid::dualize(sp), r);
        auto b = euclid::dualize_lines(euclid::rich_lines(sp, r));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::vector<euclid::RatPoint> diff;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
        rich_gap += diff.size();
      }
      out.reports.push_back(zero_report("duality_rich", "r-rich lines of P are dual to r-rich points of P*", rich_gap));
    }
    return out;
  };
  return plan;
}

Plan plan_exceptional_directions(const ExperimentConfig& c) {
  const Params prm(c);
  const std::size_t lo = prm.z("size_min"), hi = prm.z("size_max");
  const long range = prm.l("range");
  Plan plan;
  plan.items = prm.z("sets");
  plan.headers["directions"] = {"item", "size", "directions", "s", "exceptional", "ordinary_lines"};
  plan.work = [=, seed = c.seed](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t size = draw_size(rng, lo, hi);
    const auto x = i % 2 == 0 ? noncollinear_lattice(size, range, rng) : line_plus_noise(size, Rational(3, 4), range, rng);
    const std::size_t s = std::max<std::size_t>(1, size / 2);
    ItemOutput out;
    const auto ed = euclid::exceptional_directions(x, s);
    out.reports.assign(ed.reports.begin(), ed.reports.end());
    const auto ord = euclid::ordinary_lines(x);
    BoundReport sg = make_report("sylvester_gallai", "a noncollinear finite set spans an ordinary line", 1,
                                 Rational(static_cast<unsigned long>(ord.lines.size())), 1, Tier::blocking);
    sg.params = {{"set_size", size}};
    out.reports.push_back(std::move(sg));
    out.reports.push_back(euclid::ungar_report(x));
    out.rows["directions"].push_back({str(i), str(size), str(euclid::direction_set(x).size()), str(s),
                                      str(ed.set.size()), str(ord.lines.size())});
    return out;
  };
  return plan;
}

Plan plan_beck(const ExperimentConfig& c, bool erdos) {
  const Params prm(c);
  const std::size_t lo = prm.z("size_min"), hi = prm.z("size_max");
  const long range = prm.l("range");
  const Rational cst = erdos ? Rational(0) : prm.q("C");
  Plan plan;
  plan.items = prm.z("sets");
  if (erdos) {
    plan.headers["erdos_beck"] = {"item", "kind", "size", "t", "connecting", "empirical_constant"};
  } else {
    plan.headers["beck"] = {"item", "kind", "size", "branch", "max_collinear", "connecting", "minimal_c"};
  }
  plan.work = [=, seed = c.seed](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t size = draw_size(rng, lo, hi);
    const auto x = beck_corpus_set(i, size, range, rng);
    ItemOutput out;
    if (erdos) {
      BoundReport r = euclid::erdos_beck_report(x);
      const std::size_t t = x.size() - euclid::max_collinear(x);
      out.rows["erdos_beck"].push_back({str(i), kBeckKinds[i % 3], str(x.size()), str(t),
                                        str(euclid::connecting_lines(x).size()),
                                        r.params.value("empirical_constant", std::string())});
      r.params["kind"] = kBeckKinds[i % 3];
      out.reports.push_back(std::move(r));
      return out;
    }
    auto res = euclid::beck_report(x, cst);
    res.report.params["kind"] = kBeckKinds[i % 3];
    out.reports.push_back(res.report);
    const auto& d = res.diagnostics;
    out.rows["beck"].push_back({str(i), kBeckKinds[i % 3], str(x.size()), euclid::branch_name(d.branch),
                                str(d.max_collinear), str(d.connecting_count), to_string(d.minimal_c)});
    const auto y = uniform_random_lattice(2, size, range, rng);
    out.reports.push_back(euclid::beck_report(x, y, cst).report);
    return out;
  };
  return plan;
}

Plan plan_pinned_radial(const ExperimentConfig& c) {
  const Params prm(c);
  const std::size_t lo = prm.z("size_min"), hi = prm.z("size_max");
  const long range = prm.l("range");
  const std::size_t samples = prm.z("outside_samples");
  Plan plan;
  plan.items = prm.z("sets");
  plan.headers["pinned"] = {"item", "pins", "targets", "max_pinned", "s"};
  plan.work = [=, seed = c.seed](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const auto x = noncollinear_lattice(draw_size(rng, lo, hi), range, rng);
    const std::size_t ysize = draw_size(rng, lo, hi);
    const auto y = i % 2 == 0 ? noncollinear_lattice(ysize, range, rng) : line_plus_noise(ysize, Rational(3, 4), range, rng);
    ItemOutput out;
    const auto three = euclid::pinned_radial_report(x, y);
    out.reports.assign(three.begin(), three.end());
    const std::size_t s = y.size() - euclid::max_collinear(y);
    out.reports.push_back(euclid::radial_containment_check(y, s, {derive_seed(seed ^ 0x5eedULL, i), samples}));
    std::size_t best = 0;
    for (const auto& pin : x) best = std::max(best, euclid::pinned_count(pin, y));
    out.rows["pinned"].push_back({str(i), str(x.size()), str(y.size()), str(best), str(s)});
    return out;
  };
  return plan;
}

Plan plan_furstenberg(const ExperimentConfig& c) {
  const Params prm(c);
  Plan plan;
  plan.items = furst_items(prm);
  plan.headers["sharpness"] = {"item", "kind", "s", "t", "points", "ratio"};
  plan.work = [prm, seed = c.seed](std::size_t i) {
    std::string kind;
    const euclid::FurstConfig cfg = furst_item(prm, seed, i, kind);
    euclid::validate_primal(cfg);
    ItemOutput out;
    const auto three = euclid::furst_verify(cfg);
    out.reports.assign(three.begin(), three.end());
    for (auto& r : out.reports) r.params["kind"] = kind;
    const auto ratio = out.reports[0].ratio();
    out.rows["sharpness"].push_back({str(i), kind, str(cfg.s), str(cfg.t), str(cfg.points.size()),
                                     ratio && *ratio > 0 ? to_decimal(1 / *ratio) : ""});
    return out;
  };
  return plan;
}

Plan plan_dual_furstenberg(const ExperimentConfig& c) {
  const Params prm(c);
  Plan plan;
  plan.items = furst_items(prm);
  plan.work = [prm, seed = c.seed](std::size_t i) {
    std::string kind;
    const euclid::FurstConfig cfg = furst_item(prm, seed, i, kind);
    Rng rng(derive_seed(seed ^ 0xd0a1ULL, i));
    const Rational lambda = euclid::choose_shear(cfg.lines, rng);
    std::vector<euclid::RatPoint> pts;
    std::vector<euclid::RatLine> lines;
    for (const auto& q : cfg.points) pts.push_back(euclid::shear(q, lambda));
    for (const auto& l : cfg.lines) lines.push_back(euclid::shear(l, lambda));
    const auto dual_lines = euclid::dualize(pts);
    const auto pins = euclid::dualize_lines(lines);
    const auto res = euclid::dual_furst_verify(dual_lines, pins, cfg.s, pins.size());
    ItemOutput out;
    out.reports = {res.chain[0], res.chain[1], res.bound};
    const std::uint64_t gap = res.j_count > res.j_oracle ? res.j_count - res.j_oracle : res.j_oracle - res.j_count;
    BoundReport agree = zero_report("j_count_agreement", "J counted by lines equals J counted by triples", gap);
    agree.params = {{"j_lines", res.j_count}, {"j_triples", res.j_oracle}};
    out.reports.push_back(std::move(agree));
    for (auto& r : out.reports) r.params["kind"] = kind;
    return out;
  };
  return plan;
}

Plan plan_distances(const ExperimentConfig& c) {
  const Params prm(c);
  const std::size_t p2 = prm.z("p2_max"), p3 = prm.z("p3_max"), sets = prm.z("sets");
  const std::size_t lo = prm.z("size_min"), hi = prm.z("size_max");
  const long range = prm.l("range");
  Plan plan;
  plan.items = p2 + p3 + sets;
  plan.headers["guth_katz"] = {"item", "points", "distances", "reference", "ratio"};
  plan.work = [=, seed = c.seed, cap = c.cap](std::size_t i) {
    ItemOutput out;
    if (i < p2) {
      out.reports.push_back(euclid::lattice_report(static_cast<std::uint32_t>(i + 1), 2, cap));
      return out;
    }
    if (i < p2 + p3) {
      out.reports.push_back(euclid::lattice_report(static_cast<std::uint32_t>(i - p2 + 1), 3, cap));
      return out;
    }
    Rng rng(derive_seed(seed, i));
    const auto x = uniform_random_lattice(2, draw_size(rng, lo, hi), range, rng);
    const std::size_t d = euclid::distance_set(x).size();
    const unsigned long m = x.size();
    BoundReport r = make_report("distance_pair_bound", "|Delta(X)| <= C(|X|, 2) + 1", Rational(d),
                                Rational(m * (m - 1) / 2 + 1), 1, Tier::blocking);
    r.params = {{"set_size", m}};
    out.reports.push_back(std::move(r));
    const auto gk = euclid::gk_ratio(x);
    out.rows["guth_katz"].push_back({str(i), str(gk.points), str(gk.distances), gk.reference, gk.ratio});
    return out;
  };
  return plan;
}

Plan plan_dot_products(const ExperimentConfig& c) {
  const Params prm(c);
  const std::size_t n = prm.z("n"), lo = prm.z("size_min"), hi = prm.z("size_max");
  const long range = prm.l("range");
  Plan plan;
  plan.items = prm.z("triples");
  plan.work = [=, seed = c.seed](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    euclid::RatPoint a = euclid::RatPoint::zero(n);
    while (a.is_zero()) {
      std::vector<Rational> v(n);
      for (auto& x : v) x = static_cast<long>(rng.between(-9, 9));
      a = euclid::RatPoint(std::move(v));
    }
    long num = 0;
    while (num == 0) num = static_cast<long>(rng.between(-9, 9));
    Rational lambda(num, static_cast<long>(rng.between(1, 9)));
    lambda.canonicalize();
    const auto set = uniform_random_lattice(n, draw_size(rng, lo, hi), range, rng);
    ItemOutput out;
    out.reports.push_back(euclid::dot_scaling_check(a, lambda, set));
    return out;
  };
  return plan;
}

Plan plan_named(const ExperimentConfig& c) {
  const Params prm(c);
  const std::string name = prm.get("name");
  const std::uint32_t p = prm.p();
  Plan plan;
  plan.items = 1;
  plan.headers["directions"] = {"direction"};
  plan.work = [=, cap = c.cap](std::size_t) {
    ItemOutput out;
    if (name == "subfield") {
      const auto ex = ff::example_subfield(p, cap);
      out.reports.push_back(ex.report);
      for (const auto& d : ex.small_directions) out.rows["directions"].push_back({d.to_string()});
    } else if (name == "fullgrid") {
      out.reports.push_back(ff::example_fullgrid(p, cap).report);
    } else {
      const GeometryFile g = named_configuration(name, p);
      const auto& x = g.points("X");
      const auto ord = euclid::ordinary_lines(x);
      out.reports.push_back(make_report("sylvester_gallai", "a noncollinear finite set spans an ordinary line", 1,
                                        Rational(static_cast<unsigned long>(ord.lines.size())), 1, Tier::blocking));
      out.reports.push_back(euclid::ungar_report(x));
    }
    for (auto& r : out.reports) r.params["name"] = name;
    return out;
  };
  return plan;
}

Plan make_plan(const ExperimentConfig& c) {
  const std::string& e = c.experiment;
  if (e == "ff_falconer") return plan_ff_falconer(c);
  if (e == "ff_radial") return plan_ff_radial(c);
  if (e == "ff_fourier_identities") return plan_ff_fourier(c);
  if (e == "euclid_incidence") return plan_euclid_incidence(c);
  if (e == "exceptional_directions") return plan_exceptional_directions(c);
  if (e == "beck") return plan_beck(c, false);
  if (e == "erdos_beck") return plan_beck(c, true);
  if (e == "pinned_radial") return plan_pinned_radial(c);
  if (e == "furstenberg") return plan_furstenberg(c);
  if (e == "dual_furstenberg") return plan_dual_furstenberg(c);
  if (e == "distances") return plan_distances(c);
  if (e == "dot_products") return plan_dot_products(c);
  if (e == "named_example") return plan_named(c);
  throw ConfigError("experiment", "unknown experiment '" + e + "'");
}

const ExperimentInfo& info_for(const std::string& name) {
  for (const auto& info : experiment_catalog()) {
    if (info.name == name) return info;
  }
  throw ConfigError("experiment", "unknown experiment '" + name + "'");
}

void require(bool ok, const std::string& path, const std::string& what) {
  if (!ok) throw ConfigError(path, what);
}

void check_semantics(const ExperimentConfig& c) {
  const Params prm(c);
  const std::string& e = c.experiment;
  auto has = [&](const std::string& k) { return c.params.count(k) > 0; };
  if (has("p")) require(ff::is_prime(prm.p()), prm.path("p"), "must be prime");
  if (has("n")) require(prm.z("n") >= 1, prm.path("n"), "must be positive");
  if (has("size_min") && has("size_max")) {
    const std::size_t lo = prm.z("size_min"), hi = prm.z("size_max");
    const bool zero_means_all = e == "ff_falconer" || e == "ff_radial";
    if (!(zero_means_all && hi == 0)) require(lo <= hi, prm.path("size_min"), "exceeds size_max");
    if (zero_means_all) {
      const std::uint64_t total = saturating_pow(prm.p(), prm.z("n"));
      require(hi <= total, prm.path("size_max"), "exceeds p^n");
      require(lo >= 1 && lo <= total, prm.path("size_min"), "must lie in [1, p^n]");
    }
  }
  if (e == "ff_falconer") {
    require(prm.z("n") >= 2, prm.path("n"), "must be at least 2");
    require(prm.z("k") >= 1 && prm.z("k") < prm.z("n"), prm.path("k"), "must satisfy 1 <= k <= n - 1");
  }
  if (e == "ff_fourier_identities") {
    require_within_cap(saturating_pow(prm.p(), prm.z("n")), c.cap, "Fourier transform on F_p^n");
  }
  if (e == "euclid_incidence") {
    const std::uint64_t lattice = static_cast<std::uint64_t>(prm.l("range")) * prm.l("range");
    require(prm.l("range") >= 2, prm.path("range"), "must be at least 2");
    require(prm.z("max_points") <= lattice, prm.path("max_points"), "exceeds range^2");
  }
  const bool noisy = e == "exceptional_directions" || e == "beck" || e == "erdos_beck" || e == "pinned_radial";
  if (noisy) {
    require(prm.z("size_min") >= 4 || (e == "exceptional_directions" && prm.z("size_min") >= 3), prm.path("size_min"),
            "too small for a noncollinear set");
    const std::uint64_t r = static_cast<std::uint64_t>(prm.l("range"));
    require(r >= prm.z("size_max") && r * r >= prm.z("size_max") + r, prm.path("range"), "too small for size_max");
  }
  if (e == "beck") require(prm.q("C") >= 1, prm.path("C"), "must be at least 1");
  if (e == "furstenberg" || e == "dual_furstenberg") {
    require(prm.z("s_min") >= 2, prm.path("s_min"), "must be at least 2");
    require(prm.z("s_min") <= prm.z("s_max"), prm.path("s_min"), "exceeds s_max");
    require(prm.z("size_min") >= 2, prm.path("size_min"), "must be at least 2");
    const std::uint64_t r = static_cast<std::uint64_t>(prm.l("range"));
    require(r * r >= prm.z("size_max"), prm.path("range"), "too small for size_max");
  }
  if (e == "distances" || e == "dot_products") {
    const std::uint64_t r = static_cast<std::uint64_t>(prm.l("range"));
    const std::size_t n = e == "distances" ? 2 : prm.z("n");
    require(prm.z("size_min") >= 1, prm.path("size_min"), "must be positive");
    require(saturating_pow(r, n) >= prm.z("size_max"), prm.path("range"), "too small for size_max");
  }
  if (e == "named_example") {
    static const std::set<std::string> names = {"triangle", "unit_square", "moment_curve", "polygon5", "fullgrid",
                                                "subfield"};
    require(names.count(prm.get("name")) > 0, prm.path("name"), "unknown named configuration");
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_row(std::ostream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << csv_field(row[i]);
  }
  out << '\n';
}

}  // namespace

const std::vector<ExperimentInfo>& experiment_catalog() {
  static const std::vector<ExperimentInfo> catalog = {
      {"ff_falconer",
       "orthogonal projection exceptional sets over F_p^n on random sets",
       {integer("p", "7", "prime"), integer("n", "2", "dimension"), integer("k", "1", "subspace dimension"),
        integer("sets", "200", "number of random sets"), integer("size_min", "1", "smallest set"),
        integer("size_max", "0", "largest set, 0 for p^n")}},
      {"ff_radial",
       "radial projection exceptional sets over F_p^n",
       {integer("p", "17", "prime"), integer("n", "2", "dimension"), integer("sets", "20", "number of random sets"),
        integer("size_min", "273", "smallest set"), integer("size_max", "0", "largest set, 0 for p^n")}},
      {"ff_fourier_identities",
       "Plancherel, inversion, translation and flat spectra over F_p^n",
       {integer("p", "3", "prime"), integer("n", "2", "dimension"),
        integer("functions", "100", "number of random functions")}},
      {"euclid_incidence",
       "Cauchy-Schwarz and Szemeredi-Trotter incidence bounds, duality",
       {integer("configs", "500", "random configurations"), integer("max_points", "60", "largest point set"),
        integer("max_lines", "60", "largest line set"), integer("range", "12", "coordinate range"),
        integer("grids", "3", "grid examples appended"), integer("duality", "1", "check duality on random configs")}},
      {"exceptional_directions",
       "exceptional directions, Sylvester-Gallai and Ungar on noncollinear planar sets",
       {integer("sets", "500", "number of sets"), integer("size_min", "3", "smallest set"),
        integer("size_max", "50", "largest set"), integer("range", "60", "coordinate range")}},
      {"beck",
       "Beck dichotomy on random, collinear-heavy and grid sets",
       {integer("sets", "60", "number of sets"), integer("size_min", "4", "smallest set"),
        integer("size_max", "40", "largest set"), integer("range", "60", "coordinate range"),
        rational("C", "64", "dichotomy constant")}},
      {"erdos_beck",
       "connecting lines against |X| t",
       {integer("sets", "60", "number of sets"), integer("size_min", "4", "smallest set"),
        integer("size_max", "40", "largest set"), integer("range", "60", "coordinate range")}},
      {"pinned_radial",
       "pinned radial projection bounds and the P_2(L(Y)) containment",
       {integer("sets", "60", "number of sets"), integer("size_min", "4", "smallest set"),
        integer("size_max", "16", "largest set"), integer("range", "40", "coordinate range"),
        integer("outside_samples", "100", "sampled pins outside P_2(L(Y))")}},
      {"furstenberg",
       "Furstenberg configuration lower bounds",
       {integer("s_min", "2", "smallest grid s"), integer("s_max", "16", "largest grid s"),
        integer("random_configs", "50", "random configurations"), integer("size_min", "6", "smallest random set"),
        integer("size_max", "40", "largest random set"), integer("range", "8", "coordinate range")}},
      {"dual_furstenberg",
       "dual Furstenberg J-count chain and bound",
       {integer("s_min", "2", "smallest grid s"), integer("s_max", "16", "largest grid s"),
        integer("random_configs", "50", "random configurations"), integer("size_min", "6", "smallest random set"),
        integer("size_max", "40", "largest random set"), integer("range", "8", "coordinate range")}},
      {"distances",
       "lattice distance counts and Guth-Katz ratios",
       {integer("p2_max", "50", "largest p for n = 2"), integer("p3_max", "12", "largest p for n = 3"),
        integer("sets", "20", "random sets"), integer("size_min", "2", "smallest set"),
        integer("size_max", "40", "largest set"), integer("range", "30", "coordinate range")}},
      {"dot_products",
       "dot-product set scaling",
       {integer("triples", "100", "number of (a, lambda, A) triples"), integer("n", "2", "dimension"),
        integer("size_min", "1", "smallest set"), integer("size_max", "30", "largest set"),
        integer("range", "20", "coordinate range")}},
      {"named_example",
       "a single named configuration",
       {text("name", "subfield", "triangle, unit_square, moment_curve, polygon5, fullgrid or subfield"),
        integer("p", "3", "prime")}},
  };
  return catalog;
}

ExperimentConfig parse_experiment_config(const std::string& text_in) {
  ExperimentConfig c;
  std::istringstream in(text_in);
  std::string raw;
  std::set<std::string> seen;
  bool have_experiment = false, have_output = false;
  while (std::getline(in, raw)) {
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    if (trim(raw).empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos) throw ConfigError("config", "expected 'key = value', got '" + trim(raw) + "'");
    const std::string key = trim(raw.substr(0, eq));
    const std::string value = trim(raw.substr(eq + 1));
    if (key.empty()) throw ConfigError("config", "empty key");
    if (!seen.insert(key).second) throw ConfigError(key, "duplicate key");
    if (key == "experiment") {
      c.experiment = value;
      have_experiment = true;
    } else if (key == "seed") {
      c.seed = parse_u64("seed", value);
    } else if (key == "output") {
      c.output = value;
      have_output = true;
    } else if (key == "cap") {
      c.cap = parse_u64("cap", value);
    } else {
      c.params[key] = value;
    }
  }
  if (!have_experiment) throw ConfigError("experiment", "missing");
  if (!have_output) c.output = c.experiment + ".jsonl";
  validate(c);
  return c;
}

ExperimentConfig read_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open experiment config");
  std::ostringstream text_out;
  text_out << in.rdbuf();
  return parse_experiment_config(text_out.str());
}

void validate(ExperimentConfig& c) {
  const ExperimentInfo& info = info_for(c.experiment);
  if (c.cap == 0) throw ConfigError("cap", "must be positive");
  if (c.jobs == 0) throw ConfigError("jobs", "must be positive");
  if (c.output.empty()) throw ConfigError("output", "must not be empty");
  for (const auto& [key, value] : c.params) {
    const bool known = std::any_of(info.params.begin(), info.params.end(),
                                   [&key = key](const ParamSpec& s) { return s.name == key; });
    if (!known) throw ConfigError(c.experiment + "." + key, "unknown parameter");
  }
  for (const ParamSpec& spec : info.params) {
    const std::string path = c.experiment + "." + spec.name;
    auto it = c.params.find(spec.name);
    if (it == c.params.end()) {
      if (spec.required) throw ConfigError(path, "missing");
      it = c.params.emplace(spec.name, spec.default_value).first;
    }
    switch (spec.kind) {
      case Kind::integer:
        parse_u64(path, it->second);
        break;
      case Kind::rational:
        try {
          parse_rational(it->second);
        } catch (const std::exception&) {
          throw ConfigError(path, "expected a rational, got '" + it->second + "'");
        }
        break;
      case Kind::text:
        if (it->second.empty()) throw ConfigError(path, "must not be empty");
        break;
    }
  }
  check_semantics(c);
}

ExperimentResult execute(const ExperimentConfig& config) {
  const Plan plan = make_plan(config);
  std::vector<ItemOutput> outputs(plan.items);
  std::vector<std::exception_ptr> errors(plan.items);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < plan.items;) {
      try {
        outputs[i] = plan.work(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(plan.items)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ExperimentResult result;
  for (const auto& [name, header] : plan.headers) result.tables[name].header = header;
  for (std::size_t i = 0; i < plan.items; ++i) {
    for (auto& r : outputs[i].reports) {
      r.params["item"] = i;
      r.params["experiment"] = config.experiment;
      result.blocking_failure = result.blocking_failure || r.blocking_failure();
      result.reports.push_back(std::move(r));
    }
    for (auto& [name, rows] : outputs[i].rows) {
      auto& table = result.tables[name];
      table.rows.insert(table.rows.end(), rows.begin(), rows.end());
    }
  }
  return result;
}

std::vector<SummaryRow> summarize(const std::vector<BoundReport>& reports) {
  struct Acc {
    std::size_t instances = 0, violations = 0;
    std::optional<Rational> max, min;
  };
  std::map<std::string, Acc> acc;
  for (const auto& r : reports) {
    Acc& a = acc[r.bound_id];
    ++a.instances;
    if (!r.holds) ++a.violations;
    if (auto q = r.ratio()) {
      if (!a.max || *q > *a.max) a.max = *q;
      if (!a.min || *q < *a.min) a.min = *q;
    }
  }
  std::vector<SummaryRow> rows;
  for (const auto& [id, a] : acc) {
    rows.push_back({id, a.instances, a.violations, a.max ? to_decimal(*a.max) : "", a.min ? to_decimal(*a.min) : ""});
  }
  return rows;
}

void write_jsonl(std::ostream& out, const std::vector<BoundReport>& reports) {
  for (const auto& r : reports) out << r.to_json_line() << '\n';
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "bound_id,instances,violations,max_ratio,min_ratio\n";
  for (const auto& r : rows) write_row(out, {r.bound_id, str(r.instances), str(r.violations), r.max_ratio, r.min_ratio});
}

void write_table_csv(std::ostream& out, const Table& table) {
  write_row(out, table.header);
  for (const auto& row : table.rows) write_row(out, row);
}

int run_experiment(const ExperimentConfig& config) {
  namespace fs = std::filesystem;
  const ExperimentResult result = execute(config);
  const fs::path out_path(config.output);
  if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
  auto open = [](const fs::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError(path.string(), "cannot open for writing");
    return f;
  };
  {
    auto f = open(out_path);
    write_jsonl(f, result.reports);
  }
  const fs::path stem = out_path.parent_path() / out_path.stem();
  {
    auto f = open(stem.string() + ".csv");
    write_summary_csv(f, summarize(result.reports));
  }
  for (const auto& [name, table] : result.tables) {
    auto f = open(stem.string() + "." + name + ".csv");
    write_table_csv(f, table);
  }
  return result.blocking_failure ? 1 : 0;
}

}  // namespace projlab::lab
