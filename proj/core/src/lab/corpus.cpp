#include "projlab/lab/corpus.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "projlab/error.hpp"
#include "projlab/euclid/line.hpp"
#include "projlab/limits.hpp"

namespace projlab::lab {

namespace {

euclid::RatPoint lattice_point(std::initializer_list<long> c) { return euclid::RatPoint::of(c); }

std::vector<long> random_coords(std::size_t n, long range, Rng& rng) {
  std::vector<long> c(n);
  for (auto& v : c) v = static_cast<long>(rng.below(static_cast<std::uint64_t>(range)));
  return c;
}

euclid::RatPoint to_point(const std::vector<long>& c) {
  std::vector<Rational> r;
  r.reserve(c.size());
  for (long v : c) r.emplace_back(v);
  return euclid::RatPoint(std::move(r));
}

long gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    if (!value.empty() && value[0] == '-') throw std::invalid_argument(value);
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("corpus." + key, "expected a nonnegative integer, got '" + value + "'");
  }
}

GeometryFile euclid_file(std::vector<euclid::RatPoint> pts, std::size_t n = 2) {
  GeometryFile g;
  g.space = GeometryFile::Space::euclid;
  g.dim = n;
  g.point_sets["X"] = std::move(pts);
  return g;
}

}  // namespace

std::vector<ff::FpVec> uniform_random_fp(const ff::Field& field, std::size_t n, std::size_t size, Rng& rng) {
  const std::uint64_t total = saturating_pow(field.order(), n);
  if (size > total) {
    throw DomainError("cannot draw " + std::to_string(size) + " distinct points from a space of " +
                      std::to_string(total));
  }
  std::set<std::uint64_t> seen;
  std::vector<ff::FpVec> out;
  out.reserve(size);
  while (out.size() < size) {
    const std::uint64_t idx = rng.below(total);
    if (seen.insert(idx).second) out.push_back(ff::point_at(field, n, idx));
  }
  return out;
}

std::vector<euclid::RatPoint> uniform_random_lattice(std::size_t n, std::size_t size, long range, Rng& rng) {
  if (range <= 0) throw DomainError("range must be positive");
  if (size > saturating_pow(static_cast<std::uint64_t>(range), n)) {
    throw DomainError("not enough lattice points in [0, range)^n");
  }
  std::set<std::vector<long>> seen;
  std::vector<euclid::RatPoint> out;
  out.reserve(size);
  while (out.size() < size) {
    auto c = random_coords(n, range, rng);
    if (seen.insert(c).second) out.push_back(to_point(c));
  }
  return out;
}

std::vector<euclid::RatPoint> line_plus_noise(std::size_t size, const Rational& fraction, long range, Rng& rng) {
  if (fraction < 0 || fraction > 1) throw DomainError("fraction must lie in [0, 1]");
  const mpz_class on_z = mpz_class(fraction.get_num() * static_cast<unsigned long>(size)) / fraction.get_den();
  const std::size_t on_count = static_cast<std::size_t>(on_z.get_ui());
  if (on_count < 2) throw DomainError("line_plus_noise needs at least two points on the line");
  if (range < 2 || static_cast<std::uint64_t>(range) < on_count) {
    throw DomainError("range too small for " + std::to_string(on_count) + " collinear points");
  }
  if (static_cast<std::uint64_t>(range) * static_cast<std::uint64_t>(range) < size + static_cast<std::uint64_t>(range)) {
    throw DomainError("range too small for the noise points");
  }

  long dx, dy;
  do {
    dx = static_cast<long>(rng.between(0, 3));
    dy = static_cast<long>(rng.between(-3, 3));
  } while ((dx == 0 && dy <= 0) || gcd(dx, dy) != 1);
  const std::vector<long> base = random_coords(2, range, rng);

  std::set<long> ts;
  while (ts.size() < on_count) ts.insert(static_cast<long>(rng.below(static_cast<std::uint64_t>(range))));
  std::vector<euclid::RatPoint> out;
  out.reserve(size);
  for (long t : ts) out.push_back(lattice_point({base[0] + t * dx, base[1] + t * dy}));

  const euclid::RatLine line = euclid::RatLine::from_point_direction(out.front(), lattice_point({dx, dy}));
  std::set<euclid::RatPoint> seen(out.begin(), out.end());
  while (out.size() < size) {
    const euclid::RatPoint q = to_point(random_coords(2, range, rng));
    if (line.contains(q) || !seen.insert(q).second) continue;
    out.push_back(q);
  }
  return out;
}

std::vector<euclid::RatPoint> grid(std::size_t side, std::size_t n) {
  const std::uint64_t total = saturating_pow(side, n);
  require_within_cap(total, kDefaultCap, "grid points");
  std::vector<euclid::RatPoint> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::vector<Rational> c(n);
    std::uint64_t rest = i;
    for (std::size_t k = n; k-- > 0;) {
      c[k] = static_cast<unsigned long>(rest % side);
      rest /= side;
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

GeometryFile named_configuration(const std::string& name, std::uint32_t p) {
  GeometryFile g;
  if (name == "triangle") {
    g = euclid_file({lattice_point({0, 0}), lattice_point({1, 0}), lattice_point({0, 1})});
  } else if (name == "unit_square") {
    g = euclid_file({lattice_point({0, 0}), lattice_point({1, 0}), lattice_point({0, 1}), lattice_point({1, 1})});
  } else if (name == "moment_curve") {
    std::vector<euclid::RatPoint> pts;
    for (long t = 0; t < static_cast<long>(std::max<std::uint32_t>(p, 3)); ++t) pts.push_back(lattice_point({t, t * t}));
    g = euclid_file(std::move(pts));
  } else if (name == "polygon5") {
    g = euclid_file({lattice_point({0, 0}), lattice_point({2, 0}), lattice_point({3, 2}), lattice_point({1, 3}),
                     lattice_point({-1, 2})});
  } else if (name == "fullgrid" || name == "subfield") {
    const ff::Field prime = ff::Field::prime(p);
    g.space = name == "fullgrid" ? GeometryFile::Space::fp : GeometryFile::Space::fq;
    g.p = p;
    g.dim = 2;
    const ff::Field f = g.field();
    std::vector<ff::FpVec> pts;
    for (const auto& v : ff::all_points(prime, 2, kDefaultCap)) {
      std::vector<ff::Scalar> c;
      for (std::size_t i = 0; i < 2; ++i) c.push_back(f.from_int(v[i].lo));
      pts.emplace_back(f, std::move(c));
    }
    g.fp_sets["X"] = std::move(pts);
  } else {
    throw ConfigError("name", "unknown named configuration '" + name + "'");
  }
  g.params["name"] = name;
  return g;
}

CorpusSpec parse_corpus_spec(const std::string& text) {
  CorpusSpec spec;
  bool have_generator = false;
  std::istringstream in(text);
  std::string raw;
  std::set<std::string> seen;
  while (std::getline(in, raw)) {
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    if (trim(raw).empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos) throw ConfigError("corpus", "expected 'key = value', got '" + trim(raw) + "'");
    const std::string key = trim(raw.substr(0, eq));
    const std::string value = trim(raw.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError("corpus." + key, "duplicate key");
    if (key == "generator") {
      spec.generator = value;
      have_generator = true;
    } else if (key == "count") {
      spec.count = parse_uint(key, value);
    } else if (key == "size") {
      spec.size_min = spec.size_max = parse_uint(key, value);
    } else if (key == "size_min") {
      spec.size_min = parse_uint(key, value);
    } else if (key == "size_max") {
      spec.size_max = parse_uint(key, value);
    } else if (key == "p") {
      spec.p = static_cast<std::uint32_t>(parse_uint(key, value));
    } else if (key == "n") {
      spec.n = parse_uint(key, value);
    } else if (key == "range") {
      spec.range = static_cast<long>(parse_uint(key, value));
    } else if (key == "fraction") {
      try {
        spec.fraction = parse_rational(value);
      } catch (const std::exception&) {
        throw ConfigError("corpus.fraction", "expected a rational, got '" + value + "'");
      }
    } else if (key == "side") {
      spec.side = parse_uint(key, value);
    } else if (key == "name") {
      spec.name = value;
    } else if (key == "seed") {
      spec.seed = parse_uint(key, value);
    } else if (key == "output_dir") {
      spec.output_dir = value;
    } else {
      throw ConfigError("corpus." + key, "unknown key");
    }
  }
  if (!have_generator) throw ConfigError("corpus.generator", "missing");
  static const std::set<std::string> generators = {"uniform_random_fp", "uniform_random_lattice", "line_plus_noise",
                                                   "grid", "named"};
  if (!generators.count(spec.generator)) {
    throw ConfigError("corpus.generator", "unknown generator '" + spec.generator + "'");
  }
  if (spec.size_min > spec.size_max) throw ConfigError("corpus.size_min", "exceeds size_max");
  if (spec.n == 0) throw ConfigError("corpus.n", "must be positive");
  if (spec.range <= 0) throw ConfigError("corpus.range", "must be positive");
  if (spec.fraction < 0 || spec.fraction > 1) throw ConfigError("corpus.fraction", "must lie in [0, 1]");
  if ((spec.generator == "uniform_random_fp" || spec.generator == "named") && !ff::is_prime(spec.p)) {
    throw ConfigError("corpus.p", "must be prime");
  }
  if (spec.generator == "uniform_random_fp" && spec.size_max > saturating_pow(spec.p, spec.n)) {
    throw ConfigError("corpus.size_max", "exceeds p^n");
  }
  if (spec.generator == "uniform_random_lattice" &&
      spec.size_max > saturating_pow(static_cast<std::uint64_t>(spec.range), spec.n)) {
    throw ConfigError("corpus.size_max", "exceeds range^n");
  }
  if (spec.generator == "named" && spec.name.empty()) throw ConfigError("corpus.name", "missing");
  if (spec.generator == "line_plus_noise") {
    if (spec.n != 2) throw ConfigError("corpus.n", "line_plus_noise is planar");
    const mpz_class on =
        mpz_class(spec.fraction.get_num() * static_cast<unsigned long>(spec.size_min)) / spec.fraction.get_den();
    if (on < 2) throw ConfigError("corpus.size_min", "fewer than two points on the line");
    if (spec.range < static_cast<long>(spec.size_max) ||
        static_cast<std::uint64_t>(spec.range) * spec.range < spec.size_max + spec.range) {
      throw ConfigError("corpus.range", "too small for size_max");
    }
  }
  if (spec.generator == "grid") require_within_cap(saturating_pow(spec.side, spec.n), kDefaultCap, "grid points");
  return spec;
}

CorpusSpec read_corpus_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open corpus spec");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_corpus_spec(text.str());
}

std::map<std::string, std::string> generate_corpus(const CorpusSpec& spec) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < spec.count; ++i) {
    Rng rng(derive_seed(spec.seed, i));
    const std::size_t size = spec.size_min + static_cast<std::size_t>(rng.below(spec.size_max - spec.size_min + 1));
    GeometryFile g;
    if (spec.generator == "uniform_random_fp") {
      g.space = GeometryFile::Space::fp;
      g.p = spec.p;
      g.dim = spec.n;
      g.fp_sets["X"] = uniform_random_fp(ff::Field::prime(spec.p), spec.n, size, rng);
    } else if (spec.generator == "uniform_random_lattice") {
      g = euclid_file(uniform_random_lattice(spec.n, size, spec.range, rng), spec.n);
    } else if (spec.generator == "line_plus_noise") {
      g = euclid_file(line_plus_noise(size, spec.fraction, spec.range, rng));
      g.params["fraction"] = to_string(spec.fraction);
    } else if (spec.generator == "grid") {
      g = euclid_file(grid(spec.side, spec.n), spec.n);
      g.params["side"] = std::to_string(spec.side);
    } else {
      g = named_configuration(spec.name, spec.p);
    }
    g.params["generator"] = spec.generator;
    g.params["index"] = std::to_string(i);
    g.params["seed"] = std::to_string(spec.seed);
    char name[64];
    std::snprintf(name, sizeof name, "%s_%04zu.txt", spec.generator.c_str(), i);
    out[name] = geometry_to_string(g);
  }
  return out;
}

std::vector<std::string> write_corpus(const CorpusSpec& spec) {
  namespace fs = std::filesystem;
  fs::create_directories(spec.output_dir);
  std::vector<std::string> written;
  for (const auto& [name, contents] : generate_corpus(spec)) {
    const fs::path path = fs::path(spec.output_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError(path.string(), "cannot write corpus file");
    out << contents;
    written.push_back(path.string());
  }
  return written;
}

}  // namespace projlab::lab
