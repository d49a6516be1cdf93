#include "projlab/lab/geometry_file.hpp"

#include <fstream>
#include <sstream>

#include "projlab/error.hpp"

namespace projlab::lab {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no); }

std::size_t parse_count(const std::string& text, const std::string& path) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ConfigError(path, "expected a nonnegative integer, got '" + text + "'");
  }
}

const char* space_name(GeometryFile::Space s) {
  switch (s) {
    case GeometryFile::Space::fp: return "fp";
    case GeometryFile::Space::fq: return "fq";
    default: return "euclid";
  }
}

}  // namespace

ff::Field GeometryFile::field() const {
  if (space == Space::euclid) throw DomainError("Euclidean configuration has no finite field");
  return space == Space::fp ? ff::Field::prime(p) : ff::Field::quadratic(p);
}

const std::vector<euclid::RatPoint>& GeometryFile::points(const std::string& name) const {
  auto it = point_sets.find(name);
  if (it == point_sets.end()) throw ConfigError("points." + name, "missing point set");
  return it->second;
}

const std::vector<euclid::RatLine>& GeometryFile::lines(const std::string& name) const {
  auto it = line_sets.find(name);
  if (it == line_sets.end()) throw ConfigError("lines." + name, "missing line set");
  return it->second;
}

const std::vector<ff::FpVec>& GeometryFile::fp_points(const std::string& name) const {
  auto it = fp_sets.find(name);
  if (it == fp_sets.end()) throw ConfigError("points." + name, "missing point set");
  return it->second;
}

GeometryFile read_geometry(std::istream& in) {
  GeometryFile g;
  bool have_space = false;
  std::string raw;
  std::size_t line_no = 0;

  auto next_data_line = [&](const std::string& ctx) {
    while (std::getline(in, raw)) {
      ++line_no;
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.resize(hash);
      auto tok = tokens(raw);
      if (!tok.empty()) return tok;
    }
    throw ConfigError(where(line_no), "unexpected end of file in " + ctx);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    const auto tok = tokens(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "space") {
      if (have_space) throw ConfigError(where(line_no), "duplicate space declaration");
      if (tok.size() == 3 && tok[1] == "euclid") {
        g.space = GeometryFile::Space::euclid;
        g.dim = parse_count(tok[2], where(line_no));
      } else if (tok.size() == 4 && (tok[1] == "fp" || tok[1] == "fq")) {
        g.space = tok[1] == "fp" ? GeometryFile::Space::fp : GeometryFile::Space::fq;
        g.p = static_cast<std::uint32_t>(parse_count(tok[2], where(line_no)));
        g.dim = parse_count(tok[3], where(line_no));
        try {
          (void)g.field();
        } catch (const DomainError& e) {
          throw ConfigError(where(line_no), e.what());
        }
      } else {
        throw ConfigError(where(line_no), "expected 'space euclid <n>' or 'space fp|fq <p> <n>'");
      }
      if (g.dim == 0) throw ConfigError(where(line_no), "dimension must be positive");
      have_space = true;
    } else if (kw == "points" || kw == "lines") {
      if (!have_space) throw ConfigError(where(line_no), "space must be declared first");
      if (tok.size() != 3) throw ConfigError(where(line_no), "expected '" + kw + " <name> <count>'");
      const std::string name = tok[1];
      const std::size_t count = parse_count(tok[2], where(line_no));
      const bool is_lines = kw == "lines";
      if (is_lines && g.space != GeometryFile::Space::euclid) {
        throw ConfigError(where(line_no), "line sets are only supported for Euclidean configurations");
      }
      const std::size_t width = is_lines ? 2 * g.dim : g.dim;
      for (std::size_t i = 0; i < count; ++i) {
        const auto row = next_data_line(kw + " " + name);
        if (row.size() != width) {
          throw ConfigError(where(line_no), "expected " + std::to_string(width) + " coordinates");
        }
        try {
          if (g.space == GeometryFile::Space::euclid) {
            std::vector<Rational> a, b;
            for (std::size_t k = 0; k < g.dim; ++k) a.push_back(parse_rational(row[k]));
            if (is_lines) {
              for (std::size_t k = 0; k < g.dim; ++k) b.push_back(parse_rational(row[g.dim + k]));
              g.line_sets[name].push_back(euclid::RatLine::through(euclid::RatPoint(a), euclid::RatPoint(b)));
            } else {
              g.point_sets[name].emplace_back(std::move(a));
            }
          } else {
            const ff::Field f = g.field();
            std::vector<ff::Scalar> c;
            for (const std::string& s : row) c.push_back(f.parse(s));
            g.fp_sets[name].emplace_back(f, std::move(c));
          }
        } catch (const DomainError& e) {
          throw ConfigError(where(line_no), e.what());
        } catch (const DegenerateInputError& e) {
          throw ConfigError(where(line_no), e.what());
        }
      }
      // Declared-but-empty sets still exist.
      if (count == 0) {
        if (is_lines) {
          g.line_sets[name];
        } else if (g.space == GeometryFile::Space::euclid) {
          g.point_sets[name];
        } else {
          g.fp_sets[name];
        }
      }
    } else if (kw == "param") {
      if (tok.size() != 3) throw ConfigError(where(line_no), "expected 'param <key> <value>'");
      g.params[tok[1]] = tok[2];
    } else {
      throw ConfigError(where(line_no), "unknown keyword '" + kw + "'");
    }
  }
  if (!have_space) throw ConfigError("space", "missing space declaration");
  return g;
}

GeometryFile read_geometry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open configuration file");
  return read_geometry(in);
}

void write_geometry(std::ostream& out, const GeometryFile& g) {
  out << "space " << space_name(g.space);
  if (g.space != GeometryFile::Space::euclid) out << ' ' << g.p;
  out << ' ' << g.dim << '\n';
  for (const auto& [name, pts] : g.point_sets) {
    out << "points " << name << ' ' << pts.size() << '\n';
    for (const auto& p : pts) out << p.to_string() << '\n';
  }
  for (const auto& [name, pts] : g.fp_sets) {
    out << "points " << name << ' ' << pts.size() << '\n';
    for (const auto& p : pts) out << p.to_string() << '\n';
  }
  for (const auto& [name, lines] : g.line_sets) {
    out << "lines " << name << ' ' << lines.size() << '\n';
    for (const auto& l : lines) out << l.base().to_string() << ' ' << (l.base() + l.direction()).to_string() << '\n';
  }
  for (const auto& [k, v] : g.params) out << "param " << k << ' ' << v << '\n';
}

std::string geometry_to_string(const GeometryFile& g) {
  std::ostringstream out;
  write_geometry(out, g);
  return out.str();
}

}  // namespace projlab::lab
