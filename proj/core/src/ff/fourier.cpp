#include "projlab/ff/fourier.hpp"

#include <cmath>
#include <numbers>

#include "projlab/error.hpp"

namespace projlab::ff {

namespace {

std::uint64_t grid_size(std::uint32_t p, std::size_t n) { return saturating_pow(p, n); }

// e^{sign * 2 pi i k / p} for k in [0, p).
std::vector<Complex> roots_of_unity(std::uint32_t p, int sign) {
  std::vector<Complex> w(p);
  for (std::uint32_t k = 0; k < p; ++k) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / p;
    w[k] = {std::cos(angle), std::sin(angle)};
  }
  return w;
}

// Coordinates of point `idx` in base p, most significant first.
std::vector<std::uint32_t> digits(std::uint64_t idx, std::uint32_t p, std::size_t n) {
  std::vector<std::uint32_t> d(n);
  for (std::size_t i = n; i-- > 0;) {
    d[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  return d;
}

std::uint64_t dot_mod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + std::uint64_t{a[i]} * b[i]) % p;
  return acc;
}

std::vector<Complex> naive_transform(const GridValues& in, int sign, std::uint64_t cap) {
  const std::uint32_t p = in.p();
  const std::size_t n = in.n();
  require_within_cap(grid_size(p, n), cap, "Fourier transform on F_p^n");
  const std::vector<Complex> w = roots_of_unity(p, sign);
  const std::size_t size = in.size();
  std::vector<std::vector<std::uint32_t>> pts(size);
  for (std::size_t i = 0; i < size; ++i) pts[i] = digits(i, p, n);
  std::vector<Complex> out(size);
  for (std::size_t xi = 0; xi < size; ++xi) {
    Complex acc = 0;
    for (std::size_t x = 0; x < size; ++x) acc += in[x] * w[dot_mod(pts[x], pts[xi], p)];
    out[xi] = acc;
  }
  return out;
}

void require_prime_field(const Field& f) {
  if (f.degree() != 1) throw DomainError("Fourier analysis is implemented over prime fields only");
}

void require_same_grid(const GridValues& a, const GridValues& b) {
  if (a.p() != b.p() || a.n() != b.n()) throw DomainError("functions on different spaces");
}

}  // namespace

GridValues::GridValues(std::uint32_t p, std::size_t n, std::vector<Complex> values)
    : p_(p), n_(n), values_(std::move(values)) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (n == 0) throw DomainError("n must be positive");
  if (values_.size() != grid_size(p, n)) throw DomainError("function length must be p^n");
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("non-finite function value");
  }
}

double GridValues::max_abs() const {
  double m = 0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double GridValues::energy() const {
  double e = 0;
  for (const Complex& v : values_) e += std::norm(v);
  return e;
}

FpFunction FpFunction::zeros(std::uint32_t p, std::size_t n) {
  return FpFunction(p, n, std::vector<Complex>(grid_size(p, n)));
}

FpFunction FpFunction::indicator(const Field& field, std::size_t n, const std::vector<FpVec>& set) {
  require_prime_field(field);
  FpFunction f = zeros(field.p(), n);
  for (const FpVec& x : set) {
    if (!(x.field() == field) || x.dim() != n) throw DomainError("indicator point from another space");
    f[point_index(x)] = 1.0;
  }
  return f;
}

Spectrum dft(const FpFunction& f, std::uint64_t cap) {
  return Spectrum(f.p(), f.n(), naive_transform(f, -1, cap));
}

Spectrum dft_factored(const FpFunction& f, std::uint64_t cap) {
  const std::uint32_t p = f.p();
  const std::size_t n = f.n();
  require_within_cap(grid_size(p, n), cap, "Fourier transform on F_p^n");
  const std::vector<Complex> w = roots_of_unity(p, -1);
  std::vector<Complex> cur = f.values();
  std::vector<Complex> line(p);
  // Axis i has stride p^(n-1-i).
  std::size_t stride = cur.size();
  for (std::size_t axis = 0; axis < n; ++axis) {
    stride /= p;
    for (std::size_t start = 0; start < cur.size(); ++start) {
      if ((start / stride) % p != 0) continue;
      for (std::uint32_t k = 0; k < p; ++k) {
        Complex acc = 0;
        for (std::uint32_t x = 0; x < p; ++x) acc += cur[start + x * stride] * w[(std::uint64_t{x} * k) % p];
        line[k] = acc;
      }
      for (std::uint32_t k = 0; k < p; ++k) cur[start + k * stride] = line[k];
    }
  }
  return Spectrum(p, n, std::move(cur));
}

FpFunction inverse_dft(const Spectrum& s, std::uint64_t cap) {
  std::vector<Complex> v = naive_transform(s, +1, cap);
  const double scale = 1.0 / static_cast<double>(s.size());
  for (Complex& c : v) c *= scale;
  return FpFunction(s.p(), s.n(), std::move(v));
}

Spectrum flat_spectrum_expected(const FpFlat& w) {
  const Field& field = w.subspace().field();
  require_prime_field(field);
  const std::uint32_t p = field.p();
  const std::size_t n = w.subspace().ambient_dim();
  const FpSubspace perp = w.subspace().orthogonal_complement();
  const double mass = std::pow(static_cast<double>(p), static_cast<double>(w.dim()));
  const std::vector<Complex> roots = roots_of_unity(p, -1);
  std::vector<Complex> values(grid_size(p, n));
  for (std::size_t i = 0; i < values.size(); ++i) {
    const FpVec xi = point_at(field, n, i);
    if (perp.contains(xi)) values[i] = mass * roots[w.translate().dot(xi).lo];
  }
  return Spectrum(p, n, std::move(values));
}

std::pair<FpFunction, FpFunction> high_low_split(const FpFunction& f) {
  Complex mean = 0;
  for (const Complex& v : f.values()) mean += v;
  mean /= static_cast<double>(f.size());
  FpFunction low(f.p(), f.n(), std::vector<Complex>(f.size(), mean));
  FpFunction high = f;
  for (std::size_t i = 0; i < f.size(); ++i) high[i] = f[i] - mean;
  return {std::move(high), std::move(low)};
}

FpFunction translate(const FpFunction& f, const FpVec& v) {
  if (v.field().degree() != 1 || v.field().p() != f.p() || v.dim() != f.n()) {
    throw DomainError("translation vector from another space");
  }
  FpFunction out = FpFunction::zeros(f.p(), f.n());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = f[point_index(point_at(v.field(), f.n(), i) + v)];
  }
  return out;
}

Spectrum modulate(const Spectrum& s, const FpVec& v) {
  if (v.field().degree() != 1 || v.field().p() != s.p() || v.dim() != s.n()) {
    throw DomainError("modulation vector from another space");
  }
  const std::vector<Complex> roots = roots_of_unity(s.p(), +1);
  Spectrum out = s;
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] * roots[v.dot(point_at(v.field(), s.n(), i)).lo];
  return out;
}

FpFunction combine(Complex alpha, const FpFunction& f, Complex beta, const FpFunction& g) {
  require_same_grid(f, g);
  FpFunction out = f;
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = alpha * f[i] + beta * g[i];
  return out;
}

Spectrum combine(Complex alpha, const Spectrum& f, Complex beta, const Spectrum& g) {
  require_same_grid(f, g);
  Spectrum out = f;
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = alpha * f[i] + beta * g[i];
  return out;
}

double tolerance(const GridValues& f) { return 1e-9 * static_cast<double>(f.size()) * f.max_abs(); }

double max_abs_diff(const GridValues& a, const GridValues& b) {
  require_same_grid(a, b);
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double plancherel_gap(const FpFunction& f, const Spectrum& s) {
  require_same_grid(f, s);
  return std::abs(f.energy() - s.energy() / static_cast<double>(s.size()));
}

}  // namespace projlab::ff
