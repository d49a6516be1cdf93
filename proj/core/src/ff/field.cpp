#include "projlab/ff/field.hpp"

#include <charconv>

#include "projlab/error.hpp"

namespace projlab::ff {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 30)) {
    throw DomainError("field characteristic must be a prime below 2^30, got " + std::to_string(p));
  }
  return Field(p, 1, 0, 0);
}

Field Field::quadratic(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 15)) {
    throw DomainError("quadratic extension needs a prime below 2^15, got " + std::to_string(p));
  }
  for (std::uint32_t c0 = 0; c0 < p; ++c0) {
    for (std::uint32_t c1 = 0; c1 < p; ++c1) {
      bool has_root = false;
      for (std::uint64_t x = 0; x < p && !has_root; ++x) {
        has_root = (x * x + std::uint64_t{c1} * x + c0) % p == 0;
      }
      if (!has_root) return Field(p, 2, c0, c1);
    }
  }
  throw DomainError("no irreducible quadratic found");  // unreachable for prime p
}

Scalar Field::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return {static_cast<std::uint32_t>(m), 0};
}

Scalar Field::add(Scalar a, Scalar b) const {
  std::uint32_t lo = a.lo + b.lo;
  std::uint32_t hi = a.hi + b.hi;
  if (lo >= p_) lo -= p_;
  if (hi >= p_) hi -= p_;
  return {lo, hi};
}

Scalar Field::neg(Scalar a) const {
  return {a.lo == 0 ? 0 : p_ - a.lo, a.hi == 0 ? 0 : p_ - a.hi};
}

Scalar Field::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar Field::mul(Scalar a, Scalar b) const {
  const std::uint64_t p = p_;
  if (r_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.lo} * b.lo % p), 0};
  // (a0 + a1 t)(b0 + b1 t) with t^2 = -c1 t - c0.
  const std::uint64_t a1b1 = std::uint64_t{a.hi} * b.hi % p;
  const std::uint64_t lo = (std::uint64_t{a.lo} * b.lo + (p - c0_) % p * a1b1) % p;
  const std::uint64_t hi =
      (std::uint64_t{a.lo} * b.hi + std::uint64_t{a.hi} * b.lo + (p - c1_) % p * a1b1) % p;
  return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
}

Scalar Field::pow(Scalar a, std::uint64_t e) const {
  Scalar result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Scalar Field::inv(Scalar a) const {
  if (a == zero()) throw DomainError("inverse of zero");
  return pow(a, order() - 2);
}

Scalar Field::element(std::uint64_t idx) const {
  if (r_ == 1) return {static_cast<std::uint32_t>(idx), 0};
  return {static_cast<std::uint32_t>(idx / p_), static_cast<std::uint32_t>(idx % p_)};
}

std::string Field::format(Scalar a) const {
  if (r_ == 1) return std::to_string(a.lo);
  return std::to_string(a.lo) + ":" + std::to_string(a.hi);
}

namespace {

std::uint32_t parse_residue(const std::string& text, std::uint32_t p) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw DomainError("not an integer residue: '" + text + "'");
  }
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += p;
  return static_cast<std::uint32_t>(m);
}

}  // namespace

Scalar Field::parse(const std::string& text) const {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {parse_residue(text, p_), 0};
  if (r_ == 1) throw DomainError("extension scalar '" + text + "' in a prime field");
  return {parse_residue(text.substr(0, colon), p_), parse_residue(text.substr(colon + 1), p_)};
}

}  // namespace projlab::ff
