#include "projlab/report/surd.hpp"

#include "projlab/error.hpp"

namespace projlab {

namespace {

constexpr unsigned kStartBits = 32;
constexpr unsigned kMaxBits = 4096;

// floor(x^(1/k)) and whether it is exact.
std::pair<Integer, bool> int_root(const Integer& x, unsigned k) {
  Integer r;
  const bool exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), k) != 0;
  return {r, exact};
}

std::pair<Rational, Rational> enclose_term(const RootTerm& t, unsigned bits) {
  if (t.root == 1 || t.radicand == 0) {
    Rational v = t.coef * t.radicand;
    return {v, v};
  }
  // (a/b)^(1/k) = (a b^(k-1))^(1/k) / b
  const Integer& a = t.radicand.get_num();
  const Integer& b = t.radicand.get_den();
  Integer bpow;
  mpz_pow_ui(bpow.get_mpz_t(), b.get_mpz_t(), t.root - 1);
  const Integer x = a * bpow;
  if (auto [r, exact] = int_root(x, t.root); exact) {
    Rational v = t.coef * Rational(r, b);
    v.canonicalize();
    return {v, v};
  }
  Integer shifted = x << (bits * t.root);
  auto [r, exact] = int_root(shifted, t.root);
  Integer den = b << bits;
  Rational lo(r, den);
  Rational hi(Integer(r + 1), den);
  lo.canonicalize();
  hi.canonicalize();
  return {t.coef * lo, t.coef * hi};
}

}  // namespace

Surd::Surd(const Rational& value) {
  if (value < 0) throw DomainError("surd terms must be nonnegative");
  if (value != 0) terms_.push_back({value, 1, 1});
}

Surd Surd::root(const Rational& radicand, unsigned k, const Rational& coef) {
  if (radicand < 0 || coef < 0) throw DomainError("surd terms must be nonnegative");
  if (k == 0) throw DomainError("root index must be positive");
  Surd s;
  if (radicand != 0 && coef != 0) s.terms_.push_back({coef, radicand, k});
  return s;
}

Surd& Surd::operator+=(const Surd& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

Surd Surd::scaled(const Rational& c) const {
  if (c < 0) throw DomainError("surd terms must be nonnegative");
  Surd s = *this;
  for (RootTerm& t : s.terms_) t.coef *= c;
  return s;
}

std::pair<Rational, Rational> Surd::enclose(unsigned bits) const {
  Rational lo = 0;
  Rational hi = 0;
  for (const RootTerm& t : terms_) {
    auto [l, h] = enclose_term(t, bits);
    lo += l;
    hi += h;
  }
  return {lo, hi};
}

std::optional<Rational> Surd::exact() const {
  auto [lo, hi] = enclose(kStartBits);
  if (lo == hi) return lo;
  return std::nullopt;
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const RootTerm& t = terms_[i];
    if (i) out += " + ";
    if (t.root == 1) {
      out += projlab::to_string(t.coef * t.radicand);
    } else {
      if (t.coef != 1) out += projlab::to_string(t.coef) + "*";
      out += "(" + projlab::to_string(t.radicand) + ")^(1/" + std::to_string(t.root) + ")";
    }
  }
  return out;
}

Comparison compare_le(const Surd& lhs, const Surd& rhs) {
  Comparison c;
  for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    auto [a_lo, a_hi] = lhs.enclose(bits);
    auto [b_lo, b_hi] = rhs.enclose(bits);
    if (a_hi <= b_lo) {
      c.holds = true;
      c.lhs_value = a_hi;
      c.rhs_value = b_lo;
      return c;
    }
    if (a_lo > b_hi) {
      c.holds = false;
      c.lhs_value = a_lo;
      c.rhs_value = b_hi;
      return c;
    }
  }
  // Enclosures still overlap after 4096 bits: the sides agree to that
  // precision, which for these integer-data inputs means equality.
  auto [a_lo, a_hi] = lhs.enclose(kMaxBits);
  auto [b_lo, b_hi] = rhs.enclose(kMaxBits);
  c.holds = true;
  c.lhs_value = a_lo;
  c.rhs_value = b_hi;
  c.at_precision_limit = true;
  return c;
}

}  // namespace projlab
