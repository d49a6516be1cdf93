#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace projlab::ff {

// Element of F_p (hi == 0) or F_p[t]/(m(t)) as lo + hi*t. Both residues are
// canonical, i.e. in [0, p).
struct Scalar {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  friend auto operator<=>(const Scalar&, const Scalar&) = default;
};

bool is_prime(std::uint64_t n);

// F_p or F_{p^2}. For degree 2 the modulus is t^2 + c1*t + c0, the first
// irreducible monic quadratic in (c0, c1) lexicographic order.
class Field {
 public:
  static Field prime(std::uint32_t p);
  static Field quadratic(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  unsigned degree() const { return r_; }
  std::uint64_t order() const { return r_ == 1 ? p_ : std::uint64_t{p_} * p_; }
  std::uint32_t c0() const { return c0_; }
  std::uint32_t c1() const { return c1_; }

  Scalar zero() const { return {}; }
  Scalar one() const { return {1, 0}; }
  Scalar from_int(std::int64_t v) const;
  bool valid(Scalar a) const { return a.lo < p_ && a.hi < p_ && (r_ == 2 || a.hi == 0); }

  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar inv(Scalar a) const;  // DomainError on zero
  Scalar pow(Scalar a, std::uint64_t e) const;

  // Elements are indexed 0..q-1 as lo*p + hi, which agrees with Scalar ordering.
  std::uint64_t index(Scalar a) const { return r_ == 1 ? a.lo : std::uint64_t{a.lo} * p_ + a.hi; }
  Scalar element(std::uint64_t idx) const;

  // "a" for F_p, "a:b" (lo:hi) for F_{p^2}.
  std::string format(Scalar a) const;
  Scalar parse(const std::string& text) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.r_ == b.r_;
  }

 private:
  Field(std::uint32_t p, unsigned r, std::uint32_t c0, std::uint32_t c1)
      : p_(p), r_(r), c0_(c0), c1_(c1) {}

  std::uint32_t p_;
  unsigned r_;
  std::uint32_t c0_;
  std::uint32_t c1_;
};

}  // namespace projlab::ff
