#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "projlab/ff/vec.hpp"
#include "projlab/limits.hpp"

namespace projlab::ff {

// Linear subspace of F_q^n held as its reduced row-echelon basis.
class FpSubspace {
 public:
  // Span of arbitrary vectors (may be dependent or empty).
  static FpSubspace span(const Field& field, std::size_t n, const std::vector<FpVec>& vectors);
  static FpSubspace whole(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<FpVec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Representative of v + this with zeros at pivot columns; it is the
  // lexicographically smallest element of the coset.
  FpVec reduce(const FpVec& v) const;
  bool contains(const FpVec& v) const { return reduce(v).is_zero(); }
  bool contains(const FpSubspace& other) const;

  // Complement under x.y = sum x_i y_i (no conjugation in F_{p^2}).
  FpSubspace orthogonal_complement() const;

  // Every element; SizeLimitError above cap.
  std::vector<FpVec> elements(std::uint64_t cap = kDefaultCap) const;

  // Rows separated by " ; ", "{0}" for the zero subspace.
  std::string to_string() const;

  friend bool operator==(const FpSubspace& a, const FpSubspace& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend std::strong_ordering operator<=>(const FpSubspace& a, const FpSubspace& b);

 private:
  FpSubspace(Field field, std::size_t n) : field_(field), n_(n) {}

  Field field_;
  std::size_t n_;
  std::vector<FpVec> rows_;
  std::vector<std::size_t> pivots_;
};

// Affine flat V + b with b the lexicographically smallest coset element.
class FpFlat {
 public:
  FpFlat(FpSubspace subspace, const FpVec& point);

  const FpSubspace& subspace() const { return subspace_; }
  const FpVec& translate() const { return translate_; }
  std::size_t dim() const { return subspace_.dim(); }
  bool contains(const FpVec& v) const;
  std::vector<FpVec> points(std::uint64_t cap = kDefaultCap) const;
  std::string to_string() const;

  friend bool operator==(const FpFlat&, const FpFlat&) = default;
  friend std::strong_ordering operator<=>(const FpFlat& a, const FpFlat& b) {
    if (auto c = a.subspace_ <=> b.subspace_; c != 0) return c;
    return a.translate_ <=> b.translate_;
  }

 private:
  FpSubspace subspace_;
  FpVec translate_;
};

// Number of k-subspaces of F_q^n. SizeLimitError if it overflows 64 bits.
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k);

// All k-subspaces (resp. k-flats) of F_q^n in canonical order. Guard:
// q^{k(n-k)+n} <= cap.
std::vector<FpSubspace> enumerate_subspaces(const Field& field, std::size_t n, std::size_t k,
                                            std::uint64_t cap = kDefaultCap);
std::vector<FpFlat> enumerate_flats(const Field& field, std::size_t n, std::size_t k,
                                    std::uint64_t cap = kDefaultCap);

}  // namespace projlab::ff
