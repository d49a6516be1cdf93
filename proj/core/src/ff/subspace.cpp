#include "projlab/ff/subspace.hpp"

#include <algorithm>
#include <gmpxx.h>

#include "projlab/error.hpp"

namespace projlab::ff {

FpSubspace FpSubspace::span(const Field& field, std::size_t n, const std::vector<FpVec>& vectors) {
  if (n == 0) throw DomainError("ambient dimension must be positive");
  std::vector<FpVec> rows;
  rows.reserve(vectors.size());
  for (const FpVec& v : vectors) {
    if (!(v.field() == field) || v.dim() != n) throw DomainError("spanning vector from another space");
    rows.push_back(v);
  }
  FpSubspace out(field, n);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == Scalar{}) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    rows[rank] = rows[rank].scaled(field.inv(rows[rank][col]));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col] != Scalar{}) {
        rows[r] = rows[r].axpy(field.neg(rows[r][col]), rows[rank]);
      }
    }
    out.pivots_.push_back(col);
    ++rank;
  }
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end());
  out.rows_ = std::move(rows);
  return out;
}

FpSubspace FpSubspace::whole(const Field& field, std::size_t n) {
  std::vector<FpVec> basis;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> e(n);
    e[i] = field.one();
    basis.emplace_back(field, std::move(e));
  }
  return span(field, n, basis);
}

FpVec FpSubspace::reduce(const FpVec& v) const {
  if (!(v.field() == field_) || v.dim() != n_) throw DomainError("vector from another space");
  FpVec out = v;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const Scalar c = out[pivots_[j]];
    if (c != Scalar{}) out = out.axpy(field_.neg(c), rows_[j]);
  }
  return out;
}

bool FpSubspace::contains(const FpSubspace& other) const {
  for (const FpVec& row : other.rows_) {
    if (!contains(row)) return false;
  }
  return true;
}

FpSubspace FpSubspace::orthogonal_complement() const {
  std::vector<bool> is_pivot(n_, false);
  for (std::size_t c : pivots_) is_pivot[c] = true;
  std::vector<FpVec> basis;
  for (std::size_t f = 0; f < n_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> w(n_);
    w[f] = field_.one();
    for (std::size_t j = 0; j < rows_.size(); ++j) w[pivots_[j]] = field_.neg(rows_[j][f]);
    basis.emplace_back(field_, std::move(w));
  }
  return span(field_, n_, basis);
}

std::vector<FpVec> FpSubspace::elements(std::uint64_t cap) const {
  const std::uint64_t q = field_.order();
  const std::uint64_t total = saturating_pow(q, dim());
  require_within_cap(total, cap, "subspace element enumeration");
  std::vector<FpVec> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    FpVec v = FpVec::zero(field_, n_);
    std::uint64_t rest = idx;
    for (std::size_t j = dim(); j-- > 0;) {
      v = v.axpy(field_.element(rest % q), rows_[j]);
      rest /= q;
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FpSubspace::to_string() const {
  if (rows_.empty()) return "{0}";
  std::string out;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    if (j) out += " ; ";
    out += rows_[j].to_string();
  }
  return out;
}

std::strong_ordering operator<=>(const FpSubspace& a, const FpSubspace& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.rows_.size() <=> b.rows_.size(); c != 0) return c;
  return a.rows_ <=> b.rows_;
}

FpFlat::FpFlat(FpSubspace subspace, const FpVec& point)
    : subspace_(std::move(subspace)), translate_(subspace_.reduce(point)) {}

bool FpFlat::contains(const FpVec& v) const { return subspace_.reduce(v) == translate_; }

std::vector<FpVec> FpFlat::points(std::uint64_t cap) const {
  std::vector<FpVec> out = subspace_.elements(cap);
  for (FpVec& v : out) v = v + translate_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string FpFlat::to_string() const {
  return "span " + subspace_.to_string() + " + " + translate_.to_string();
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), q, n - i);
    mpz_ui_pow_ui(den.get_mpz_t(), q, i + 1);
    result = result * (num - 1) / (den - 1);
  }
  if (!result.fits_ulong_p()) throw SizeLimitError("Gaussian binomial exceeds 64 bits");
  return result.get_ui();
}

namespace {

void require_k(std::size_t n, std::size_t k) {
  if (n == 0) throw DomainError("ambient dimension must be positive");
  if (k > n) throw DomainError("subspace dimension k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
}

}  // namespace

std::vector<FpSubspace> enumerate_subspaces(const Field& field, std::size_t n, std::size_t k,
                                            std::uint64_t cap) {
  require_k(n, k);
  const std::uint64_t q = field.order();
  require_within_cap(saturating_pow(q, k * (n - k) + n), cap,
                     "Grassmannian sweep G(" + std::to_string(n) + "," + std::to_string(k) + ")");

  std::vector<FpSubspace> out;
  std::vector<std::size_t> piv(k);
  for (std::size_t j = 0; j < k; ++j) piv[j] = j;
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    // Free slots: (row, column) right of the row's pivot and not a pivot column.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t c = piv[j] + 1; c < n; ++c) {
        if (!is_pivot[c]) slots.emplace_back(j, c);
      }
    }
    const std::uint64_t fills = saturating_pow(q, slots.size());
    for (std::uint64_t idx = 0; idx < fills; ++idx) {
      std::vector<std::vector<Scalar>> rows(k, std::vector<Scalar>(n));
      for (std::size_t j = 0; j < k; ++j) rows[j][piv[j]] = field.one();
      std::uint64_t rest = idx;
      for (const auto& [j, c] : slots) {
        rows[j][c] = field.element(rest % q);
        rest /= q;
      }
      std::vector<FpVec> vecs;
      for (auto& r : rows) vecs.emplace_back(field, std::move(r));
      out.push_back(FpSubspace::span(field, n, vecs));
    }
    // Next pivot combination.
    std::size_t j = k;
    while (j > 0 && piv[j - 1] == n - k + (j - 1)) --j;
    if (j == 0) break;
    ++piv[j - 1];
    for (std::size_t i = j; i < k; ++i) piv[i] = piv[i - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FpFlat> enumerate_flats(const Field& field, std::size_t n, std::size_t k, std::uint64_t cap) {
  std::vector<FpFlat> out;
  const std::uint64_t q = field.order();
  for (const FpSubspace& v : enumerate_subspaces(field, n, k, cap)) {
    std::vector<std::size_t> free_cols;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : v.pivots()) is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c) {
      if (!is_pivot[c]) free_cols.push_back(c);
    }
    const std::uint64_t count = saturating_pow(q, free_cols.size());
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<Scalar> b(n);
      std::uint64_t rest = idx;
      for (std::size_t i = free_cols.size(); i-- > 0;) {
        b[free_cols[i]] = field.element(rest % q);
        rest /= q;
      }
      out.emplace_back(v, FpVec(field, std::move(b)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace projlab::ff
