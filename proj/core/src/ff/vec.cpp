#include "projlab/ff/vec.hpp"

#include "projlab/error.hpp"
#include "projlab/limits.hpp"

namespace projlab::ff {

FpVec::FpVec(Field field, std::vector<Scalar> coords) : field_(field), coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("vectors need at least one coordinate");
  for (const Scalar& s : coords_) {
    if (!field_.valid(s)) throw DomainError("scalar not in canonical form");
  }
}

FpVec FpVec::zero(Field field, std::size_t n) { return FpVec(field, std::vector<Scalar>(n)); }

FpVec FpVec::of(Field field, std::initializer_list<std::int64_t> coords) {
  std::vector<Scalar> out;
  out.reserve(coords.size());
  for (std::int64_t c : coords) out.push_back(field.from_int(c));
  return FpVec(field, std::move(out));
}

bool FpVec::is_zero() const {
  for (const Scalar& s : coords_) {
    if (s != Scalar{}) return false;
  }
  return true;
}

void require_same_space(const FpVec& a, const FpVec& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim()) {
    throw DomainError("vectors from different spaces");
  }
}

FpVec FpVec::operator+(const FpVec& other) const {
  require_same_space(*this, other);
  FpVec out = *this;
  for (std::size_t i = 0; i < dim(); ++i) out.coords_[i] = field_.add(coords_[i], other.coords_[i]);
  return out;
}

FpVec FpVec::operator-(const FpVec& other) const {
  require_same_space(*this, other);
  FpVec out = *this;
  for (std::size_t i = 0; i < dim(); ++i) out.coords_[i] = field_.sub(coords_[i], other.coords_[i]);
  return out;
}

FpVec FpVec::scaled(Scalar c) const {
  FpVec out = *this;
  for (Scalar& s : out.coords_) s = field_.mul(s, c);
  return out;
}

FpVec FpVec::axpy(Scalar c, const FpVec& other) const {
  require_same_space(*this, other);
  FpVec out = *this;
  for (std::size_t i = 0; i < dim(); ++i) {
    out.coords_[i] = field_.add(coords_[i], field_.mul(c, other.coords_[i]));
  }
  return out;
}

Scalar FpVec::dot(const FpVec& other) const {
  require_same_space(*this, other);
  Scalar acc{};
  for (std::size_t i = 0; i < dim(); ++i) acc = field_.add(acc, field_.mul(coords_[i], other.coords_[i]));
  return acc;
}

std::size_t FpVec::leading() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords_[i] != Scalar{}) return i;
  }
  return dim();
}

FpVec FpVec::normalized() const {
  const std::size_t i0 = leading();
  if (i0 == dim()) throw DegenerateInputError("zero vector has no direction");
  return scaled(field_.inv(coords_[i0]));
}

std::string FpVec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out += ' ';
    out += field_.format(coords_[i]);
  }
  return out;
}

std::uint64_t point_index(const FpVec& v) {
  const std::uint64_t q = v.field().order();
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) idx = idx * q + v.field().index(v[i]);
  return idx;
}

FpVec point_at(const Field& field, std::size_t n, std::uint64_t index) {
  const std::uint64_t q = field.order();
  std::vector<Scalar> coords(n);
  for (std::size_t i = n; i-- > 0;) {
    coords[i] = field.element(index % q);
    index /= q;
  }
  return FpVec(field, std::move(coords));
}

std::vector<FpVec> all_points(const Field& field, std::size_t n, std::uint64_t cap) {
  const std::uint64_t total = saturating_pow(field.order(), n);
  require_within_cap(total, cap, "point enumeration of F_q^" + std::to_string(n));
  std::vector<FpVec> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(point_at(field, n, i));
  return out;
}

}  // namespace projlab::ff
