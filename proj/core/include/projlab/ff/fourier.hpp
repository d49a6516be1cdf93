#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "projlab/ff/subspace.hpp"
#include "projlab/limits.hpp"

namespace projlab::ff {

using Complex = std::complex<double>;

// Complex values on F_p^n, one per point in point_index order.
class GridValues {
 public:
  GridValues(std::uint32_t p, std::size_t n, std::vector<Complex> values);

  std::uint32_t p() const { return p_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }
  std::vector<Complex>& values() { return values_; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  Complex& operator[](std::size_t i) { return values_[i]; }
  double max_abs() const;
  double energy() const;  // sum |v|^2

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<Complex> values_;
};

class FpFunction : public GridValues {
 public:
  using GridValues::GridValues;
  static FpFunction zeros(std::uint32_t p, std::size_t n);
  static FpFunction indicator(const Field& field, std::size_t n, const std::vector<FpVec>& set);
};

// Indexed by frequency xi with the same ordering as points.
class Spectrum : public GridValues {
 public:
  using GridValues::GridValues;
};

// f^(xi) = sum_x f(x) e^{-2 pi i x.xi / p}, by direct summation. Authoritative.
Spectrum dft(const FpFunction& f, std::uint64_t cap = kDefaultCap);
// Same transform as n successive length-p transforms.
Spectrum dft_factored(const FpFunction& f, std::uint64_t cap = kDefaultCap);
// f(x) = p^{-n} sum_xi F(xi) e^{2 pi i x.xi / p}.
FpFunction inverse_dft(const Spectrum& s, std::uint64_t cap = kDefaultCap);

// Closed-form transform of the indicator of W = V + b:
// p^k e^{-2 pi i b.xi/p} on V^perp and zero elsewhere.
Spectrum flat_spectrum_expected(const FpFlat& w);

// (f_high, f_low) with f_low the constant mean(f).
std::pair<FpFunction, FpFunction> high_low_split(const FpFunction& f);

// x -> f(x + v).
FpFunction translate(const FpFunction& f, const FpVec& v);
// xi -> e^{2 pi i v.xi / p} F(xi).
Spectrum modulate(const Spectrum& s, const FpVec& v);
FpFunction combine(Complex alpha, const FpFunction& f, Complex beta, const FpFunction& g);
Spectrum combine(Complex alpha, const Spectrum& f, Complex beta, const Spectrum& g);

// 1e-9 * p^n * max|f|.
double tolerance(const GridValues& f);
double max_abs_diff(const GridValues& a, const GridValues& b);
// |sum |f|^2 - p^{-n} sum |F|^2|
double plancherel_gap(const FpFunction& f, const Spectrum& s);

}  // namespace projlab::ff
