#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "projlab/ff/line.hpp"
#include "projlab/ff/subspace.hpp"
#include "projlab/report/bound_report.hpp"

namespace projlab::ff {

// |P_V(X)| for every k-subspace V, in enumerate_subspaces order.
struct ProjectionProfile {
  std::vector<FpSubspace> subspaces;
  std::vector<std::size_t> sizes;
};
ProjectionProfile projection_profile(const std::vector<FpVec>& x, std::size_t k, std::uint64_t cap = kDefaultCap);

// {V in G(n,k) : |P_V(X)| < s} by a full Grassmannian sweep. Requires 1 <= k <= n-1, X nonempty.
std::vector<FpSubspace> orth_exceptional_set(const std::vector<FpVec>& x, std::size_t k, std::uint64_t s,
                                             std::uint64_t cap = kDefaultCap);

struct FalconerOptions {
  // Constant used for k >= 2, where only an implicit constant is proved.
  Rational higher_rank_constant = 2;
  std::uint64_t cap = kDefaultCap;
};

// |E_s(X)| <= C p^{k(n-k)} s / |X| for s = 1..min(|X|, floor(p^k / 2)). C = 2 and
// blocking for k = 1; tracked for k >= 2.
std::vector<BoundReport> falconer_ff_report(const std::vector<FpVec>& x, std::size_t k,
                                            const FalconerOptions& options = {});

// Number of radial lines seen from every pin of F_q^n, in point_index order.
std::vector<std::size_t> radial_profile(const Field& field, std::size_t n, const std::vector<FpVec>& y,
                                        std::uint64_t cap = kDefaultCap);

// {x in F_q^n : |radial_lines(x, Y)| < s}, sorted.
std::vector<FpVec> radial_exceptional_set(const Field& field, std::size_t n, const std::vector<FpVec>& y,
                                          std::uint64_t s, std::uint64_t cap = kDefaultCap);

struct RadialBoundReport {
  std::vector<BoundReport> reports;
  // One entry per report family skipped because its size hypothesis fails.
  std::vector<std::string> skipped;
};

// (i) |E_s(Y)| <= 8n p^{n-1} s / |Y| when |Y| > 8n p^{n-1}, s <= min(|Y|, p^{n-1}/sqrt2);
// (ii) |E_s(Y)| <= 12 p^{n-1} s / |Y| when |Y| >= 6 p^{n-1}, s <= p^{n-1}/4.
RadialBoundReport radial_bound_report(const Field& field, std::size_t n, const std::vector<FpVec>& y,
                                      std::uint64_t cap = kDefaultCap);

struct FullGridExample {
  std::vector<FpVec> points;
  std::vector<FpLine> lines;
  std::uint64_t incidences = 0;
  BoundReport report;
};

// P = F_p^2 and all p lines in each of the p smallest canonical directions.
FullGridExample example_fullgrid(std::uint32_t p, std::uint64_t cap = kDefaultCap);

struct SubfieldExample {
  Field field;
  std::vector<FpVec> points;
  std::vector<FpSubspace> small_directions;  // theta with |P_theta(X)| <= p
  BoundReport report;
};

// X = F_p^2 inside F_{p^2}^2 and the directions along which it projects to at most p cosets.
SubfieldExample example_subfield(std::uint32_t p, std::uint64_t cap = kDefaultCap);

// Space-separated vector strings joined by ", ".
std::string format_points(const std::vector<FpVec>& x);

}  // namespace projlab::ff
