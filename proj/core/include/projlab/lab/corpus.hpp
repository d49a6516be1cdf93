#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "projlab/euclid/point.hpp"
#include "projlab/ff/vec.hpp"
#include "projlab/lab/geometry_file.hpp"
#include "projlab/rng.hpp"

namespace projlab::lab {

// Distinct uniform points of F_p^n by rejection sampling; size <= p^n.
std::vector<ff::FpVec> uniform_random_fp(const ff::Field& field, std::size_t n, std::size_t size, Rng& rng);
// Distinct uniform integer points of [0, range)^n.
std::vector<euclid::RatPoint> uniform_random_lattice(std::size_t n, std::size_t size, long range, Rng& rng);
// floor(fraction * size) points on a random lattice line through [0, range)^2 and the
// rest off that line. Requires at least two points on the line.
std::vector<euclid::RatPoint> line_plus_noise(std::size_t size, const Rational& fraction, long range, Rng& rng);
// [0, side)^n.
std::vector<euclid::RatPoint> grid(std::size_t side, std::size_t n = 2);
// triangle, unit_square, moment_curve, polygon5, fullgrid (p), subfield (p).
GeometryFile named_configuration(const std::string& name, std::uint32_t p = 3);

struct CorpusSpec {
  std::string generator;  // uniform_random_fp | uniform_random_lattice | line_plus_noise | grid | named
  std::size_t count = 1;
  std::size_t size_min = 1;
  std::size_t size_max = 1;
  std::uint32_t p = 5;
  std::size_t n = 2;
  long range = 100;
  Rational fraction = Rational(3, 4);
  std::size_t side = 10;
  std::string name;
  std::uint64_t seed = 1;
  std::string output_dir = "corpus";
};

// key = value lines; ConfigError("corpus.<key>") on schema violations.
CorpusSpec parse_corpus_spec(const std::string& text);
CorpusSpec read_corpus_spec(const std::string& path);

// File name -> contents, a pure function of the spec.
std::map<std::string, std::string> generate_corpus(const CorpusSpec& spec);
// Writes generate_corpus into spec.output_dir; returns the written paths.
std::vector<std::string> write_corpus(const CorpusSpec& spec);

}  // namespace projlab::lab
