#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "projlab/euclid/line.hpp"
#include "projlab/ff/vec.hpp"

namespace projlab::lab {

// Plain-text configuration shared by the CLI and the corpus generator:
//
//   # comment
//   space euclid <n>      |  space fp <p> <n>  |  space fq <p> <n>
//   points <name> <count>    followed by <count> lines of n coordinates
//   lines <name> <count>     followed by <count> lines of 2n coordinates (two points)
//   param <key> <value>
//
// Euclidean coordinates are integers, "num/den" or finite decimals; fp scalars
// are residues; fq scalars are "lo:hi". Writing is canonical and byte-stable.
struct GeometryFile {
  enum class Space { euclid, fp, fq };

  Space space = Space::euclid;
  std::size_t dim = 2;
  std::uint32_t p = 0;
  std::map<std::string, std::vector<euclid::RatPoint>> point_sets;
  std::map<std::string, std::vector<ff::FpVec>> fp_sets;
  std::map<std::string, std::vector<euclid::RatLine>> line_sets;
  std::map<std::string, std::string> params;

  ff::Field field() const;
  const std::vector<euclid::RatPoint>& points(const std::string& name) const;
  const std::vector<euclid::RatLine>& lines(const std::string& name) const;
  const std::vector<ff::FpVec>& fp_points(const std::string& name) const;
};

// ConfigError with "line <k>" paths on malformed input.
GeometryFile read_geometry(std::istream& in);
GeometryFile read_geometry_file(const std::string& path);
void write_geometry(std::ostream& out, const GeometryFile& g);
std::string geometry_to_string(const GeometryFile& g);

}  // namespace projlab::lab
