#include "projlab/limits.hpp"

#include "projlab/error.hpp"

namespace projlab {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

void require_within_cap(std::uint64_t needed, std::uint64_t cap, const std::string& what) {
  if (needed > cap) {
    throw SizeLimitError(what + " needs " +
                         (needed == UINT64_MAX ? std::string("more than 2^64") : std::to_string(needed)) +
                         " items, above the enumeration cap " + std::to_string(cap));
  }
}

}  // namespace projlab
