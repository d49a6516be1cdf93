#pragma once

#include <cstdint>
#include <string>

namespace projlab {

// Default ceiling on the number of objects an exhaustive sweep may touch.
inline constexpr std::uint64_t kDefaultCap = 1'000'000;

// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

// Throws SizeLimitError naming `what` when needed > cap.
void require_within_cap(std::uint64_t needed, std::uint64_t cap, const std::string& what);

}  // namespace projlab
