#pragma once

#include <cstdint>
#include <limits>

namespace recon {

using node = std::uint64_t;
using count = std::uint64_t;
using index = std::uint64_t;

constexpr index none = std::numeric_limits<index>::max();

} // namespace recon
