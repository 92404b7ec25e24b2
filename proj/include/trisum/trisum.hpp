#pragma once

// Umbrella header.

#include "trisum/arith.hpp"
#include "trisum/bounds.hpp"
#include "trisum/construction.hpp"
#include "trisum/search.hpp"
#include "trisum/serialize.hpp"
#include "trisum/sumset.hpp"

namespace trisum {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace trisum
