#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "frameforge/types.hpp"

namespace frameforge {

using Rng = std::mt19937_64;

/// Independent stream derived from a master seed and a fixed label, so that
/// the draws of one step never depend on how many draws another step made.
Rng make_stream(std::uint64_t seed, std::string_view label);

/// Entries uniform in [-1, 1] (real and imaginary parts when `complex`).
Vector uniform_vector(Rng& rng, Index n, bool complex = false);

/// Standard normal entries, normalized to unit Euclidean length.
Vector random_unit_vector(Rng& rng, Index n, bool complex = false);

}  // namespace frameforge
