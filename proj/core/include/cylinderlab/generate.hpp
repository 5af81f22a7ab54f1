#pragma once

#include <cstdint>

#include "cylinderlab/weights.hpp"

namespace cylinderlab {

/// Union of p distinct (hence disjoint) parallel lines of the given
/// direction, chosen by a seeded shuffle of the parallel class.
WeightZ generate_cylinder(const PrimeModulus& p, const Direction& dir, unsigned long long seed);

/// Indicator of the index-th enumerated plane / line.
WeightZ generate_plane_weight(const PrimeModulus& p, size_t index);
WeightZ generate_line_weight(const PrimeModulus& p, size_t index);

/// Seeded F_p-combination of parallel-line differences; p-divisible by
/// construction and re-checked before returning.
WeightFp generate_random_divisible(const PrimeModulus& p, unsigned long long seed, int terms);

/// Nonnegative p-divisible multiset of total weight p^2: a seeded plane plus
/// small integer multiples of parallel-line differences, rejection-sampled
/// until no entry is negative.
WeightZ generate_random_divisible_multiset(const PrimeModulus& p, unsigned long long seed);

}  // namespace cylinderlab
