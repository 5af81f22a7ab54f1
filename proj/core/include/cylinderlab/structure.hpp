#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cylinderlab/weights.hpp"

namespace cylinderlab {

/// Split of the p^2+p+1 directions into those determined by a point set
/// (a line through two of its points) and the rest.
struct DirectionReport {
  std::vector<Direction> determined;
  std::vector<Direction> undetermined;
};

/// Direction d such that the set is a union of p full lines of direction d,
/// if one exists. Input must be {0,1}-valued with total weight p^2.
std::optional<Direction> is_cylinder(const WeightZ& set);

/// D_S and N_S of a {0,1}-valued weight.
DirectionReport determined_directions(const WeightZ& set);

/// First enumerated line whose p points all carry weight >= 1, if any.
std::optional<Line> contains_full_line(const WeightZ& w);

/// Two fixed skew lines with weight -1 plus the p lines joining point i of
/// the first to point sigma(i) of the second with weight +1. The raw signed
/// evaluation is returned; its total is always p(p-2), the rest is
/// bijection-dependent.
WeightZ skew_lines_construction(const PrimeModulus& p, const std::vector<int>& bijection);

/// One-line reconciliation of the two sizes quoted for the construction:
/// the evaluated total p(p-2) versus the p(p-1) figure that appears when only
/// one base line is discounted.
std::string skew_size_note(const PrimeModulus& p);

/// Sands criterion: |A||B| = p^3 and (A-A) meets (B-B) only in 0.
bool is_tiling_pair(const PrimeModulus& p, const std::vector<Point>& a,
                    const std::vector<Point>& b);

struct SearchReport {
  PrimeModulus p;
  unsigned long long candidates_examined = 0;
  /// Survivors of the checked predicate that fail the expected structure.
  std::vector<WeightZ> violations;
  /// For the exhaustive check: number of p-divisible sets found. For the
  /// support search: number of feasible candidates seen.
  unsigned long long divisible_count = 0;
  std::optional<std::pair<WeightZ, long long>> best;  // (weight, support size)
  long long elapsed_ms = 0;
};

/// Enumerates every {0,1} set of size p^2 with plane-sum pruning, retains the
/// p-divisible ones and verifies each is a cylinder. Refuses p > 3. Worker
/// count never changes the report.
SearchReport exhaustive_scc_check(const PrimeModulus& p, int workers = 1);

/// Best-effort randomized search for a small-support nonnegative integer
/// combination of lines containing no full line. Seeds its incumbent with the
/// skew-lines construction; never claims optimality.
SearchReport min_support_search(const PrimeModulus& p, int max_support, unsigned long long budget,
                                unsigned long long seed);

}  // namespace cylinderlab
