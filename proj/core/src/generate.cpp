#include "cylinderlab/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cylinderlab/span_solver.hpp"

namespace cylinderlab {

WeightZ generate_cylinder(const PrimeModulus& p, const Direction& dir, unsigned long long seed) {
  std::vector<Line> cls = lines_with_direction(p, dir);
  std::mt19937_64 rng(seed);
  std::shuffle(cls.begin(), cls.end(), rng);
  CylinderSpec spec{dir, {cls.begin(), cls.begin() + p.value()}};
  WeightZ w = indicator(p, spec);
  if (!is_zero_one(w) || total_weight(w) != p.square()) {
    throw std::logic_error("generated cylinder violates its defining predicate");
  }
  return w;
}

WeightZ generate_plane_weight(const PrimeModulus& p, size_t index) {
  const std::vector<Plane> planes = enumerate_planes(p);
  if (index >= planes.size()) {
    throw Error("plane index " + std::to_string(index) + " out of range, have " +
                std::to_string(planes.size()));
  }
  return indicator(p, planes[index]);
}

WeightZ generate_line_weight(const PrimeModulus& p, size_t index) {
  const std::vector<Line> lines = enumerate_lines(p);
  if (index >= lines.size()) {
    throw Error("line index " + std::to_string(index) + " out of range, have " +
                std::to_string(lines.size()));
  }
  return indicator(p, lines[index]);
}

WeightFp generate_random_divisible(const PrimeModulus& p, unsigned long long seed, int terms) {
  const SpanFamily family = make_family(p, FamilyTag::ParallelDiffs);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick_gen(0, family.size() - 1);
  std::uniform_int_distribution<int> pick_coeff(1, p.value() - 1 > 0 ? p.value() - 1 : 1);
  if (terms <= 0) terms = 2 * p.value();

  FpCombination comb{p, FamilyTag::ParallelDiffs, {}};
  for (int t = 0; t < terms; ++t) comb.terms.emplace_back(pick_gen(rng), pick_coeff(rng));
  WeightFp w = evaluate(family, comb);
  const DivisibilityReport report = is_p_divisible(w);
  if (!report.divisible) {
    throw std::logic_error("difference combination failed the divisibility re-check");
  }
  return w;
}

WeightZ generate_random_divisible_multiset(const PrimeModulus& p, unsigned long long seed) {
  const SpanFamily family = make_family(p, FamilyTag::ParallelDiffs);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick_plane(0, enumerate_planes(p).size() - 1);
  std::uniform_int_distribution<size_t> pick_gen(0, family.size() - 1);
  std::uniform_int_distribution<int> pick_coeff(-1, 1);
  std::uniform_int_distribution<int> pick_terms(1, 2 * p.value());

  const std::vector<Plane> planes = enumerate_planes(p);
  for (;;) {
    WeightZ w = indicator(p, planes[pick_plane(rng)]);
    const int terms = pick_terms(rng);
    for (int t = 0; t < terms; ++t) {
      const int c = pick_coeff(rng);
      if (c == 0) continue;
      const DiffGen& g = family.diffs[pick_gen(rng)];
      w = w + static_cast<long long>(c) * (indicator(p, g.minuend) - indicator(p, g.subtrahend));
    }
    if (!is_multiset(w)) continue;  // rejection: lifted diffs went negative
    if (total_weight(w) != p.square()) throw std::logic_error("diffs changed the total weight");
    if (!is_p_divisible(w).divisible) throw std::logic_error("generated multiset not divisible");
    return w;
  }
}

}  // namespace cylinderlab
