#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <variant>

#include "cylinderlab/generate.hpp"
#include "cylinderlab/poly.hpp"
#include "cylinderlab/span_solver.hpp"

using namespace cylinderlab;

namespace {

int binom_p_plus_2_3(int pv) { return (pv + 2) * (pv + 1) * pv / 6; }

bool witness_is_sound(const SpanFamily& family, const WeightFp& witness, const WeightFp& target) {
  if (bilinear(witness, target) == 0) return false;
  for (size_t g = 0; g < family.size(); ++g) {
    if (bilinear(witness, generator_weight(family, g)) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("family sizes follow the enumeration") {
  const PrimeModulus p(3);
  CHECK(make_family(p, FamilyTag::Planes).size() == 39);
  CHECK(make_family(p, FamilyTag::Lines).size() == 117);
  CHECK(make_family(p, FamilyTag::ParallelDiffs).size() == (9 - 1) * 13);
  CHECK(make_family(p, FamilyTag::CylinderType).size() == (9 - 1) * 13);
}

TEST_CASE("parallel-difference generators pair distinct parallel lines") {
  const PrimeModulus p(3);
  const SpanFamily fam = make_family(p, FamilyTag::ParallelDiffs);
  for (const DiffGen& g : fam.diffs) {
    CHECK(are_parallel(g.minuend, g.subtrahend));
    CHECK(g.minuend != g.subtrahend);
  }
}

TEST_CASE("span dimensions at small p") {
  const PrimeModulus p2(2);
  CHECK(span_dimension(p2, FamilyTag::Planes) == 4);
  CHECK(span_dimension(p2, FamilyTag::Lines) == 7);
  CHECK(span_dimension(p2, FamilyTag::ParallelDiffs) == 4);

  const PrimeModulus p3(3);
  CHECK(span_dimension(p3, FamilyTag::Planes) == 10);
  CHECK(span_dimension(p3, FamilyTag::ParallelDiffs) == 17);
}

TEST_CASE("line span dimension equals the degree <= 2p-2 monomial count") {
  for (int pv : {2, 3, 5}) {
    const PrimeModulus p(pv);
    CHECK(span_dimension(p, FamilyTag::Lines) ==
          monomial_count_up_to_degree(p, 2 * pv - 2));
  }
}

TEST_CASE("cylinder-type span equals the parallel-difference span") {
  for (int pv : {2, 3}) {
    const PrimeModulus p(pv);
    CHECK(span_dimension(p, FamilyTag::CylinderType) ==
          span_dimension(p, FamilyTag::ParallelDiffs));
  }
}

TEST_CASE("solving the zero weight yields the empty combination") {
  const PrimeModulus p(3);
  const auto solver = solver_for(p, FamilyTag::ParallelDiffs);
  const SolveResult res = solver->solve(WeightFp::zero(p));
  REQUIRE(std::holds_alternative<FpCombination>(res));
  CHECK(std::get<FpCombination>(res).terms.empty());
  CHECK_THROWS_AS(solver->solve(WeightFp::zero(PrimeModulus(5))), ModulusMismatch);
}

TEST_CASE("a plane decomposes over parallel differences") {
  for (int pv : {2, 3, 5}) {
    const PrimeModulus p(pv);
    const WeightFp target = reduce_mod_p(indicator(p, Plane{1, 0, 0, 1}));
    const auto solver = solver_for(p, FamilyTag::ParallelDiffs);
    const SolveResult res = solver->solve(target);
    REQUIRE(std::holds_alternative<FpCombination>(res));
    CHECK(evaluate(solver->family(), std::get<FpCombination>(res)) == target);
  }
}

TEST_CASE("a point indicator is outside the difference span, with witness") {
  for (int pv : {2, 3, 5}) {
    const PrimeModulus p(pv);
    const WeightFp target = reduce_mod_p(indicator(p, Point{1 % pv, 0, 2 % pv}));
    const auto solver = solver_for(p, FamilyTag::ParallelDiffs);
    const SolveResult res = solver->solve(target);
    REQUIRE(std::holds_alternative<NotInSpan>(res));
    CHECK(witness_is_sound(solver->family(), std::get<NotInSpan>(res).witness, target));
  }
}

TEST_CASE("solver soundness on random targets across families") {
  for (const FamilyTag tag :
       {FamilyTag::Planes, FamilyTag::Lines, FamilyTag::ParallelDiffs, FamilyTag::CylinderType}) {
    for (int pv : {2, 3}) {
      const PrimeModulus p(pv);
      const auto solver = solver_for(p, tag);
      std::mt19937_64 rng(17 * pv + static_cast<int>(tag));
      std::uniform_int_distribution<int> val(0, pv - 1);
      for (int trial = 0; trial < 30; ++trial) {
        std::vector<int32_t> vals(p.cube());
        for (auto& v : vals) v = val(rng);
        const WeightFp target(p, vals);
        const SolveResult res = solver->solve(target);
        if (std::holds_alternative<FpCombination>(res)) {
          CHECK(evaluate(solver->family(), std::get<FpCombination>(res)) == target);
        } else {
          CHECK(witness_is_sound(solver->family(), std::get<NotInSpan>(res).witness, target));
        }
      }
    }
  }
}

TEST_CASE("decompose_p_divisible round trips") {
  const PrimeModulus p(3);
  const auto solver = solver_for(p, FamilyTag::ParallelDiffs);

  // Zero decomposes to the empty combination.
  CHECK(decompose_p_divisible(WeightFp::zero(p)).terms.empty());

  // Cylinders decompose and re-evaluate exactly.
  for (unsigned long long seed = 0; seed < 10; ++seed) {
    const WeightFp cyl = reduce_mod_p(generate_cylinder(p, Direction{{1, 1, 0}}, seed));
    const FpCombination comb = decompose_p_divisible(cyl);
    CHECK(evaluate(solver->family(), comb) == cyl);
  }

  // Random elements of the orthogonal complement at p=5.
  const PrimeModulus p5(5);
  const auto solver5 = solver_for(p5, FamilyTag::ParallelDiffs);
  for (unsigned long long seed = 0; seed < 10; ++seed) {
    const WeightFp w = generate_random_divisible(p5, seed, 0);
    CHECK(evaluate(solver5->family(), decompose_p_divisible(w)) == w);
  }
}

TEST_CASE("decompose_p_divisible rejects non-divisible input with a witness") {
  const PrimeModulus p(3);
  const WeightFp line = reduce_mod_p(indicator(p, line_from(p, Point{0, 0, 0}, Direction{{0, 0, 1}})));
  try {
    decompose_p_divisible(line);
    FAIL("expected PreconditionViolated");
  } catch (const PreconditionViolated& e) {
    REQUIRE(e.witness_plane.has_value());
    CHECK(mod_reduce(plane_sum(line, *e.witness_plane), 3) != 0);
  }
}

TEST_CASE("decomposition succeeds exactly on the orthogonal complement") {
  for (int pv : {2, 3}) {
    const PrimeModulus p(pv);
    std::mt19937_64 rng(5 * pv);
    std::uniform_int_distribution<int> val(0, pv - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int32_t> vals(p.cube());
      for (auto& v : vals) v = val(rng);
      const WeightFp w(p, vals);
      const bool member = in_plane_span_orthogonal(w);
      bool decomposed = true;
      try {
        (void)decompose_p_divisible(w);
      } catch (const PreconditionViolated&) {
        decomposed = false;
      }
      CHECK(member == decomposed);
    }
  }
}

TEST_CASE("cylinder_type_to_diffs applies the anchor rewrite") {
  const PrimeModulus p(3);
  const Direction d{{0, 1, 2}};
  const auto cls = lines_with_direction(p, d);
  const auto solver = solver_for(p, FamilyTag::ParallelDiffs);

  // All-ones cylinder: p lines, coefficient 1 each, sum p = 0.
  ParallelClassCombination ones{p, d, {{cls[0], 1}, {cls[1], 1}, {cls[2], 1}}};
  const FpCombination rewritten = cylinder_type_to_diffs(ones);
  CHECK(evaluate(solver->family(), rewritten) == evaluate(ones));

  // Coefficients (1,2,0) on three parallel lines: two-term combination.
  ParallelClassCombination mixed{p, d, {{cls[1], 1}, {cls[2], 2}, {cls[3], 0}}};
  const FpCombination mixed_rewritten = cylinder_type_to_diffs(mixed);
  CHECK(mixed_rewritten.terms.size() == 2);
  CHECK(evaluate(solver->family(), mixed_rewritten) == evaluate(mixed));

  // A single line with coefficient 1 is not representable for p >= 3.
  ParallelClassCombination single{p, d, {{cls[0], 1}}};
  CHECK_THROWS_AS(cylinder_type_to_diffs(single), NotRepresentable);

  // Mixing directions is rejected.
  const Line other = line_from(p, Point{0, 0, 0}, Direction{{1, 0, 0}});
  ParallelClassCombination bad{p, d, {{cls[0], 1}, {other, 2}}};
  CHECK_THROWS_AS(cylinder_type_to_diffs(bad), InvalidCylinderSpec);
}

TEST_CASE("difference span dimension matches the complement dimension") {
  for (int pv : {2, 3}) {
    const PrimeModulus p(pv);
    CHECK(span_dimension(p, FamilyTag::ParallelDiffs) == p.cube() - binom_p_plus_2_3(pv));
    CHECK(span_dimension(p, FamilyTag::Planes) == binom_p_plus_2_3(pv));
  }
}
