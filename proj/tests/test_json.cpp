#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <variant>

#include "cylinderlab/generate.hpp"
#include "cylinderlab/json_io.hpp"

using namespace cylinderlab;

TEST_CASE("weight JSON round trip") {
  const PrimeModulus p(3);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long long> val(-9, 9);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<long long> vals(27);
    for (auto& v : vals) v = val(rng);
    const WeightZ w(p, vals);
    CHECK(weight_from_json(weight_to_json(w)) == w);
    CHECK(weight_from_json(weight_to_json(w, true)) == w);
  }
  const WeightFp f = generate_random_divisible(p, 3, 0);
  CHECK(weight_fp_from_json(weight_to_json(f)) == f);
}

TEST_CASE("weight JSON rejects malformed input, naming the field") {
  CHECK_THROWS_WITH_AS(weight_from_json("{\"values\":[0]}"),
                       doctest::Contains("missing field \"p\""), JsonError);
  CHECK_THROWS_WITH_AS(weight_from_json("{\"p\":4,\"values\":[]}"),
                       doctest::Contains("\"p\" must be prime"), JsonError);
  CHECK_THROWS_WITH_AS(weight_from_json("{\"p\":2,\"values\":[0,1]}"),
                       doctest::Contains("\"values\" must have length 8"), JsonError);
  CHECK_THROWS_WITH_AS(weight_from_json("{\"p\":2,\"values\":[0,1,0,1,0,1,0,\"x\"]}"),
                       doctest::Contains("\"values\" must hold integers"), JsonError);
  CHECK_THROWS_AS(weight_from_json("not json"), JsonError);
  CHECK_THROWS_WITH_AS(weight_fp_from_json("{\"p\":2,\"values\":[0,1,0,1,0,1,0,2]}"),
                       doctest::Contains("residues in [0, p)"), JsonError);
}

TEST_CASE("polynomial JSON round trip lists nonzero coefficients in order") {
  const PrimeModulus p(3);
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> val(0, 2);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int32_t> cs(27);
    for (auto& c : cs) c = val(rng);
    const ReducedPoly q(p, cs);
    CHECK(poly_from_json(poly_to_json(q)) == q);
  }
  const ReducedPoly zero = ReducedPoly::zero(p);
  CHECK(poly_to_json(zero) == "{\"coeffs\":[],\"p\":3}");  // keys sort alphabetically
}

TEST_CASE("combination JSON round trip against its family") {
  const PrimeModulus p(3);
  const auto solver = solver_for(p, FamilyTag::ParallelDiffs);
  const WeightFp target = generate_random_divisible(p, 12, 0);
  const SolveResult res = solver->solve(target);
  REQUIRE(std::holds_alternative<FpCombination>(res));
  const FpCombination& comb = std::get<FpCombination>(res);

  const std::string text = combination_to_json(solver->family(), comb, target);
  const FpCombination parsed = combination_from_json(text, solver->family());
  CHECK(parsed.terms == comb.terms);
  CHECK(evaluate(solver->family(), parsed) == target);

  CHECK_THROWS_AS(combination_from_json(text, make_family(p, FamilyTag::Planes)), JsonError);
}

TEST_CASE("certificate JSON round trip") {
  const PrimeModulus p(3);
  const WeightZ cyl = generate_cylinder(p, Direction{{1, 0, 2}}, 21);
  const ZCertificate cert = lift_set(cyl);
  const ZCertificate parsed = certificate_from_json(certificate_to_json(cert));
  CHECK(parsed.base_plane == cert.base_plane);
  CHECK(parsed.diff_terms == cert.diff_terms);
  CHECK(parsed.declared_target == cert.declared_target);
  CHECK(verify_certificate(parsed));
}

TEST_CASE("certificate JSON validates its line keys") {
  CHECK_THROWS_WITH_AS(
      certificate_from_json("{\"p\":3,\"base_plane\":null,\"diffs\":[[\"L 3 0 0 2 0 0 0\","
                            "\"L 3 0 0 1 0 0 0\",1]],\"target\":{\"p\":3,\"values\":"
                            "[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]}}"),
      doctest::Contains("non-canonical"), JsonError);
  CHECK_THROWS_WITH_AS(
      certificate_from_json("{\"p\":3,\"base_plane\":\"Q 3 1 0 0 0\",\"diffs\":[],"
                            "\"target\":{\"p\":3,\"values\":"
                            "[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]}}"),
      doctest::Contains("expected generator key"), JsonError);
}

TEST_CASE("a parsed certificate with non-parallel lines fails verification") {
  const PrimeModulus p(3);
  // Structurally well-formed JSON whose pair is not parallel.
  const std::string text =
      "{\"p\":3,\"base_plane\":null,\"diffs\":[[\"L 3 0 0 1 0 0 0\",\"L 3 0 1 0 0 0 0\",0]],"
      "\"target\":{\"p\":3,\"values\":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]}}";
  const ZCertificate cert = certificate_from_json(text);
  CHECK_FALSE(verify_certificate(cert));
}

TEST_CASE("search report JSON shape") {
  const SearchReport report = exhaustive_scc_check(PrimeModulus(2));
  const std::string text = search_report_to_json(report);
  CHECK(text.find("\"candidates_examined\":70") != std::string::npos);
  CHECK(text.find("\"violations\":[]") != std::string::npos);
}
