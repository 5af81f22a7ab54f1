#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cylinderlab/generate.hpp"
#include "cylinderlab/poly.hpp"
#include "cylinderlab/z_lift.hpp"

using namespace cylinderlab;

TEST_CASE("point-difference gadget evaluates to p(1_a - 1_b)") {
  for (int pv : {2, 3}) {
    const PrimeModulus p(pv);
    for (int ia = 0; ia < p.cube(); ++ia)
      for (int ib = 0; ib < p.cube(); ++ib) {
        if (ia == ib) continue;
        const Point a = point_at(p, ia);
        const Point b = point_at(p, ib);
        const PointDiffGadget gadget = point_difference_certificate(p, a, b);
        const WeightZ expected =
            static_cast<long long>(pv) * (indicator(p, a) - indicator(p, b));
        CHECK(evaluate(gadget) == expected);
        CHECK(static_cast<int>(gadget.pairs.size()) == pv);
        CHECK(plane_contains(p, gadget.host_plane, a));
        CHECK(plane_contains(p, gadget.host_plane, b));
      }
  }
}

TEST_CASE("gadget pairs are parallel lines through a and b inside the host plane") {
  const PrimeModulus p(5);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, p.cube() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const Point a = point_at(p, pick(rng));
    Point b = point_at(p, pick(rng));
    if (a == b) continue;
    const PointDiffGadget g = point_difference_certificate(p, a, b);
    for (const auto& [plus, minus] : g.pairs) {
      CHECK(are_parallel(plus, minus));
      CHECK(line_contains(p, plus, a));
      CHECK(line_contains(p, minus, b));
      CHECK_FALSE(line_contains(p, plus, b));
    }
    CHECK(evaluate(g) == 5LL * (indicator(p, a) - indicator(p, b)));
  }
}

TEST_CASE("coincident points are rejected") {
  const PrimeModulus p(3);
  CHECK_THROWS_AS(point_difference_certificate(p, Point{1, 1, 1}, Point{1, 1, 1}),
                  DegeneratePair);
}

TEST_CASE("p_zero_sum_certificate expands p*u") {
  const PrimeModulus p(3);

  CHECK(p_zero_sum_certificate(WeightZ::zero(p)).empty());

  const WeightZ one_step = indicator(p, Point{0, 0, 1}) - indicator(p, Point{2, 1, 0});
  const auto single = p_zero_sum_certificate(one_step);
  CHECK(single.size() == 1);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long long> vals(p.cube(), 0);
    for (auto& v : vals) v = val(rng);
    long long total = 0;
    for (long long v : vals) total += v;
    vals[0] -= total;  // force the zero-sum precondition
    const WeightZ u(p, vals);
    WeightZ sum = WeightZ::zero(p);
    for (const PointDiffGadget& g : p_zero_sum_certificate(u)) sum = sum + evaluate(g);
    CHECK(sum == 3LL * u);
  }

  CHECK_THROWS_AS(p_zero_sum_certificate(indicator(p, Point{0, 0, 0})), PreconditionViolated);
}

TEST_CASE("lift_set on a plane indicator uses the plane itself") {
  const PrimeModulus p(3);
  const Plane h{1, 2, 0, 1};
  const ZCertificate cert = lift_set(indicator(p, h));
  REQUIRE(cert.base_plane.has_value());
  CHECK(*cert.base_plane == h);
  CHECK(cert.diff_terms.empty());
  CHECK(verify_certificate(cert));
}

TEST_CASE("lift_set certifies cylinders exactly") {
  for (int pv : {2, 3, 5}) {
    const PrimeModulus p(pv);
    const std::vector<Direction> dirs = enumerate_directions(p);
    for (unsigned long long seed = 0; seed < 10; ++seed) {
      const Direction dir = dirs[seed % dirs.size()];
      const WeightZ cyl = generate_cylinder(p, dir, seed);
      const ZCertificate cert = lift_set(cyl);
      CHECK(verify_certificate(cert));
      CHECK(evaluate(cert) == cyl);
    }
  }
}

TEST_CASE("lift_set rejects bad inputs") {
  const PrimeModulus p(3);

  // Wrong values.
  WeightZ w = WeightZ::zero(p);
  w.values[0] = 2;
  CHECK_THROWS_AS(lift_set(w), PreconditionViolated);

  // Wrong size.
  CHECK_THROWS_AS(lift_set(indicator(p, Point{0, 0, 0})), PreconditionViolated);

  // Not divisible: a 0/1 set of size 9 that misses the divisibility test.
  std::mt19937_64 rng(4);
  for (;;) {
    std::vector<long long> vals(27, 0);
    std::vector<int> idx(27);
    for (int i = 0; i < 27; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int i = 0; i < 9; ++i) vals[idx[i]] = 1;
    const WeightZ s(p, vals);
    if (is_p_divisible(s).divisible) continue;
    try {
      lift_set(s);
      FAIL("expected PreconditionViolated");
    } catch (const PreconditionViolated& e) {
      REQUIRE(e.witness_plane.has_value());
      CHECK(plane_sum(s, *e.witness_plane) % 3 != 0);
    }
    break;
  }
}

TEST_CASE("lift_multiset end to end") {
  const PrimeModulus p(3);

  // Doubled line + omitted line: values in {0,1,2}, total p^2.
  const Direction d{{0, 0, 1}};
  const auto cls = lines_with_direction(p, d);
  const WeightZ doubled = indicator(p, CylinderSpec{d, {cls[0], cls[0], cls[1]}});
  CHECK(total_weight(doubled) == 9);
  const ZCertificate cert = lift_multiset(doubled);
  CHECK(verify_certificate(cert));
  CHECK(evaluate(cert) == doubled);

  // The weight-p single point fails the size precondition.
  CHECK_THROWS_AS(lift_multiset(3LL * indicator(p, Point{1, 1, 1})), SizeViolation);

  // A plane indicator needs no residual.
  const ZCertificate plane_cert = lift_multiset(indicator(p, Plane{0, 1, 0, 2}));
  CHECK(plane_cert.diff_terms.empty());
  CHECK(verify_certificate(plane_cert));

  // Negative entries are not multisets.
  WeightZ neg = indicator(p, Plane{0, 1, 0, 2});
  neg.values[0] -= 3;
  neg.values[1] += 3;
  CHECK_THROWS_AS(lift_multiset(neg), NotAMultiset);

  // One point of weight p^2 is a legitimate input: divisible, total p^2.
  WeightZ heavy_point = WeightZ::zero(p);
  heavy_point.values[0] = 9;
  CHECK(verify_certificate(lift_multiset(heavy_point)));

  // Right size and sign but not divisible.
  WeightZ lopsided = WeightZ::zero(p);
  lopsided.values[0] = 8;
  lopsided.values[1] = 1;
  CHECK_THROWS_AS(lift_multiset(lopsided), PreconditionViolated);
}

TEST_CASE("lift_multiset on random generated multisets") {
  for (int pv : {2, 3}) {
    const PrimeModulus p(pv);
    for (unsigned long long seed = 100; seed < 110; ++seed) {
      const WeightZ w = generate_random_divisible_multiset(p, seed);
      const ZCertificate cert = lift_multiset(w);
      CHECK(verify_certificate(cert));
    }
  }
}

TEST_CASE("verify_certificate catches tampering") {
  const PrimeModulus p(3);
  const WeightZ cyl = generate_cylinder(p, Direction{{0, 1, 0}}, 5);
  ZCertificate cert = lift_set(cyl);
  REQUIRE(verify_certificate(cert));
  REQUIRE(!cert.diff_terms.empty());
  std::get<2>(cert.diff_terms[0]) += 1;
  CHECK_FALSE(verify_certificate(cert));
}

TEST_CASE("hand-built pencil certificate for a plane verifies") {
  const PrimeModulus p(3);
  const Plane h{0, 0, 1, 0};  // z = 0
  const Direction d{{0, 1, 0}};
  const std::vector<Line> cls = lines_with_direction(p, d);
  std::vector<Line> in_plane;
  for (const Line& l : cls) {
    bool inside = true;
    for (const Point& pt : line_points(p, l)) inside = inside && plane_contains(p, h, pt);
    if (inside) in_plane.push_back(l);
  }
  REQUIRE(in_plane.size() == 3);

  // The plane as a cylinder: base plane H with an empty residual.
  ZCertificate plane_cert{p, h, {}, indicator(p, h)};
  CHECK(verify_certificate(plane_cert));

  // Hand-built pencil certificate: the differences against the anchor line
  // certify 1_H - p*1_{l0} with no base plane.
  ZCertificate pencil_cert{p, std::nullopt, {}, indicator(p, h) - 3LL * indicator(p, in_plane[0])};
  for (const Line& l : in_plane) {
    if (l == in_plane[0]) continue;
    pencil_cert.diff_terms.emplace_back(l, in_plane[0], 1);
  }
  CHECK(verify_certificate(pencil_cert));
}

TEST_CASE("certificate evaluations reduce into the orthogonal complement") {
  const PrimeModulus p(3);
  for (unsigned long long seed = 0; seed < 5; ++seed) {
    const WeightZ cyl = generate_cylinder(p, Direction{{1, 2, 1}}, seed);
    const ZCertificate cert = lift_set(cyl);
    CHECK(in_plane_span_orthogonal(reduce_mod_p(evaluate(cert))));
  }
}
