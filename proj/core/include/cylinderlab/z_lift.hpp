#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "cylinderlab/span_solver.hpp"
#include "cylinderlab/weights.hpp"

namespace cylinderlab {

/// Signed configuration of parallel line pairs inside one plane through a and
/// b, evaluating exactly to p*1_a - p*1_b over the integers.
struct PointDiffGadget {
  PrimeModulus p;
  Point a;
  Point b;
  Plane host_plane;
  /// (+1 on first, -1 on second); one pair per line of the host plane
  /// through a avoiding b.
  std::vector<std::pair<Line, Line>> pairs;
};

WeightZ evaluate(const PointDiffGadget& gadget);

/// Builds the gadget inside the first enumerated plane containing both
/// points. Throws DegeneratePair when a == b. Construction re-evaluates the
/// pairs and refuses to return a gadget violating its contract.
PointDiffGadget point_difference_certificate(const PrimeModulus& p, const Point& a, const Point& b);

/// Expands p*u as a sum of point-difference gadgets, one per unit step of a
/// greedy pairing of positive against negative values. Requires sum(u) = 0.
std::vector<PointDiffGadget> p_zero_sum_certificate(const WeightZ& u);

/// Integer certificate: optional base plane plus weighted differences of
/// parallel lines, whose exact integer evaluation equals declared_target.
struct ZCertificate {
  PrimeModulus p;
  std::optional<Plane> base_plane;
  std::vector<std::tuple<Line, Line, long long>> diff_terms;
  WeightZ declared_target;
};

WeightZ evaluate(const ZCertificate& cert);

/// Thrown when the negative-value repair loop of lift_set cannot find a point
/// with value >= p to borrow from; carries the stuck intermediate state.
class LiftObstruction : public Error {
 public:
  LiftObstruction(const std::string& what, WeightZ stuck_state)
      : Error(what), stuck(std::move(stuck_state)) {}
  WeightZ stuck;
};

/// Certificate for a {0,1}-valued p-divisible set of size p^2: a base plane
/// plus integer parallel-line differences summing exactly to the set.
ZCertificate lift_set(const WeightZ& set);

/// Certificate for a nonnegative p-divisible multiset of total weight p^2;
/// writes target - 1_H over parallel-line differences.
ZCertificate lift_multiset(const WeightZ& multiset);

/// Independent checker: recomputes the integer evaluation from scratch and
/// compares against the declared target. Shares no state with the producers.
bool verify_certificate(const ZCertificate& cert);

}  // namespace cylinderlab
