#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cylinderlab/weights.hpp"

namespace cylinderlab {

/// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kZeroPolyDegree = -1;

/// Polynomial in F_p[x,y,z] with every per-variable exponent <= p-1,
/// identified with the function F_p^3 -> F_p it evaluates to. Coefficients
/// are stored densely, indexed by i*p^2 + j*p + k for the monomial
/// x^i y^j z^k.
struct ReducedPoly {
  PrimeModulus p;
  std::vector<int32_t> coeffs;

  ReducedPoly(PrimeModulus modulus, std::vector<int32_t> cs);
  static ReducedPoly zero(const PrimeModulus& modulus);

  int32_t coeff(int i, int j, int k) const { return coeffs[(i * p.value() + j) * p.value() + k]; }

  friend bool operator==(const ReducedPoly&, const ReducedPoly&) = default;
};

/// Interpolation: the unique reduced polynomial evaluating to w. Inverse of
/// weight_from_poly; both directions are exact bijections.
ReducedPoly poly_from_weight(const WeightFp& w);

/// Evaluation at all p^3 points, with the convention 0^0 = 1.
WeightFp weight_from_poly(const ReducedPoly& q);

/// Max of i+j+k over nonzero coefficients; kZeroPolyDegree for the zero poly.
int total_degree(const ReducedPoly& q);

/// A weighted list of planes (plus a constant correction) that evaluates to a
/// declared target function.
struct PlaneCombination {
  PrimeModulus p;
  std::vector<std::pair<Plane, int32_t>> terms;
  int32_t constant_adjust = 0;
  /// Multinomial factor of the synthesis before rescaling; kept for auditing.
  int32_t multinomial_factor = 1;
};

WeightFp evaluate(const PlaneCombination& comb);

/// Writes the monomial x^i y^j z^k (total degree <= p-1) as a combination of
/// plane indicators: the weighted sum over planes a*x+b*y+c*z+1 = 0 with
/// weights a^(p-1-i) b^(p-1-j) c^(p-1-k), rescaled by the inverse of the
/// multinomial coefficient it produces. The constant monomial comes out of a
/// parallel pencil instead.
PlaneCombination monomial_via_planes(const PrimeModulus& p, int i, int j, int k);

/// Span membership through the reduced-degree characterizations:
/// plane span = degree <= p-1, its orthogonal complement = degree <= 2p-3,
/// line span = degree <= 2p-2.
bool in_plane_span(const WeightFp& w);
bool in_line_span(const WeightFp& w);

/// Orthogonal complement of the plane span. Computes both the degree bound
/// and the direct all-planes orthogonality scan; the two routes must agree.
bool in_plane_span_orthogonal(const WeightFp& w);

/// Number of monomials with per-variable exponent <= p-1 and total degree
/// <= bound. Handy for dimension cross-checks.
int monomial_count_up_to_degree(const PrimeModulus& p, int bound);

}  // namespace cylinderlab
