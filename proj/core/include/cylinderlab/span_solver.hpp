#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cylinderlab/weights.hpp"

namespace cylinderlab {

enum class FamilyTag { Planes, Lines, ParallelDiffs, CylinderType };

std::string family_name(FamilyTag tag);
FamilyTag family_from_name(const std::string& name);

/// Difference of two distinct parallel lines: 1_minuend - 1_subtrahend.
struct DiffGen {
  Line minuend;
  Line subtrahend;
};

/// Cylinder-type multiset made of p lines in one direction: the member line
/// once plus the class anchor p-1 times (coefficient sum p = 0 mod p).
struct CylinderTypeGen {
  Line member;
  Line anchor;
};

/// A generator family in its deterministic enumeration order: directions in
/// enumeration order, base points lexicographic, each non-anchor line paired
/// with the least line of its parallel class.
struct SpanFamily {
  PrimeModulus p;
  FamilyTag tag;
  std::vector<Plane> planes;
  std::vector<Line> lines;
  std::vector<DiffGen> diffs;
  std::vector<CylinderTypeGen> cylinder_type;

  size_t size() const;
};

SpanFamily make_family(const PrimeModulus& p, FamilyTag tag);

/// Sparse point support of one generator: (point index, residue) pairs.
std::vector<std::pair<int, int32_t>> generator_support(const SpanFamily& family, size_t index);
WeightFp generator_weight(const SpanFamily& family, size_t index);
std::string generator_key(const SpanFamily& family, size_t index);
size_t generator_index_from_key(const SpanFamily& family, const std::string& key);

struct FpCombination {
  PrimeModulus p;
  FamilyTag family;
  std::vector<std::pair<size_t, int32_t>> terms;  // (generator index, coefficient)
};

WeightFp evaluate(const SpanFamily& family, const FpCombination& comb);

/// Returned when a target is outside the span: a functional (point weights)
/// orthogonal to every generator but not to the target.
struct NotInSpan {
  WeightFp witness;
};

using SolveResult = std::variant<FpCombination, NotInSpan>;

/// Exact F_p solver over one generator family. Construction reduces the
/// point-by-generator matrix to reduced row echelon form once; solves against
/// arbitrary targets are then cheap and the solver is safe to share read-only.
class SpanSolver {
 public:
  explicit SpanSolver(SpanFamily family);

  const SpanFamily& family() const { return family_; }
  int rank() const { return rank_; }

  SolveResult solve(const WeightFp& target) const;

 private:
  SpanFamily family_;
  int rows_;           // p^3
  size_t gen_count_;
  int rank_;
  std::vector<int32_t> echelon_;    // rows_ x gen_count_, RREF of the matrix
  std::vector<int32_t> transform_;  // rows_ x rows_, T with T*A = echelon
  std::vector<int> pivot_col_;      // per echelon row < rank_
};

/// Process-wide solver cache, built once per (p, family) and shared.
std::shared_ptr<const SpanSolver> solver_for(const PrimeModulus& p, FamilyTag tag);

int span_dimension(const PrimeModulus& p, FamilyTag tag);

/// Constructive form of the span membership of p-divisible weights:
/// a combination of parallel-line differences evaluating exactly to w.
/// Throws PreconditionViolated (with the witness plane) if w is not
/// p-divisible.
FpCombination decompose_p_divisible(const WeightFp& w);

/// F_p-combination of lines sharing one direction.
struct ParallelClassCombination {
  PrimeModulus p;
  Direction dir;
  std::vector<std::pair<Line, int32_t>> terms;
};

WeightFp evaluate(const ParallelClassCombination& comb);

/// Rewrites a combination of parallel lines against the class anchor:
/// sum c(l) 1_l = sum c(l) (1_l - 1_anchor), valid exactly when the
/// coefficients sum to 0 mod p; otherwise NotRepresentable.
FpCombination cylinder_type_to_diffs(const ParallelClassCombination& comb);

}  // namespace cylinderlab
