#include "cylinderlab/z_lift.hpp"

#include <map>
#include <stdexcept>

namespace cylinderlab {

WeightZ evaluate(const PointDiffGadget& gadget) {
  WeightZ w = WeightZ::zero(gadget.p);
  for (const auto& [plus, minus] : gadget.pairs) {
    for (const Point& pt : line_points(gadget.p, plus)) w.values[point_index(gadget.p, pt)] += 1;
    for (const Point& pt : line_points(gadget.p, minus)) w.values[point_index(gadget.p, pt)] -= 1;
  }
  return w;
}

PointDiffGadget point_difference_certificate(const PrimeModulus& p, const Point& a,
                                             const Point& b) {
  if (a == b) throw DegeneratePair("point_difference_certificate: coincident points");

  Plane host{};
  bool found = false;
  for (const Plane& h : enumerate_planes(p)) {
    if (plane_contains(p, h, a) && plane_contains(p, h, b)) {
      host = h;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no plane contains both points");

  PointDiffGadget gadget{p, a, b, host, {}};
  const Direction ab = line_through(p, a, b).dir;
  for (const Direction& d : enumerate_directions(p)) {
    if (!plane_contains_direction(p, host, d) || d == ab) continue;
    // One pair per line of the host plane through a avoiding b; its parallel
    // partner through b is unique inside the plane.
    gadget.pairs.emplace_back(line_from(p, a, d), line_from(p, b, d));
  }

  const WeightZ expected = static_cast<long long>(p.value()) * (indicator(p, a) - indicator(p, b));
  if (!(evaluate(gadget) == expected)) {
    throw std::logic_error("point-difference gadget violates its evaluation contract");
  }
  return gadget;
}

std::vector<PointDiffGadget> p_zero_sum_certificate(const WeightZ& u) {
  if (total_weight(u) != 0) {
    throw PreconditionViolated("p_zero_sum_certificate: weights must sum to zero");
  }
  std::vector<PointDiffGadget> gadgets;
  std::vector<long long> rest = u.values;
  for (;;) {
    int pos = -1;
    int neg = -1;
    for (size_t i = 0; i < rest.size() && (pos < 0 || neg < 0); ++i) {
      if (pos < 0 && rest[i] > 0) pos = static_cast<int>(i);
      if (neg < 0 && rest[i] < 0) neg = static_cast<int>(i);
    }
    if (pos < 0 && neg < 0) break;
    if (pos < 0 || neg < 0) throw std::logic_error("zero-sum weight with one-sided residue");
    gadgets.push_back(point_difference_certificate(u.p, point_at(u.p, pos), point_at(u.p, neg)));
    rest[pos] -= 1;
    rest[neg] += 1;
  }
  return gadgets;
}

WeightZ evaluate(const ZCertificate& cert) {
  WeightZ w = WeightZ::zero(cert.p);
  if (cert.base_plane) w = w + indicator(cert.p, *cert.base_plane);
  for (const auto& [l1, l2, coeff] : cert.diff_terms) {
    for (const Point& pt : line_points(cert.p, l1)) w.values[point_index(cert.p, pt)] += coeff;
    for (const Point& pt : line_points(cert.p, l2)) w.values[point_index(cert.p, pt)] -= coeff;
  }
  return w;
}

namespace {

/// Accumulates diff terms keyed by the ordered line pair, dropping zeros at
/// the end so certificates stay small and deterministic.
class DiffAccumulator {
 public:
  void add(const Line& l1, const Line& l2, long long coeff) {
    if (l1 == l2 || coeff == 0) return;
    acc_[{l1, l2}] += coeff;
  }

  std::vector<std::tuple<Line, Line, long long>> take() const {
    std::vector<std::tuple<Line, Line, long long>> out;
    for (const auto& [key, coeff] : acc_) {
      if (coeff != 0) out.emplace_back(key.first, key.second, coeff);
    }
    return out;
  }

 private:
  std::map<std::pair<Line, Line>, long long> acc_;
};

/// The base plane: the plane whose indicator equals the input when there is
/// one (so plane inputs certify as themselves), else the first in
/// enumeration order.
Plane pick_base_plane(const WeightZ& w) {
  const std::vector<Plane> planes = enumerate_planes(w.p);
  if (is_zero_one(w) && total_weight(w) == w.p.square()) {
    for (const Plane& h : planes) {
      if (indicator(w.p, h) == w) return h;
    }
  }
  return planes.front();
}

long long negativity(const std::vector<long long>& vals) {
  long long s = 0;
  for (long long v : vals) {
    if (v < 0) s -= v;
  }
  return s;
}

}  // namespace

ZCertificate lift_set(const WeightZ& set) {
  const PrimeModulus& p = set.p;
  if (!is_zero_one(set)) {
    throw PreconditionViolated("lift_set: input must be {0,1}-valued");
  }
  if (total_weight(set) != p.square()) {
    throw PreconditionViolated("lift_set: input must have exactly p^2 points, got " +
                               std::to_string(total_weight(set)));
  }
  const DivisibilityReport report = is_p_divisible(set);
  if (!report.divisible) {
    throw PreconditionViolated("lift_set: input is not p-divisible", p, *report.witness_plane,
                               report.witness_sum);
  }

  const Plane base = pick_base_plane(set);
  const WeightZ base_ind = indicator(p, base);

  // Residue decomposition of (set - 1_H) over parallel differences, lifted
  // with coefficients in {0,...,p-1}.
  const WeightFp residue = reduce_mod_p(set - base_ind);
  const auto solver = solver_for(p, FamilyTag::ParallelDiffs);
  const SolveResult solved = solver->solve(residue);
  if (std::holds_alternative<NotInSpan>(solved)) {
    throw std::logic_error("divisible set residue fell outside the difference span");
  }
  const FpCombination& comb = std::get<FpCombination>(solved);

  DiffAccumulator acc;
  WeightZ g = base_ind;
  for (const auto& [index, coeff] : comb.terms) {
    const DiffGen& gen = solver->family().diffs[index];
    acc.add(gen.minuend, gen.subtrahend, coeff);
    for (const Point& pt : line_points(p, gen.minuend)) g.values[point_index(p, pt)] += coeff;
    for (const Point& pt : line_points(p, gen.subtrahend)) g.values[point_index(p, pt)] -= coeff;
  }

  // Repair loop: as long as some value is negative, add a point-difference
  // gadget moving p units from a point with value >= p. Each move preserves
  // the total and every residue while strictly shrinking the negativity.
  long long abs_sum = 0;
  for (long long v : g.values) abs_sum += v < 0 ? -v : v;
  const long long cap = static_cast<long long>(p.value()) * abs_sum;
  long long iterations = 0;
  long long neg = negativity(g.values);
  while (neg > 0) {
    if (++iterations > cap) {
      throw LiftObstruction("lift_set: repair loop exceeded its iteration cap", g);
    }
    int c = -1;
    int d = -1;
    for (size_t i = 0; i < g.values.size(); ++i) {
      if (c < 0 && g.values[i] < 0) c = static_cast<int>(i);
      if (d < 0 && g.values[i] >= p.value()) d = static_cast<int>(i);
    }
    if (d < 0) {
      throw LiftObstruction("lift_set: negative value remains but no point has value >= p", g);
    }
    const PointDiffGadget gadget =
        point_difference_certificate(p, point_at(p, c), point_at(p, d));
    for (const auto& [plus, minus] : gadget.pairs) {
      acc.add(plus, minus, 1);
      for (const Point& pt : line_points(p, plus)) g.values[point_index(p, pt)] += 1;
      for (const Point& pt : line_points(p, minus)) g.values[point_index(p, pt)] -= 1;
    }
    const long long next_neg = negativity(g.values);
    if (next_neg >= neg) throw std::logic_error("repair move failed to shrink the negativity");
    if (total_weight(g) != p.square()) throw std::logic_error("repair move changed the total");
    neg = next_neg;
  }

  if (!(g == set)) throw std::logic_error("lift_set: repaired lift differs from the input set");

  return ZCertificate{p, base, acc.take(), set};
}

ZCertificate lift_multiset(const WeightZ& multiset) {
  const PrimeModulus& p = multiset.p;
  if (total_weight(multiset) != p.square()) {
    throw SizeViolation("lift_multiset: total weight must be p^2, got " +
                        std::to_string(total_weight(multiset)));
  }
  if (!is_multiset(multiset)) {
    throw NotAMultiset("lift_multiset: negative entries are not a multiset");
  }
  const DivisibilityReport report = is_p_divisible(multiset);
  if (!report.divisible) {
    throw PreconditionViolated("lift_multiset: input is not p-divisible", p,
                               *report.witness_plane, report.witness_sum);
  }

  const Plane base = pick_base_plane(multiset);
  const WeightZ base_ind = indicator(p, base);
  if (base_ind == multiset) {
    // Plane inputs need no residual at all.
    return ZCertificate{p, base, {}, multiset};
  }

  // Anchor line: first enumerated line inside the base plane.
  Line anchor{};
  bool anchor_found = false;
  for (const Line& l : enumerate_lines(p)) {
    bool inside = true;
    for (const Point& pt : line_points(p, l)) {
      if (!plane_contains(p, base, pt)) {
        inside = false;
        break;
      }
    }
    if (inside) {
      anchor = l;
      anchor_found = true;
      break;
    }
  }
  if (!anchor_found) throw std::logic_error("plane contains no line");

  // Step 1: decompose the residues and lift coefficients to {0,...,p-1}.
  const WeightFp residue = reduce_mod_p(multiset);
  const auto solver = solver_for(p, FamilyTag::ParallelDiffs);
  const SolveResult solved = solver->solve(residue);
  if (std::holds_alternative<NotInSpan>(solved)) {
    throw std::logic_error("divisible multiset residue fell outside the difference span");
  }
  const FpCombination& comb = std::get<FpCombination>(solved);

  DiffAccumulator acc;
  WeightZ g = WeightZ::zero(p);
  for (const auto& [index, coeff] : comb.terms) {
    const DiffGen& gen = solver->family().diffs[index];
    acc.add(gen.minuend, gen.subtrahend, coeff);
    for (const Point& pt : line_points(p, gen.minuend)) g.values[point_index(p, pt)] += coeff;
    for (const Point& pt : line_points(p, gen.subtrahend)) g.values[point_index(p, pt)] -= coeff;
  }
  if (total_weight(g) != 0) throw std::logic_error("lifted difference combination has a total");

  // Step 2: w - g = p*t with sum(t) = p; u = t - 1_anchor has zero sum and
  // p*u expands through point-difference gadgets.
  std::vector<long long> tvals(g.values.size());
  for (size_t i = 0; i < tvals.size(); ++i) {
    const long long d = multiset.values[i] - g.values[i];
    if (d % p.value() != 0) throw std::logic_error("w - g is not divisible by p pointwise");
    tvals[i] = d / p.value();
  }
  WeightZ t(p, std::move(tvals));
  if (total_weight(t) != p.value()) throw std::logic_error("sum of t must equal p");

  const WeightZ u = t - indicator(p, anchor);
  for (const PointDiffGadget& gadget : p_zero_sum_certificate(u)) {
    for (const auto& [plus, minus] : gadget.pairs) acc.add(plus, minus, 1);
  }

  // Step 3: 1_H - p*1_anchor is the pencil of the p parallel lines of the
  // base plane; it enters with coefficient -1.
  for (const Line& l : lines_with_direction(p, anchor.dir)) {
    if (l == anchor) continue;
    bool inside = true;
    for (const Point& pt : line_points(p, l)) {
      if (!plane_contains(p, base, pt)) {
        inside = false;
        break;
      }
    }
    if (inside) acc.add(l, anchor, -1);
  }

  ZCertificate cert{p, base, acc.take(), multiset};
  if (!(evaluate(cert) == multiset)) {
    throw std::logic_error("lift_multiset: assembled certificate misses its target");
  }
  return cert;
}

bool verify_certificate(const ZCertificate& cert) {
  if (!(cert.declared_target.p == cert.p)) return false;
  for (const auto& [l1, l2, coeff] : cert.diff_terms) {
    (void)coeff;
    if (!are_parallel(l1, l2)) return false;
  }
  return evaluate(cert) == cert.declared_target;
}

}  // namespace cylinderlab
