#include "cylinderlab/span_solver.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cylinderlab {

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Planes:
      return "planes";
    case FamilyTag::Lines:
      return "lines";
    case FamilyTag::ParallelDiffs:
      return "diffs";
    case FamilyTag::CylinderType:
      return "cylinder-type";
  }
  throw std::logic_error("unknown family tag");
}

FamilyTag family_from_name(const std::string& name) {
  if (name == "planes") return FamilyTag::Planes;
  if (name == "lines") return FamilyTag::Lines;
  if (name == "diffs") return FamilyTag::ParallelDiffs;
  if (name == "cylinder-type") return FamilyTag::CylinderType;
  throw JsonError("unknown generator family \"" + name + "\"");
}

size_t SpanFamily::size() const {
  switch (tag) {
    case FamilyTag::Planes:
      return planes.size();
    case FamilyTag::Lines:
      return lines.size();
    case FamilyTag::ParallelDiffs:
      return diffs.size();
    case FamilyTag::CylinderType:
      return cylinder_type.size();
  }
  throw std::logic_error("unknown family tag");
}

SpanFamily make_family(const PrimeModulus& p, FamilyTag tag) {
  SpanFamily fam{p, tag, {}, {}, {}, {}};
  switch (tag) {
    case FamilyTag::Planes:
      fam.planes = enumerate_planes(p);
      break;
    case FamilyTag::Lines:
      fam.lines = enumerate_lines(p);
      break;
    case FamilyTag::ParallelDiffs:
      for (const Direction& d : enumerate_directions(p)) {
        const std::vector<Line> cls = lines_with_direction(p, d);
        for (size_t i = 1; i < cls.size(); ++i) fam.diffs.push_back(DiffGen{cls[i], cls[0]});
      }
      break;
    case FamilyTag::CylinderType:
      for (const Direction& d : enumerate_directions(p)) {
        const std::vector<Line> cls = lines_with_direction(p, d);
        for (size_t i = 1; i < cls.size(); ++i)
          fam.cylinder_type.push_back(CylinderTypeGen{cls[i], cls[0]});
      }
      break;
  }
  return fam;
}

std::vector<std::pair<int, int32_t>> generator_support(const SpanFamily& family, size_t index) {
  const PrimeModulus& p = family.p;
  std::vector<std::pair<int, int32_t>> support;
  switch (family.tag) {
    case FamilyTag::Planes:
      for (const Point& pt : plane_points(p, family.planes[index]))
        support.emplace_back(point_index(p, pt), 1);
      break;
    case FamilyTag::Lines:
      for (const Point& pt : line_points(p, family.lines[index]))
        support.emplace_back(point_index(p, pt), 1);
      break;
    case FamilyTag::ParallelDiffs: {
      const DiffGen& g = family.diffs[index];
      for (const Point& pt : line_points(p, g.minuend)) support.emplace_back(point_index(p, pt), 1);
      for (const Point& pt : line_points(p, g.subtrahend))
        support.emplace_back(point_index(p, pt), p.value() - 1);
      break;
    }
    case FamilyTag::CylinderType: {
      const CylinderTypeGen& g = family.cylinder_type[index];
      for (const Point& pt : line_points(p, g.member)) support.emplace_back(point_index(p, pt), 1);
      for (const Point& pt : line_points(p, g.anchor))
        support.emplace_back(point_index(p, pt), p.value() - 1);
      break;
    }
  }
  return support;
}

WeightFp generator_weight(const SpanFamily& family, size_t index) {
  WeightFp w = WeightFp::zero(family.p);
  for (const auto& [idx, c] : generator_support(family, index)) {
    w.values[idx] = mod_add(w.values[idx], c, family.p.value());
  }
  return w;
}

std::string generator_key(const SpanFamily& family, size_t index) {
  const PrimeModulus& p = family.p;
  switch (family.tag) {
    case FamilyTag::Planes:
      return to_text(p, family.planes[index]);
    case FamilyTag::Lines:
      return to_text(p, family.lines[index]);
    case FamilyTag::ParallelDiffs:
      return to_text(p, family.diffs[index].minuend) + " - " +
             to_text(p, family.diffs[index].subtrahend);
    case FamilyTag::CylinderType:
      return to_text(p, family.cylinder_type[index].member) + " + " +
             std::to_string(p.value() - 1) + " * " + to_text(p, family.cylinder_type[index].anchor);
  }
  throw std::logic_error("unknown family tag");
}

size_t generator_index_from_key(const SpanFamily& family, const std::string& key) {
  for (size_t i = 0; i < family.size(); ++i) {
    if (generator_key(family, i) == key) return i;
  }
  throw JsonError("generator key \"" + key + "\" not found in family " + family_name(family.tag));
}

WeightFp evaluate(const SpanFamily& family, const FpCombination& comb) {
  if (!(family.p == comb.p) || family.tag != comb.family) {
    throw ModulusMismatch("combination does not match the generator family");
  }
  WeightFp w = WeightFp::zero(family.p);
  const int n = family.p.value();
  for (const auto& [index, coeff] : comb.terms) {
    for (const auto& [idx, c] : generator_support(family, index)) {
      w.values[idx] = mod_add(w.values[idx], mod_mul(coeff, c, n), n);
    }
  }
  return w;
}

SpanSolver::SpanSolver(SpanFamily family)
    : family_(std::move(family)),
      rows_(family_.p.cube()),
      gen_count_(family_.size()),
      rank_(0) {
  const int n = family_.p.value();
  echelon_.assign(static_cast<size_t>(rows_) * gen_count_, 0);
  transform_.assign(static_cast<size_t>(rows_) * rows_, 0);
  for (int r = 0; r < rows_; ++r) transform_[static_cast<size_t>(r) * rows_ + r] = 1;

  for (size_t g = 0; g < gen_count_; ++g) {
    for (const auto& [idx, c] : generator_support(family_, g)) {
      echelon_[static_cast<size_t>(idx) * gen_count_ + g] =
          mod_add(echelon_[static_cast<size_t>(idx) * gen_count_ + g], c, n);
    }
  }

  auto row_a = [&](int r) { return echelon_.data() + static_cast<size_t>(r) * gen_count_; };
  auto row_t = [&](int r) { return transform_.data() + static_cast<size_t>(r) * rows_; };

  int next_row = 0;
  for (size_t col = 0; col < gen_count_ && next_row < rows_; ++col) {
    int pivot = -1;
    for (int r = next_row; r < rows_; ++r) {
      if (row_a(r)[col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != next_row) {
      std::swap_ranges(row_a(pivot), row_a(pivot) + gen_count_, row_a(next_row));
      std::swap_ranges(row_t(pivot), row_t(pivot) + rows_, row_t(next_row));
    }
    const int inv = mod_inv(row_a(next_row)[col], n);
    for (size_t c = col; c < gen_count_; ++c)
      row_a(next_row)[c] = mod_mul(row_a(next_row)[c], inv, n);
    for (int c = 0; c < rows_; ++c) row_t(next_row)[c] = mod_mul(row_t(next_row)[c], inv, n);
    for (int r = 0; r < rows_; ++r) {
      if (r == next_row) continue;
      const int f = row_a(r)[col];
      if (f == 0) continue;
      for (size_t c = col; c < gen_count_; ++c)
        row_a(r)[c] = mod_sub(row_a(r)[c], mod_mul(f, row_a(next_row)[c], n), n);
      for (int c = 0; c < rows_; ++c)
        row_t(r)[c] = mod_sub(row_t(r)[c], mod_mul(f, row_t(next_row)[c], n), n);
    }
    pivot_col_.push_back(static_cast<int>(col));
    ++next_row;
  }
  rank_ = next_row;
}

SolveResult SpanSolver::solve(const WeightFp& target) const {
  if (!(target.p == family_.p)) {
    throw ModulusMismatch("solve target modulus differs from the family modulus");
  }
  const int n = family_.p.value();
  // y = T * target; rows past the rank must vanish for consistency.
  std::vector<int32_t> y(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    int acc = 0;
    const int32_t* trow = transform_.data() + static_cast<size_t>(r) * rows_;
    for (int c = 0; c < rows_; ++c) acc = mod_add(acc, mod_mul(trow[c], target.values[c], n), n);
    y[r] = acc;
  }
  for (int r = rank_; r < rows_; ++r) {
    if (y[r] != 0) {
      std::vector<int32_t> witness(transform_.begin() + static_cast<size_t>(r) * rows_,
                                   transform_.begin() + static_cast<size_t>(r + 1) * rows_);
      return NotInSpan{WeightFp(family_.p, std::move(witness))};
    }
  }
  FpCombination comb{family_.p, family_.tag, {}};
  for (int r = 0; r < rank_; ++r) {
    if (y[r] != 0) comb.terms.emplace_back(static_cast<size_t>(pivot_col_[r]), y[r]);
  }
  return comb;
}

std::shared_ptr<const SpanSolver> solver_for(const PrimeModulus& p, FamilyTag tag) {
  static std::mutex mu;
  static std::map<std::pair<int, FamilyTag>, std::shared_ptr<const SpanSolver>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p.value(), tag}];
  if (!slot) slot = std::make_shared<const SpanSolver>(make_family(p, tag));
  return slot;
}

int span_dimension(const PrimeModulus& p, FamilyTag tag) { return solver_for(p, tag)->rank(); }

FpCombination decompose_p_divisible(const WeightFp& w) {
  const DivisibilityReport report = is_p_divisible(w);
  if (!report.divisible) {
    throw PreconditionViolated("decompose_p_divisible: weight is not p-divisible", w.p,
                               *report.witness_plane, report.witness_sum);
  }
  const auto solver = solver_for(w.p, FamilyTag::ParallelDiffs);
  SolveResult result = solver->solve(w);
  if (std::holds_alternative<NotInSpan>(result)) {
    throw std::logic_error("p-divisible weight fell outside the parallel-difference span");
  }
  return std::get<FpCombination>(std::move(result));
}

WeightFp evaluate(const ParallelClassCombination& comb) {
  WeightFp w = WeightFp::zero(comb.p);
  const int n = comb.p.value();
  for (const auto& [line, coeff] : comb.terms) {
    for (const Point& pt : line_points(comb.p, line)) {
      const int idx = point_index(comb.p, pt);
      w.values[idx] = mod_add(w.values[idx], mod_reduce(coeff, n), n);
    }
  }
  return w;
}

FpCombination cylinder_type_to_diffs(const ParallelClassCombination& comb) {
  const PrimeModulus& p = comb.p;
  const int n = p.value();
  int coeff_sum = 0;
  for (const auto& [line, coeff] : comb.terms) {
    if (line.dir != comb.dir) {
      throw InvalidCylinderSpec("cylinder-type combination mixes directions");
    }
    coeff_sum = mod_add(coeff_sum, mod_reduce(coeff, n), n);
  }
  if (coeff_sum != 0) {
    throw NotRepresentable("anchor rewrite needs the coefficients to sum to 0 mod p, got " +
                           std::to_string(coeff_sum));
  }

  const std::vector<Line> cls = lines_with_direction(p, comb.dir);
  const Line anchor = cls[0];
  auto diff_index_of = [&](const Line& l) -> size_t {
    // Generator order: directions in enumeration order, then non-anchor
    // lines of the class in base-point order.
    size_t offset = 0;
    for (const Direction& d : enumerate_directions(p)) {
      if (d == comb.dir) break;
      offset += p.square() - 1;
    }
    for (size_t i = 1; i < cls.size(); ++i) {
      if (cls[i] == l) return offset + (i - 1);
    }
    throw std::logic_error("line missing from its parallel class");
  };

  FpCombination out{p, FamilyTag::ParallelDiffs, {}};
  std::map<size_t, int32_t> acc;
  for (const auto& [line, coeff] : comb.terms) {
    const int c = mod_reduce(coeff, n);
    if (c == 0 || line == anchor) continue;  // anchor difference is zero
    const size_t idx = diff_index_of(line);
    acc[idx] = mod_add(acc.count(idx) ? acc[idx] : 0, c, n);
  }
  for (const auto& [idx, c] : acc) {
    if (c != 0) out.terms.emplace_back(idx, c);
  }
  return out;
}

}  // namespace cylinderlab
