#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cylinderlab/geometry.hpp"

namespace cylinderlab {

/// F_p-valued weight function on the p^3 points, stored densely in
/// lexicographic point order. Entries live in [0, p).
struct WeightFp {
  PrimeModulus p;
  std::vector<int32_t> values;

  WeightFp(PrimeModulus modulus, std::vector<int32_t> vals);
  static WeightFp zero(const PrimeModulus& modulus);

  int32_t at(int index) const { return values[index]; }
  int32_t at(const Point& pt) const { return values[point_index(p, pt)]; }

  friend bool operator==(const WeightFp&, const WeightFp&) = default;
};

/// Integer-valued weight function on the p^3 points. Negative entries are
/// permitted; a multiset additionally has every entry >= 0.
struct WeightZ {
  PrimeModulus p;
  std::vector<long long> values;

  WeightZ(PrimeModulus modulus, std::vector<long long> vals);
  static WeightZ zero(const PrimeModulus& modulus);

  long long at(int index) const { return values[index]; }
  long long at(const Point& pt) const { return values[point_index(p, pt)]; }

  friend bool operator==(const WeightZ&, const WeightZ&) = default;
};

struct DivisibilityReport {
  bool divisible = false;
  std::optional<Plane> witness_plane;  // first failing plane, enumeration order
  long long witness_sum = 0;           // its sum (residue for the F_p overload)
};

/// Thrown when an operation requires a p-divisible (or otherwise constrained)
/// input and the check fails. Carries the failing plane when one exists.
class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& what) : Error(what) {}
  PreconditionViolated(const std::string& what, const PrimeModulus& p, Plane witness,
                       long long sum)
      : Error(what), witness_plane(witness), witness_sum(sum), modulus(p.value()) {}

  std::optional<Plane> witness_plane;
  long long witness_sum = 0;
  int modulus = 0;  // modulus of the witness plane, 0 when absent
};

WeightFp operator+(const WeightFp& f, const WeightFp& g);
WeightFp operator-(const WeightFp& f, const WeightFp& g);
WeightFp operator*(int32_t c, const WeightFp& f);
WeightZ operator+(const WeightZ& f, const WeightZ& g);
WeightZ operator-(const WeightZ& f, const WeightZ& g);
WeightZ operator*(long long c, const WeightZ& f);

WeightFp reduce_mod_p(const WeightZ& w);
WeightZ to_weight_z(const WeightFp& w);

int32_t plane_sum(const WeightFp& w, const Plane& h);
long long plane_sum(const WeightZ& w, const Plane& h);

DivisibilityReport is_p_divisible(const WeightFp& w);
DivisibilityReport is_p_divisible(const WeightZ& w);

/// Bilinear form <f,g> = sum_x f(x) g(x) mod p.
int32_t bilinear(const WeightFp& f, const WeightFp& g);

int32_t total_weight(const WeightFp& w);  // total residue
long long total_weight(const WeightZ& w);

bool is_multiset(const WeightZ& w);  // all entries >= 0
bool is_zero_one(const WeightZ& w);
long long support_size(const WeightZ& w);

WeightZ indicator(const PrimeModulus& p, const Point& pt);
WeightZ indicator(const PrimeModulus& p, const Line& l);
WeightZ indicator(const PrimeModulus& p, const Plane& h);

/// A direction plus exactly p fibers (lines of that direction, repeats
/// allowed). Its indicator is the sum of the p line indicators.
struct CylinderSpec {
  Direction dir;
  std::vector<Line> fibers;
};

WeightZ indicator(const PrimeModulus& p, const CylinderSpec& spec);

}  // namespace cylinderlab
