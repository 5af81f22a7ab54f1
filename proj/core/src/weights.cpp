#include "cylinderlab/weights.hpp"

#include <string>

namespace cylinderlab {

WeightFp::WeightFp(PrimeModulus modulus, std::vector<int32_t> vals)
    : p(modulus), values(std::move(vals)) {
  if (static_cast<int>(values.size()) != p.cube()) {
    throw Error("WeightFp: expected " + std::to_string(p.cube()) + " values, got " +
                std::to_string(values.size()));
  }
  for (int32_t v : values) {
    if (v < 0 || v >= p.value()) throw Error("WeightFp: entry out of [0, p)");
  }
}

WeightFp WeightFp::zero(const PrimeModulus& modulus) {
  return WeightFp(modulus, std::vector<int32_t>(modulus.cube(), 0));
}

WeightZ::WeightZ(PrimeModulus modulus, std::vector<long long> vals)
    : p(modulus), values(std::move(vals)) {
  if (static_cast<int>(values.size()) != p.cube()) {
    throw Error("WeightZ: expected " + std::to_string(p.cube()) + " values, got " +
                std::to_string(values.size()));
  }
}

WeightZ WeightZ::zero(const PrimeModulus& modulus) {
  return WeightZ(modulus, std::vector<long long>(modulus.cube(), 0));
}

namespace {

void require_same_modulus(const PrimeModulus& a, const PrimeModulus& b) {
  if (!(a == b)) {
    throw ModulusMismatch("weights have moduli " + std::to_string(a.value()) + " and " +
                          std::to_string(b.value()));
  }
}

}  // namespace

WeightFp operator+(const WeightFp& f, const WeightFp& g) {
  require_same_modulus(f.p, g.p);
  std::vector<int32_t> out(f.values.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = mod_add(f.values[i], g.values[i], f.p.value());
  return WeightFp(f.p, std::move(out));
}

WeightFp operator-(const WeightFp& f, const WeightFp& g) {
  require_same_modulus(f.p, g.p);
  std::vector<int32_t> out(f.values.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = mod_sub(f.values[i], g.values[i], f.p.value());
  return WeightFp(f.p, std::move(out));
}

WeightFp operator*(int32_t c, const WeightFp& f) {
  const int cc = mod_reduce(c, f.p.value());
  std::vector<int32_t> out(f.values.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = mod_mul(cc, f.values[i], f.p.value());
  return WeightFp(f.p, std::move(out));
}

WeightZ operator+(const WeightZ& f, const WeightZ& g) {
  require_same_modulus(f.p, g.p);
  std::vector<long long> out(f.values.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = f.values[i] + g.values[i];
  return WeightZ(f.p, std::move(out));
}

WeightZ operator-(const WeightZ& f, const WeightZ& g) {
  require_same_modulus(f.p, g.p);
  std::vector<long long> out(f.values.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = f.values[i] - g.values[i];
  return WeightZ(f.p, std::move(out));
}

WeightZ operator*(long long c, const WeightZ& f) {
  std::vector<long long> out(f.values.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = c * f.values[i];
  return WeightZ(f.p, std::move(out));
}

WeightFp reduce_mod_p(const WeightZ& w) {
  std::vector<int32_t> out(w.values.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = mod_reduce(w.values[i], w.p.value());
  return WeightFp(w.p, std::move(out));
}

WeightZ to_weight_z(const WeightFp& w) {
  std::vector<long long> out(w.values.begin(), w.values.end());
  return WeightZ(w.p, std::move(out));
}

int32_t plane_sum(const WeightFp& w, const Plane& h) {
  int acc = 0;
  for (int i = 0; i < w.p.cube(); ++i) {
    if (plane_contains(w.p, h, point_at(w.p, i))) acc = mod_add(acc, w.values[i], w.p.value());
  }
  return acc;
}

long long plane_sum(const WeightZ& w, const Plane& h) {
  long long acc = 0;
  for (int i = 0; i < w.p.cube(); ++i) {
    if (plane_contains(w.p, h, point_at(w.p, i))) acc += w.values[i];
  }
  return acc;
}

namespace {

template <typename Weight>
DivisibilityReport divisibility_scan(const Weight& w) {
  for (const Plane& h : enumerate_planes(w.p)) {
    const long long s = plane_sum(w, h);
    if (mod_reduce(s, w.p.value()) != 0) {
      return DivisibilityReport{false, h, s};
    }
  }
  return DivisibilityReport{true, std::nullopt, 0};
}

}  // namespace

DivisibilityReport is_p_divisible(const WeightFp& w) { return divisibility_scan(w); }
DivisibilityReport is_p_divisible(const WeightZ& w) { return divisibility_scan(w); }

int32_t bilinear(const WeightFp& f, const WeightFp& g) {
  require_same_modulus(f.p, g.p);
  int acc = 0;
  for (size_t i = 0; i < f.values.size(); ++i) {
    acc = mod_add(acc, mod_mul(f.values[i], g.values[i], f.p.value()), f.p.value());
  }
  return acc;
}

int32_t total_weight(const WeightFp& w) {
  int acc = 0;
  for (int32_t v : w.values) acc = mod_add(acc, v, w.p.value());
  return acc;
}

long long total_weight(const WeightZ& w) {
  long long acc = 0;
  for (long long v : w.values) acc += v;
  return acc;
}

bool is_multiset(const WeightZ& w) {
  for (long long v : w.values) {
    if (v < 0) return false;
  }
  return true;
}

bool is_zero_one(const WeightZ& w) {
  for (long long v : w.values) {
    if (v != 0 && v != 1) return false;
  }
  return true;
}

long long support_size(const WeightZ& w) {
  long long n = 0;
  for (long long v : w.values) {
    if (v != 0) ++n;
  }
  return n;
}

WeightZ indicator(const PrimeModulus& p, const Point& pt) {
  WeightZ w = WeightZ::zero(p);
  w.values[point_index(p, pt)] = 1;
  return w;
}

WeightZ indicator(const PrimeModulus& p, const Line& l) {
  WeightZ w = WeightZ::zero(p);
  for (const Point& pt : line_points(p, l)) w.values[point_index(p, pt)] = 1;
  return w;
}

WeightZ indicator(const PrimeModulus& p, const Plane& h) {
  WeightZ w = WeightZ::zero(p);
  for (const Point& pt : plane_points(p, h)) w.values[point_index(p, pt)] = 1;
  return w;
}

WeightZ indicator(const PrimeModulus& p, const CylinderSpec& spec) {
  if (static_cast<int>(spec.fibers.size()) != p.value()) {
    throw InvalidCylinderSpec("cylinder spec needs exactly " + std::to_string(p.value()) +
                              " fibers, got " + std::to_string(spec.fibers.size()));
  }
  WeightZ w = WeightZ::zero(p);
  for (const Line& l : spec.fibers) {
    if (l.dir != spec.dir) {
      throw InvalidCylinderSpec("cylinder spec fiber does not share the spec direction");
    }
    for (const Point& pt : line_points(p, l)) w.values[point_index(p, pt)] += 1;
  }
  return w;
}

}  // namespace cylinderlab
