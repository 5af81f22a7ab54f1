#include "cylinderlab/poly.hpp"

#include <stdexcept>
#include <string>

namespace cylinderlab {

ReducedPoly::ReducedPoly(PrimeModulus modulus, std::vector<int32_t> cs)
    : p(modulus), coeffs(std::move(cs)) {
  if (static_cast<int>(coeffs.size()) != p.cube()) {
    throw Error("ReducedPoly: expected " + std::to_string(p.cube()) + " coefficients, got " +
                std::to_string(coeffs.size()));
  }
  for (int32_t c : coeffs) {
    if (c < 0 || c >= p.value()) throw Error("ReducedPoly: coefficient out of [0, p)");
  }
}

ReducedPoly ReducedPoly::zero(const PrimeModulus& modulus) {
  return ReducedPoly(modulus, std::vector<int32_t>(modulus.cube(), 0));
}

namespace {

// Vandermonde matrix V[a][e] = a^e with 0^0 = 1; row-major p x p.
std::vector<int32_t> vandermonde(const PrimeModulus& p) {
  const int n = p.value();
  std::vector<int32_t> v(n * n);
  for (int a = 0; a < n; ++a)
    for (int e = 0; e < n; ++e) v[a * n + e] = mod_pow(a, e, n);
  return v;
}

std::vector<int32_t> invert_matrix(std::vector<int32_t> m, const PrimeModulus& p) {
  const int n = p.value();
  std::vector<int32_t> inv(n * n, 0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m[r * n + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("vandermonde matrix is singular");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(m[pivot * n + c], m[col * n + c]);
        std::swap(inv[pivot * n + c], inv[col * n + c]);
      }
    }
    const int s = mod_inv(m[col * n + col], n);
    for (int c = 0; c < n; ++c) {
      m[col * n + c] = mod_mul(m[col * n + c], s, n);
      inv[col * n + c] = mod_mul(inv[col * n + c], s, n);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r * n + col] == 0) continue;
      const int f = m[r * n + col];
      for (int c = 0; c < n; ++c) {
        m[r * n + c] = mod_sub(m[r * n + c], mod_mul(f, m[col * n + c], n), n);
        inv[r * n + c] = mod_sub(inv[r * n + c], mod_mul(f, inv[col * n + c], n), n);
      }
    }
  }
  return inv;
}

// Applies the p x p matrix M along one axis of the p x p x p tensor.
// axis 0 transforms the x index, 1 the y index, 2 the z index.
std::vector<int32_t> apply_axis(const std::vector<int32_t>& data, const std::vector<int32_t>& m,
                                const PrimeModulus& p, int axis) {
  const int n = p.value();
  const int strides[3] = {n * n, n, 1};
  const int stride = strides[axis];
  std::vector<int32_t> out(data.size(), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // Base offset of the 1-D fiber varying along `axis`.
      int base = 0;
      int rem[2] = {a, b};
      int t = 0;
      for (int ax = 0; ax < 3; ++ax) {
        if (ax == axis) continue;
        base += rem[t++] * strides[ax];
      }
      for (int row = 0; row < n; ++row) {
        int acc = 0;
        for (int col = 0; col < n; ++col) {
          acc = mod_add(acc, mod_mul(m[row * n + col], data[base + col * stride], n), n);
        }
        out[base + row * stride] = acc;
      }
    }
  return out;
}

}  // namespace

ReducedPoly poly_from_weight(const WeightFp& w) {
  const std::vector<int32_t> vinv = invert_matrix(vandermonde(w.p), w.p);
  std::vector<int32_t> data = w.values;
  for (int axis = 0; axis < 3; ++axis) data = apply_axis(data, vinv, w.p, axis);
  return ReducedPoly(w.p, std::move(data));
}

WeightFp weight_from_poly(const ReducedPoly& q) {
  const std::vector<int32_t> v = vandermonde(q.p);
  std::vector<int32_t> data = q.coeffs;
  for (int axis = 0; axis < 3; ++axis) data = apply_axis(data, v, q.p, axis);
  return WeightFp(q.p, std::move(data));
}

int total_degree(const ReducedPoly& q) {
  const int n = q.p.value();
  int deg = kZeroPolyDegree;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (q.coeff(i, j, k) != 0 && i + j + k > deg) deg = i + j + k;
      }
  return deg;
}

WeightFp evaluate(const PlaneCombination& comb) {
  const int n = comb.p.value();
  std::vector<int32_t> vals(comb.p.cube(), mod_reduce(comb.constant_adjust, n));
  for (const auto& [h, coeff] : comb.terms) {
    for (const Point& pt : plane_points(comb.p, h)) {
      const int idx = point_index(comb.p, pt);
      vals[idx] = mod_add(vals[idx], coeff, n);
    }
  }
  return WeightFp(comb.p, std::move(vals));
}

namespace {

// Multinomial coefficient (p-1)! / (i! j! k! (p-1-i-j-k)!) mod p.
int multinomial_mod(const PrimeModulus& p, int i, int j, int k) {
  const int n = p.value();
  std::vector<int> fact(n, 1);
  for (int t = 1; t < n; ++t) fact[t] = mod_mul(fact[t - 1], t, n);
  const int rest = (n - 1) - i - j - k;
  int denom = mod_mul(mod_mul(fact[i], fact[j], n), mod_mul(fact[k], fact[rest], n), n);
  return mod_mul(fact[n - 1], mod_inv(denom, n), n);
}

}  // namespace

PlaneCombination monomial_via_planes(const PrimeModulus& p, int i, int j, int k) {
  const int n = p.value();
  if (i < 0 || j < 0 || k < 0 || i + j + k > n - 1) {
    throw DegreeTooHigh("monomial_via_planes: requires i+j+k <= p-1");
  }

  PlaneCombination comb{p, {}, 0, 1};

  if (i == 0 && j == 0 && k == 0) {
    // The p parallel planes x + d = 0 partition the space, so their
    // indicator sum is the constant 1.
    for (int d = 0; d < n; ++d) comb.terms.emplace_back(Plane{1, 0, 0, d}, 1);
    return comb;
  }

  // Weighted plane sum with weights a^s b^t c^u at fixed d = 1. Every term
  // of the expansion cancels except the requested monomial, scaled by a
  // multinomial coefficient prime to p.
  const int s = n - 1 - i;
  const int t = n - 1 - j;
  const int u = n - 1 - k;
  const int factor = multinomial_mod(p, i, j, k);
  const int scale = mod_inv(factor, n);
  comb.multinomial_factor = factor;

  std::vector<int32_t> acc(p.cube() + p.square() + p.value(), 0);
  const std::vector<Plane> planes = enumerate_planes(p);
  // Map canonical planes to their slot for coefficient accumulation.
  auto slot_of = [&](const Plane& h) {
    for (size_t idx = 0; idx < planes.size(); ++idx) {
      if (planes[idx] == h) return idx;
    }
    throw std::logic_error("canonical plane missing from enumeration");
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        const int weight =
            mod_mul(mod_mul(mod_pow(a, s, n), mod_pow(b, t, n), n), mod_pow(c, u, n), n);
        if (weight == 0) continue;
        const size_t slot = slot_of(canonical_plane(p, a, b, c, 1));
        acc[slot] = mod_add(acc[slot], mod_mul(weight, scale, n), n);
      }
  for (size_t idx = 0; idx < planes.size(); ++idx) {
    if (acc[idx] != 0) comb.terms.emplace_back(planes[idx], acc[idx]);
  }
  return comb;
}

bool in_plane_span(const WeightFp& w) {
  return total_degree(poly_from_weight(w)) <= w.p.value() - 1;
}

bool in_line_span(const WeightFp& w) {
  return total_degree(poly_from_weight(w)) <= 2 * w.p.value() - 2;
}

bool in_plane_span_orthogonal(const WeightFp& w) {
  const bool by_degree = total_degree(poly_from_weight(w)) <= 2 * w.p.value() - 3;

  bool by_scan = true;
  for (const Plane& h : enumerate_planes(w.p)) {
    if (bilinear(w, reduce_mod_p(indicator(w.p, h))) != 0) {
      by_scan = false;
      break;
    }
  }
  if (by_degree != by_scan) {
    throw std::logic_error("degree bound and orthogonality scan disagree");
  }
  return by_degree;
}

int monomial_count_up_to_degree(const PrimeModulus& p, int bound) {
  const int n = p.value();
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i + j + k <= bound) ++count;
      }
  return count;
}

}  // namespace cylinderlab
