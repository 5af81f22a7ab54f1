#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cylinderlab/errors.hpp"

namespace cylinderlab {

bool is_prime(int n);

/// Prime modulus p of the ambient space F_p^3. Construction runs a
/// deterministic trial-division primality check.
class PrimeModulus {
 public:
  explicit PrimeModulus(int p);

  int value() const { return p_; }
  int square() const { return p_ * p_; }
  int cube() const { return p_ * p_ * p_; }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  int p_;
};

// Modular helpers. Operands are residues in [0, p) unless noted.
int mod_reduce(long long v, int p);  // any integer -> [0, p)
int mod_add(int a, int b, int p);
int mod_sub(int a, int b, int p);
int mod_mul(int a, int b, int p);
int mod_pow(int a, long long e, int p);  // convention 0^0 = 1
int mod_inv(int a, int p);

struct Point {
  int x = 0;
  int y = 0;
  int z = 0;
  auto operator<=>(const Point&) const = default;
};

/// Flat index of a point: x*p^2 + y*p + z. Fixes the wire format and the
/// column order of every generator matrix.
int point_index(const PrimeModulus& p, const Point& pt);
Point point_at(const PrimeModulus& p, int index);
std::vector<Point> all_points(const PrimeModulus& p);

/// A point at infinity: a nonzero vector scaled so its first nonzero
/// coordinate is 1. There are p^2 + p + 1 of them.
struct Direction {
  std::array<int, 3> v{0, 0, 0};
  auto operator<=>(const Direction&) const = default;
};

Direction canonical_direction(const PrimeModulus& p, std::array<int, 3> v);
std::vector<Direction> enumerate_directions(const PrimeModulus& p);

/// Affine line, keyed by (direction, lexicographically least point on it).
struct Line {
  Direction dir;
  Point base;
  auto operator<=>(const Line&) const = default;
};

/// Affine plane a*x + b*y + c*z + d = 0 with the first nonzero of (a,b,c)
/// normalized to 1.
struct Plane {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  auto operator<=>(const Plane&) const = default;
};

std::vector<Point> line_points(const PrimeModulus& p, const Line& l);
bool line_contains(const PrimeModulus& p, const Line& l, const Point& pt);
Line line_from(const PrimeModulus& p, const Point& any_point, const Direction& d);
Line line_through(const PrimeModulus& p, const Point& a, const Point& b);
bool are_parallel(const Line& l1, const Line& l2);
std::vector<Line> lines_with_direction(const PrimeModulus& p, const Direction& d);
std::vector<Line> enumerate_lines(const PrimeModulus& p);

Plane canonical_plane(const PrimeModulus& p, int a, int b, int c, int d);
std::vector<Point> plane_points(const PrimeModulus& p, const Plane& h);
bool plane_contains(const PrimeModulus& p, const Plane& h, const Point& pt);
bool plane_contains_direction(const PrimeModulus& p, const Plane& h, const Direction& d);
std::vector<Plane> enumerate_planes(const PrimeModulus& p);

// Text form: "L p dx dy dz bx by bz" and "P p a b c d".
std::string to_text(const PrimeModulus& p, const Line& l);
std::string to_text(const PrimeModulus& p, const Plane& h);
Line line_from_text(const std::string& text, const PrimeModulus& expect_p);
Plane plane_from_text(const std::string& text, const PrimeModulus& expect_p);

}  // namespace cylinderlab
