#include "cylinderlab/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace cylinderlab {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(int p) : p_(p) {
  if (!is_prime(p)) {
    throw Error("PrimeModulus: " + std::to_string(p) + " is not prime");
  }
}

int mod_reduce(long long v, int p) {
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

int mod_add(int a, int b, int p) {
  int s = a + b;
  if (s >= p) s -= p;
  return s;
}

int mod_sub(int a, int b, int p) {
  int s = a - b;
  if (s < 0) s += p;
  return s;
}

int mod_mul(int a, int b, int p) { return static_cast<int>((static_cast<long long>(a) * b) % p); }

int mod_pow(int a, long long e, int p) {
  int r = 1 % p;
  int base = mod_reduce(a, p);
  while (e > 0) {
    if (e & 1) r = mod_mul(r, base, p);
    base = mod_mul(base, base, p);
    e >>= 1;
  }
  return r;
}

int mod_inv(int a, int p) {
  a = mod_reduce(a, p);
  if (a == 0) throw Error("mod_inv: zero is not invertible");
  return mod_pow(a, p - 2, p);
}

int point_index(const PrimeModulus& p, const Point& pt) {
  return pt.x * p.square() + pt.y * p.value() + pt.z;
}

Point point_at(const PrimeModulus& p, int index) {
  const int n = p.value();
  return Point{index / (n * n), (index / n) % n, index % n};
}

std::vector<Point> all_points(const PrimeModulus& p) {
  std::vector<Point> pts;
  pts.reserve(p.cube());
  for (int i = 0; i < p.cube(); ++i) pts.push_back(point_at(p, i));
  return pts;
}

Direction canonical_direction(const PrimeModulus& p, std::array<int, 3> v) {
  for (int& c : v) c = mod_reduce(c, p.value());
  int lead = -1;
  for (int i = 0; i < 3; ++i) {
    if (v[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead < 0) throw InvalidDirection("canonical_direction: zero vector");
  const int inv = mod_inv(v[lead], p.value());
  for (int& c : v) c = mod_mul(c, inv, p.value());
  return Direction{v};
}

std::vector<Direction> enumerate_directions(const PrimeModulus& p) {
  const int n = p.value();
  std::vector<Direction> out;
  out.reserve(n * n + n + 1);
  // Canonical representatives in lexicographic order.
  out.push_back(Direction{{0, 0, 1}});
  for (int c = 0; c < n; ++c) out.push_back(Direction{{0, 1, c}});
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) out.push_back(Direction{{1, b, c}});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> line_points(const PrimeModulus& p, const Line& l) {
  const int n = p.value();
  std::vector<Point> pts;
  pts.reserve(n);
  Point cur = l.base;
  for (int t = 0; t < n; ++t) {
    pts.push_back(cur);
    cur = Point{mod_add(cur.x, l.dir.v[0], n), mod_add(cur.y, l.dir.v[1], n),
                mod_add(cur.z, l.dir.v[2], n)};
  }
  return pts;
}

bool line_contains(const PrimeModulus& p, const Line& l, const Point& pt) {
  const int n = p.value();
  Point cur = l.base;
  for (int t = 0; t < n; ++t) {
    if (cur == pt) return true;
    cur = Point{mod_add(cur.x, l.dir.v[0], n), mod_add(cur.y, l.dir.v[1], n),
                mod_add(cur.z, l.dir.v[2], n)};
  }
  return false;
}

Line line_from(const PrimeModulus& p, const Point& any_point, const Direction& d) {
  const int n = p.value();
  Point best = any_point;
  Point cur = any_point;
  for (int t = 0; t < n; ++t) {
    if (cur < best) best = cur;
    cur = Point{mod_add(cur.x, d.v[0], n), mod_add(cur.y, d.v[1], n), mod_add(cur.z, d.v[2], n)};
  }
  return Line{d, best};
}

Line line_through(const PrimeModulus& p, const Point& a, const Point& b) {
  if (a == b) throw DegenerateLine("line_through: coincident points");
  const int n = p.value();
  const Direction d = canonical_direction(
      p, {mod_sub(b.x, a.x, n), mod_sub(b.y, a.y, n), mod_sub(b.z, a.z, n)});
  return line_from(p, a, d);
}

bool are_parallel(const Line& l1, const Line& l2) { return l1.dir == l2.dir; }

std::vector<Line> lines_with_direction(const PrimeModulus& p, const Direction& d) {
  std::vector<bool> seen(p.cube(), false);
  std::vector<Line> out;
  out.reserve(p.square());
  for (int i = 0; i < p.cube(); ++i) {
    if (seen[i]) continue;
    // The scan is lexicographic, so the first unseen point is the line's base.
    const Line l{d, point_at(p, i)};
    for (const Point& pt : line_points(p, l)) seen[point_index(p, pt)] = true;
    out.push_back(l);
  }
  return out;
}

std::vector<Line> enumerate_lines(const PrimeModulus& p) {
  std::vector<Line> out;
  out.reserve(p.square() * (p.square() + p.value() + 1));
  for (const Direction& d : enumerate_directions(p)) {
    for (const Line& l : lines_with_direction(p, d)) out.push_back(l);
  }
  return out;
}

Plane canonical_plane(const PrimeModulus& p, int a, int b, int c, int d) {
  const int n = p.value();
  a = mod_reduce(a, n);
  b = mod_reduce(b, n);
  c = mod_reduce(c, n);
  d = mod_reduce(d, n);
  int lead = a != 0 ? a : (b != 0 ? b : c);
  if (lead == 0) throw Error("canonical_plane: zero normal vector");
  const int inv = mod_inv(lead, n);
  return Plane{mod_mul(a, inv, n), mod_mul(b, inv, n), mod_mul(c, inv, n), mod_mul(d, inv, n)};
}

bool plane_contains(const PrimeModulus& p, const Plane& h, const Point& pt) {
  const int n = p.value();
  long long v = static_cast<long long>(h.a) * pt.x + static_cast<long long>(h.b) * pt.y +
                static_cast<long long>(h.c) * pt.z + h.d;
  return mod_reduce(v, n) == 0;
}

bool plane_contains_direction(const PrimeModulus& p, const Plane& h, const Direction& d) {
  const int n = p.value();
  long long v = static_cast<long long>(h.a) * d.v[0] + static_cast<long long>(h.b) * d.v[1] +
                static_cast<long long>(h.c) * d.v[2];
  return mod_reduce(v, n) == 0;
}

std::vector<Point> plane_points(const PrimeModulus& p, const Plane& h) {
  std::vector<Point> pts;
  pts.reserve(p.square());
  for (int i = 0; i < p.cube(); ++i) {
    const Point pt = point_at(p, i);
    if (plane_contains(p, h, pt)) pts.push_back(pt);
  }
  return pts;
}

std::vector<Plane> enumerate_planes(const PrimeModulus& p) {
  std::vector<Plane> out;
  out.reserve(p.cube() + p.square() + p.value());
  for (const Direction& normal : enumerate_directions(p)) {
    for (int d = 0; d < p.value(); ++d) {
      out.push_back(Plane{normal.v[0], normal.v[1], normal.v[2], d});
    }
  }
  return out;
}

std::string to_text(const PrimeModulus& p, const Line& l) {
  std::ostringstream os;
  os << "L " << p.value() << ' ' << l.dir.v[0] << ' ' << l.dir.v[1] << ' ' << l.dir.v[2] << ' '
     << l.base.x << ' ' << l.base.y << ' ' << l.base.z;
  return os.str();
}

std::string to_text(const PrimeModulus& p, const Plane& h) {
  std::ostringstream os;
  os << "P " << p.value() << ' ' << h.a << ' ' << h.b << ' ' << h.c << ' ' << h.d;
  return os.str();
}

namespace {

std::vector<int> parse_fields(const std::string& text, char tag, size_t count,
                              const PrimeModulus& expect_p) {
  std::istringstream is(text);
  std::string head;
  is >> head;
  if (head.size() != 1 || head[0] != tag) {
    throw JsonError(std::string("expected generator key starting with '") + tag + "', got \"" +
                    text + "\"");
  }
  std::vector<int> fields;
  int v = 0;
  while (is >> v) fields.push_back(v);
  if (fields.size() != count + 1) {
    throw JsonError("generator key \"" + text + "\" must have " + std::to_string(count + 1) +
                    " numeric fields");
  }
  if (fields[0] != expect_p.value()) {
    throw JsonError("generator key \"" + text + "\" carries modulus " + std::to_string(fields[0]) +
                    ", expected " + std::to_string(expect_p.value()));
  }
  for (size_t i = 1; i < fields.size(); ++i) {
    if (fields[i] < 0 || fields[i] >= expect_p.value()) {
      throw JsonError("generator key \"" + text + "\" has out-of-range residue " +
                      std::to_string(fields[i]));
    }
  }
  return fields;
}

}  // namespace

Line line_from_text(const std::string& text, const PrimeModulus& expect_p) {
  const std::vector<int> f = parse_fields(text, 'L', 6, expect_p);
  const Direction d = canonical_direction(expect_p, {f[1], f[2], f[3]});
  if (d.v != std::array<int, 3>{f[1], f[2], f[3]}) {
    throw JsonError("line key \"" + text + "\" has a non-canonical direction");
  }
  const Line l = line_from(expect_p, Point{f[4], f[5], f[6]}, d);
  if (l.base != Point{f[4], f[5], f[6]}) {
    throw JsonError("line key \"" + text + "\" base point is not the least point of the line");
  }
  return l;
}

Plane plane_from_text(const std::string& text, const PrimeModulus& expect_p) {
  const std::vector<int> f = parse_fields(text, 'P', 4, expect_p);
  if (f[1] == 0 && f[2] == 0 && f[3] == 0) {
    throw JsonError("plane key \"" + text + "\" has a zero normal vector");
  }
  const Plane h = canonical_plane(expect_p, f[1], f[2], f[3], f[4]);
  if (h != Plane{f[1], f[2], f[3], f[4]}) {
    throw JsonError("plane key \"" + text + "\" is not in canonical form");
  }
  return h;
}

}  // namespace cylinderlab
