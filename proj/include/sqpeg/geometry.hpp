#pragma once

#include <cmath>

namespace sqpeg {

struct Point {
  double x{0};
  double y{0};

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

// Rotation by +pi/2 (counter-clockwise) about `center`.
constexpr Point rotate_quarter(Point p, Point center) {
  const Point d = p - center;
  return {center.x - d.y, center.y + d.x};
}

// Opposite corner of the square corner (o, p, r): p + (r - o).
constexpr Point opposite_corner(Point o, Point p, Point r) { return p + (r - o); }

// Distance from q to the closed segment [a, b].
inline double segment_distance(Point q, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  double s = len2 > 0 ? dot(q - a, ab) / len2 : 0.0;
  s = s < 0 ? 0 : (s > 1 ? 1 : s);
  return distance(q, a + s * ab);
}

}  // namespace sqpeg
