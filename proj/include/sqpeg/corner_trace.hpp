#pragma once

#include <cstddef>
#include <vector>

#include "sqpeg/curve.hpp"
#include "sqpeg/geometry.hpp"

namespace sqpeg {

inline constexpr double kDefaultTraceTolerance = 1e-12;
inline constexpr std::size_t kDefaultTraceGrid = 4097;

// Square O P Q R built on the lower graph at abscissa t: O = (t, f(t)) and
// P = (u, f(u)) lie on the lower graph, R = rot(P) about O lies on the upper
// graph and Q = P + R - O.
struct CornerFrame {
  double t{0};
  double u{0};
  double a{0};  // u - t
  double b{0};  // f(u) - f(t)
  Point o, p, q, r;
  // Some vertex sits on the constant extension outside [T0, T1].
  bool uses_extension{false};

  bool degenerate() const { return a == 0 && b == 0; }
  double sidelength() const;
};

// phi_t(u) = g(t + f(t) - f(u)) - f(t) - u + t; non-increasing in u.
double rotation_residual(const LipschitzPair& pair, double t, double u);

// Leftmost root u >= t of phi_t, located by bisection to within tol.
double solve_u(const LipschitzPair& pair, double t, double tol = kDefaultTraceTolerance);

CornerFrame frame_at(const LipschitzPair& pair, double t, double tol = kDefaultTraceTolerance);

// Families 2-4 are family 1 of a conjugated pair: 2 reflects the abscissa,
// 3 reflects both axes and 4 reflects the ordinate (so f, g -> -g, -f).
LipschitzPair family_pair(const LipschitzPair& pair, int family);

// Maps a point from family coordinates back to the original plane. Involutive.
Point to_original(int family, Point p);

struct Trace {
  int family{1};
  double tol{kDefaultTraceTolerance};
  std::vector<double> grid;
  // Frames in family coordinates; use to_original to place them on the curve.
  std::vector<CornerFrame> frames;
};

// Frames on a uniform grid of n points over [T0 - M, T1 + M] of the family
// pair.
Trace trace(const LipschitzPair& pair, std::size_t n, int family = 1,
            double tol = kDefaultTraceTolerance);

}  // namespace sqpeg
