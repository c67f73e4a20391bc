#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "sqpeg/corner_trace.hpp"
#include "sqpeg/curve.hpp"
#include "sqpeg/geometry.hpp"

namespace sqpeg {

// Trapezoid sum of y dx along a polyline; exact for polylines.
double line_integral_ydx(std::span<const Point> points);

// Sampled data (x, y, a, b) on a shared parameter grid. The four derived
// curves traverse squares:
//   g1 = (x, y), g2 = (x + a, y + b), g3 = (x + a - b, y + a + b), g4 = (x - b, y + a).
struct QuadrupleTrace {
  std::vector<double> s;
  std::vector<double> x, y, a, b;

  // Throws invalid_input on length mismatch, fewer than 2 samples or a
  // non-increasing grid.
  void validate() const;
  std::array<std::vector<Point>, 4> curves() const;
};

// Samples the family-1 frames of pair on `cells` equal steps of [from, to].
QuadrupleTrace extract_quadruple(const LipschitzPair& pair, double from, double to,
                                 std::size_t cells, double tol = kDefaultTraceTolerance);

// |I1 - I2 + I3 - I4 - [(a^2 - b^2)/2]_{s0}^{s1}| with all four line integrals
// taken by the trapezoid rule on the sampled curves.
double conservation_residual(const QuadrupleTrace& q);

// Same identity for a quadruple traced on pair: g1, g2 lie on the lower graph
// and g4 on the upper one, so those integrals are taken in closed form and
// only g3 (the opposite-corner curve) is integrated by the trapezoid rule.
double conservation_residual(const QuadrupleTrace& q, const LipschitzPair& pair);

// Residual of the graph form of the identity between parameters t <= t2:
//   int_t^{t+a} f - int_{t2}^{t2+a2} f + int_{Q[t,t2]} y dx - int_{t-b}^{t2-b2} g
//     = (a2^2 - b2^2)/2 - (a^2 - b^2)/2.
// The Q integral runs over the trace frames strictly between t and t2.
double lem2_residual(const LipschitzPair& pair, const Trace& trace, double t, double t2);

// Lower bound on int_c^d h for 1-Lipschitz h with h(c) = hc, h(d) = hd:
//   (hd - hc)^2 / 4 + (d - c)(hd + hc) / 2 - (d - c)^2 / 4.
double proph_bound(double hc, double hd, double c, double d);

struct Est12 {
  double lhs{0};
  double lower{0};
  double upper{0};
  bool holds{false};
};

// Sandwich of int_{t-b}^{t+a-b} g - int_t^{t+a} f for a square corner with
// vertical defect delta. Checks a > 0, |b| <= a and the three hypothesis
// equations to 1e-9 first; a violation throws precondition naming it.
Est12 est1_est2_check(const LipschitzPair& pair, double t, double a, double b, double delta);

struct Est3 {
  double value{0};
  double bound{0};
  bool holds{false};
};

// (M^2 - a^2)/4 + a u - u^2 against its minimum over the admissible box.
Est3 est3_check(double m, double delta, double b_param, double a, double u);

// The end-game constants of the lower bound, as functions of (rho, B).
struct ConstantParams {
  double rho{0};
  double b{0};
  double d{0};
  double f{0};
  double g{0};

  static ConstantParams make(double rho, double b);
  // G before collapsing into a polynomial in rho and D; agrees with g.
  double g_unsimplified() const;
};

struct Feasibility {
  bool feasible{false};
  double cond1{0};
  double cond2{0};
};

Feasibility constant_feasible(const ConstantParams& params);

}  // namespace sqpeg
