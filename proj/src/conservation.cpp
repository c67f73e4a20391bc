#include "sqpeg/conservation.hpp"

#include <cmath>
#include <string>

#include "sqpeg/error.hpp"

namespace sqpeg {

double line_integral_ydx(std::span<const Point> points) {
  require(points.size() >= 2, "line_integral_ydx: need at least 2 points");
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    sum += 0.5 * (points[i].y + points[i + 1].y) * (points[i + 1].x - points[i].x);
  return sum;
}

void QuadrupleTrace::validate() const {
  const std::size_t n = s.size();
  if (x.size() != n || y.size() != n || a.size() != n || b.size() != n)
    fail(ErrorCode::invalid_input, "quadruple trace: sample vectors differ in length");
  if (n < 2) fail(ErrorCode::invalid_input, "quadruple trace: need at least 2 samples");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(s[i] > s[i - 1]))
      fail(ErrorCode::invalid_input, "quadruple trace: grid not strictly increasing");
  }
}

std::array<std::vector<Point>, 4> QuadrupleTrace::curves() const {
  std::array<std::vector<Point>, 4> c;
  for (auto& v : c) v.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    c[0].push_back({x[i], y[i]});
    c[1].push_back({x[i] + a[i], y[i] + b[i]});
    c[2].push_back({x[i] + a[i] - b[i], y[i] + a[i] + b[i]});
    c[3].push_back({x[i] - b[i], y[i] + a[i]});
  }
  return c;
}

QuadrupleTrace extract_quadruple(const LipschitzPair& pair, double from, double to,
                                 std::size_t cells, double tol) {
  require(cells >= 1, "extract_quadruple: need at least one cell");
  require(from < to, "extract_quadruple: empty parameter interval");
  QuadrupleTrace q;
  const double step = (to - from) / static_cast<double>(cells);
  for (std::size_t i = 0; i <= cells; ++i) {
    const double t = i == cells ? to : from + static_cast<double>(i) * step;
    const CornerFrame fr = frame_at(pair, t, tol);
    q.s.push_back(t);
    q.x.push_back(fr.o.x);
    q.y.push_back(fr.o.y);
    q.a.push_back(fr.a);
    q.b.push_back(fr.b);
  }
  return q;
}

namespace {

double square_term(const QuadrupleTrace& q) {
  const std::size_t e = q.s.size() - 1;
  return 0.5 * (q.a[e] * q.a[e] - q.b[e] * q.b[e]) - 0.5 * (q.a[0] * q.a[0] - q.b[0] * q.b[0]);
}

}  // namespace

double conservation_residual(const QuadrupleTrace& q) {
  q.validate();
  const auto c = q.curves();
  const double alternating = line_integral_ydx(c[0]) - line_integral_ydx(c[1]) +
                             line_integral_ydx(c[2]) - line_integral_ydx(c[3]);
  return std::abs(alternating - square_term(q));
}

double conservation_residual(const QuadrupleTrace& q, const LipschitzPair& pair) {
  q.validate();
  const auto& f = pair.lower();
  const auto& g = pair.upper();
  const std::size_t e = q.s.size() - 1;
  const double i1 = f.integral(q.x[0], q.x[e]);
  const double i2 = f.integral(q.x[0] + q.a[0], q.x[e] + q.a[e]);
  const double i3 = line_integral_ydx(q.curves()[2]);
  const double i4 = g.integral(q.x[0] - q.b[0], q.x[e] - q.b[e]);
  return std::abs(i1 - i2 + i3 - i4 - square_term(q));
}

double lem2_residual(const LipschitzPair& pair, const Trace& tr, double t, double t2) {
  require(tr.family == 1, "lem2_residual: needs a family-1 trace");
  require(t <= t2, "lem2_residual: need t <= t'");
  require(!tr.grid.empty() && t >= tr.grid.front() && t2 <= tr.grid.back(),
          "lem2_residual: parameters outside the trace grid");
  if (t == t2) return 0.0;

  const CornerFrame lo = frame_at(pair, t, tr.tol);
  const CornerFrame hi = frame_at(pair, t2, tr.tol);
  std::vector<Point> path{lo.q};
  for (std::size_t i = 0; i < tr.grid.size(); ++i) {
    if (tr.grid[i] > t && tr.grid[i] < t2) path.push_back(tr.frames[i].q);
  }
  path.push_back(hi.q);

  const auto& f = pair.lower();
  const auto& g = pair.upper();
  const double lhs = f.integral(t, t + lo.a) - f.integral(t2, t2 + hi.a) + line_integral_ydx(path) -
                     g.integral(t - lo.b, t2 - hi.b);
  const double rhs = 0.5 * (hi.a * hi.a - hi.b * hi.b) - 0.5 * (lo.a * lo.a - lo.b * lo.b);
  return std::abs(lhs - rhs);
}

double proph_bound(double hc, double hd, double c, double d) {
  require(c <= d, "proph_bound: need c <= d");
  const double len = d - c;
  require(std::abs(hd - hc) <= len * (1 + 1e-12) + 1e-15,
          "proph_bound: endpoint values incompatible with a 1-Lipschitz h");
  const double jump = hd - hc;
  return 0.25 * jump * jump + 0.5 * len * (hd + hc) - 0.25 * len * len;
}

Est12 est1_est2_check(const LipschitzPair& pair, double t, double a, double b, double delta) {
  require(a > 0, "est1_est2_check: need a > 0");
  require(std::abs(b) <= a * (1 + 1e-12), "est1_est2_check: need |b| <= a");
  const auto& f = pair.lower();
  const auto& g = pair.upper();
  const double ft = f(t);
  constexpr double kHypTol = 1e-9;
  if (std::abs(f(t + a) - ft - b) > kHypTol)
    fail(ErrorCode::precondition, "est1_est2_check: f(t+a) = f(t)+b violated");
  if (std::abs(g(t - b) - ft - a) > kHypTol)
    fail(ErrorCode::precondition, "est1_est2_check: g(t-b) = f(t)+a violated");
  if (std::abs(g(t + a - b) - ft - a - b - delta) > kHypTol)
    fail(ErrorCode::precondition, "est1_est2_check: g(t+a-b) = f(t)+a+b+delta violated");

  Est12 r;
  r.lhs = g.integral(t - b, t + a - b) - f.integral(t, t + a);
  r.lower = 0.5 * (a * a + b * b) + 0.5 * delta * (a + b) + 0.25 * delta * delta;
  r.upper = 0.5 * (3 * a * a - b * b) + 0.5 * delta * (a - b) - 0.25 * delta * delta;
  r.holds = r.lower - 1e-12 <= r.lhs && r.lhs <= r.upper + 1e-12;
  return r;
}

Est3 est3_check(double m, double delta, double b_param, double a, double u) {
  require(m > 0, "est3_check: need M > 0");
  require(delta >= 0, "est3_check: need delta >= 0");
  require(b_param > 1, "est3_check: need B > 1");
  const double slack = 1e-12 * m;
  require(a >= m * (1 - delta) - 2 * u - slack && a <= m * (1 + delta) + slack,
          "est3_check: a outside [M(1-delta) - 2u, M(1+delta)]");
  require(u >= 0.25 * m * (1 - 1 / b_param) - slack && u <= 0.25 * m * (1 + 1 / b_param) + slack,
          "est3_check: u outside [M/4 (1 - 1/B), M/4 (1 + 1/B)]");

  Est3 r;
  r.value = 0.25 * (m * m - a * a) + a * u - u * u;
  const double ib = 1 / b_param;
  r.bound = m * m / 16 * (3 - 2 * ib - ib * ib) - 0.25 * m * m * delta * (1 + delta + ib);
  r.holds = r.value >= r.bound - 1e-12;
  return r;
}

ConstantParams ConstantParams::make(double rho, double b) {
  ConstantParams p;
  p.rho = rho;
  p.b = b;
  p.d = b * rho + std::sqrt(2 * b * b * rho * rho + b + 1);
  p.f = rho * p.d + 2 * b * rho * rho;
  const double r2 = rho * rho;
  p.g = 6 * (2 + 1 / b) * rho * p.d + 4 * (2 + b) * r2 + 9 * r2 * p.d * p.d +
        22 * b * r2 * rho * p.d + 8 * b * b * r2 * r2;
  return p;
}

double ConstantParams::g_unsimplified() const {
  const double rd = rho * d;
  const double r2 = rho * rho;
  const double ib = 1 / b;
  return f * (1 + f + ib) + (1 + ib + 2 * rd + 4 * b * r2) * (b * r2 + 2 * rd) +
         (1 + ib) * (b * r2 + rd) + 2 * rd + 2 * rd * ((1 + ib) + 2 * rd + 4 * b * r2) +
         4 * rd + 4 * r2;
}

Feasibility constant_feasible(const ConstantParams& p) {
  require(p.rho > 0 && p.rho < 0.125, "constant_feasible: rho must lie in (0, 1/8)");
  require(p.b >= 2, "constant_feasible: need B >= 2");
  Feasibility out;
  out.cond1 = 1 - 3 / p.b - 4 * p.rho * p.d - 8 * p.b * p.rho * p.rho;
  out.cond2 = (3 - 2 / p.b - 1 / (p.b * p.b)) / 16 - p.g / 4;
  out.feasible = out.cond1 > 0 && out.cond2 > 0;
  return out;
}

}  // namespace sqpeg
