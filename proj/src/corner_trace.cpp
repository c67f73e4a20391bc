#include "sqpeg/corner_trace.hpp"

#include <cmath>
#include <string>

#include "sqpeg/error.hpp"

namespace sqpeg {

double CornerFrame::sidelength() const { return std::hypot(a, b); }

double rotation_residual(const LipschitzPair& pair, double t, double u) {
  const auto& f = pair.lower();
  const double ft = f(t);
  return pair.upper()(t + ft - f(u)) - ft - u + t;
}

double solve_u(const LipschitzPair& pair, double t, double tol) {
  require(std::isfinite(t), "solve_u: non-finite t");
  require(tol > 0, "solve_u: tol must be positive");
  const auto& f = pair.lower();
  const auto& g = pair.upper();

  const double gap = g(t) - f(t);
  // phi_t(t) = g(t) - f(t); zero exactly on the constant extension.
  if (!(gap > 0)) return t;

  double lo = t;
  double hi = t + (g.max_value() - f.min_value()) + gap + 1.0;
  if (rotation_residual(pair, t, hi) > 0)
    fail(ErrorCode::internal, "solve_u: root not bracketed at t = " + std::to_string(t));

  // phi(lo) > 0 >= phi(hi). Keeping the sign convention strict on the left
  // converges to the leftmost root when phi has a flat zero interval.
  const double width = 0.25 * tol;
  while (hi - lo > width) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (rotation_residual(pair, t, mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

CornerFrame frame_at(const LipschitzPair& pair, double t, double tol) {
  const double u = solve_u(pair, t, tol);
  const auto& f = pair.lower();
  const double ft = f(t);
  CornerFrame fr;
  fr.t = t;
  fr.u = u;
  fr.a = u - t;
  fr.b = f(u) - ft;
  fr.o = {t, ft};
  fr.p = {t + fr.a, ft + fr.b};
  fr.q = {t + fr.a - fr.b, ft + fr.a + fr.b};
  fr.r = {t - fr.b, ft + fr.a};
  if (!fr.degenerate()) {
    const auto outside = [&](double x) { return x < pair.t0() || x > pair.t1(); };
    fr.uses_extension = outside(fr.p.x) || outside(fr.q.x) || outside(fr.r.x);
  }
  return fr;
}

LipschitzPair family_pair(const LipschitzPair& pair, int family) {
  const auto& f = pair.lower();
  const auto& g = pair.upper();
  switch (family) {
    case 1: return pair;
    case 2: return {f.reflected(), g.reflected()};
    case 3: return {g.reflected().negated(), f.reflected().negated()};
    case 4: return {g.negated(), f.negated()};
  }
  fail(ErrorCode::precondition, "family must be 1, 2, 3 or 4");
}

Point to_original(int family, Point p) {
  switch (family) {
    case 2: return {-p.x, p.y};
    case 3: return {-p.x, -p.y};
    case 4: return {p.x, -p.y};
    default: return p;
  }
}

Trace trace(const LipschitzPair& pair, std::size_t n, int family, double tol) {
  require(n >= 2, "trace: need n >= 2 grid points");
  const LipschitzPair fp = family_pair(pair, family);
  const double m = fp.max_gap().value;
  const double lo = fp.t0() - m;
  const double hi = fp.t1() + m;
  const double step = (hi - lo) / static_cast<double>(n - 1);

  Trace out;
  out.family = family;
  out.tol = tol;
  out.grid.resize(n);
  out.frames.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.grid[i] = i + 1 == n ? hi : lo + static_cast<double>(i) * step;
    out.frames[i] = frame_at(fp, out.grid[i], tol);
  }
  return out;
}

}  // namespace sqpeg
