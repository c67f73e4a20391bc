#include "sqpeg/square_finder.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sqpeg/conservation.hpp"
#include "sqpeg/error.hpp"

namespace sqpeg {

namespace {

constexpr double kDegenerateFraction = 1e-6;
constexpr int kMaxRefineSteps = 200;

struct Crossing {
  CornerFrame frame;
  double defect{0};
};

// Bisection in t on a bracket [lo, hi] whose defects have opposite signs.
Crossing refine(const LipschitzPair& fp, double lo, double dlo, double hi, double dhi,
                double tol, double tol_u) {
  Crossing best{frame_at(fp, std::abs(dlo) < std::abs(dhi) ? lo : hi, tol_u),
                std::min(std::abs(dlo), std::abs(dhi))};
  for (int step = 0; step < kMaxRefineSteps; ++step) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    CornerFrame fr = frame_at(fp, mid, tol_u);
    const double d = vertical_defect(fp, fr);
    if (std::abs(d) < std::abs(best.defect)) best = {fr, d};
    if (std::abs(d) <= tol) break;
    if ((d < 0) == (dlo < 0)) {
      lo = mid;
      dlo = d;
    } else {
      hi = mid;
    }
  }
  best.defect = vertical_defect(fp, best.frame);
  return best;
}

// All roots of the vertical defect along a family-1 trace of fp.
std::vector<Crossing> scan_crossings(const LipschitzPair& fp, const Trace& tr, double tol,
                                     double tol_u) {
  std::vector<Crossing> out;
  const std::size_t n = tr.frames.size();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = vertical_defect(fp, tr.frames[i]);

  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] == 0 && !tr.frames[i].degenerate()) out.push_back({tr.frames[i], 0.0});
    if (i + 1 < n && ((d[i] < 0 && d[i + 1] > 0) || (d[i] > 0 && d[i + 1] < 0)))
      out.push_back(refine(fp, tr.grid[i], d[i], tr.grid[i + 1], d[i + 1], tol, tol_u));
  }
  return out;
}

}  // namespace

double vertical_defect(const LipschitzPair& pair, const CornerFrame& frame) {
  return frame.o.y + frame.a + frame.b - pair.upper()(frame.t + frame.a - frame.b);
}

bool is_square(const std::array<Point, 4>& v, double sidelength, double tol) {
  if (!(sidelength > tol)) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(distance(v[i], v[(i + 1) % 4]) - sidelength) > tol) return false;
  }
  const double diag = std::sqrt(2.0) * sidelength;
  return std::abs(distance(v[0], v[2]) - diag) <= tol &&
         std::abs(distance(v[1], v[3]) - diag) <= tol;
}

bool verify_square(const LipschitzPair& pair, const InscribedSquare& sq, double tol) {
  const auto& f = pair.lower();
  const auto& g = pair.upper();
  for (const Point& v : sq.vertices) {
    if (v.x < pair.t0() - tol || v.x > pair.t1() + tol) return false;
    if (std::abs(v.y - f(v.x)) > tol && std::abs(v.y - g(v.x)) > tol) return false;
  }
  return is_square(sq.vertices, sq.sidelength, tol);
}

SquareSearch search_squares(const LipschitzPair& pair, std::size_t n, std::vector<int> families,
                            double tol) {
  require(n >= 2, "find_squares: need n >= 2 grid points");
  require(tol > 0, "find_squares: tol must be positive");
  const double m = pair.max_gap().value;
  const double tol_u = 1e-2 * tol;
  const double verify_tol = std::max(tol, kVerifyTolerance);

  SquareSearch res;
  auto& out = res.squares;
  for (std::size_t grid : {n, 4 * (n - 1) + 1}) {
    res.grid = grid;
    res.refined = grid != n;
    for (int family : families) {
      const LipschitzPair fp = family_pair(pair, family);
      const Trace tr = trace(pair, grid, family, tol_u);
      for (const Crossing& c : scan_crossings(fp, tr, tol, tol_u)) {
        const CornerFrame& fr = c.frame;
        if (fr.sidelength() <= kDegenerateFraction * m) continue;
        InscribedSquare sq;
        sq.vertices = {to_original(family, fr.o), to_original(family, fr.p),
                       to_original(family, fr.q), to_original(family, fr.r)};
        sq.sidelength = fr.sidelength();
        sq.family = family;
        sq.t = fr.t;
        sq.a = fr.a;
        sq.b = fr.b;
        if (verify_square(pair, sq, verify_tol)) out.push_back(sq);
      }
    }
    if (!out.empty()) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const InscribedSquare& x, const InscribedSquare& y) {
    return x.sidelength > y.sidelength;
  });
  return res;
}

std::vector<InscribedSquare> find_squares(const LipschitzPair& pair, std::size_t n,
                                          std::vector<int> families, double tol) {
  return search_squares(pair, n, std::move(families), tol).squares;
}

CrossingWindow crossing_window(const LipschitzPair& pair, double rho, std::size_t n,
                               double tol) {
  require(rho > 0 && rho < 0.125, "crossing_window: rho must lie in (0, 1/8)");
  require(pair.lipschitz_constant() < 1.0,
          "crossing_window: pair must be strictly contracting (shrink it first)");
  require(n >= 2, "crossing_window: need n >= 2 grid points");

  const MaxGap gap = pair.max_gap();
  const double small = rho * gap.value;
  const double tol_u = 1e-2 * tol;
  const Trace tr = trace(pair, n, 1, tol_u);
  if (tr.grid[1] - tr.grid[0] > 0.25 * small)
    fail(ErrorCode::resolution_insufficient,
         "crossing_window: grid step exceeds rho*M/4; increase n");

  CornerFrame first = frame_at(pair, pair.t0(), tol_u);
  CornerFrame last = frame_at(pair, pair.t1(), tol_u);
  for (const Crossing& c : scan_crossings(pair, tr, tol, tol_u)) {
    const CornerFrame& fr = c.frame;
    if (fr.a > small) continue;
    if (fr.t <= gap.abscissa && fr.t > first.t) first = fr;
    if (fr.t >= gap.abscissa && fr.t < last.t) last = fr;
  }

  CrossingWindow w;
  w.rho = rho;
  w.m = gap.value;
  w.t_max = gap.abscissa;
  w.t0 = first.t;
  w.t1 = last.t;
  w.a0 = first.a;
  w.a1 = last.a;
  w.tau0 = first.t + first.a - first.b;
  w.tau1 = last.t + last.a - last.b;

  std::vector<Point> path{first.q};
  for (std::size_t i = 0; i < tr.grid.size(); ++i) {
    if (tr.grid[i] > w.t0 && tr.grid[i] < w.t1) path.push_back(tr.frames[i].q);
  }
  path.push_back(last.q);
  w.signed_area = line_integral_ydx(path) - pair.upper().integral(w.tau0, w.tau1);
  w.sigma = w.signed_area >= 0 ? 1 : -1;
  w.area = std::abs(w.signed_area);
  return w;
}

}  // namespace sqpeg
