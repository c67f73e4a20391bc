#include "sqpeg/sosc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>

#include "sqpeg/error.hpp"

namespace sqpeg {

namespace {

constexpr double kDegenerate = 1e-9;  // relative to the diameter
constexpr double kParamSlack = 1e-12;
constexpr int kRefineSteps = 80;

struct Box {
  double x0, y0, x1, y1;
  bool overlaps(const Box& o) const {
    return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
  }
};

Box box_of(Point a, Point b, double pad) {
  return {std::min(a.x, b.x) - pad, std::min(a.y, b.y) - pad, std::max(a.x, b.x) + pad,
          std::max(a.y, b.y) + pad};
}

// Parameters (alpha, beta) with a + alpha (b - a) = c + beta (d - c), or
// false for (near) parallel segments.
bool intersect(Point a, Point b, Point c, Point d, double& alpha, double& beta) {
  const Point r = b - a;
  const Point s = d - c;
  const double denom = cross(r, s);
  if (std::abs(denom) <= 1e-14 * norm(r) * norm(s)) return false;
  const Point w = c - a;
  alpha = cross(w, s) / denom;
  beta = cross(w, r) / denom;
  return alpha >= -kParamSlack && alpha <= 1 + kParamSlack && beta >= -kParamSlack &&
         beta <= 1 + kParamSlack;
}

bool proper_crossing(Point a, Point b, Point c, Point d) {
  double alpha = 0, beta = 0;
  if (intersect(a, b, c, d, alpha, beta)) return true;
  // Collinear overlap.
  const Point r = b - a;
  if (std::abs(cross(c - a, r)) > 1e-14 * norm(r) * (norm(c - a) + 1)) return false;
  const double len2 = dot(r, r);
  const double s0 = dot(c - a, r) / len2;
  const double s1 = dot(d - a, r) / len2;
  return std::max(s0, s1) >= 0 && std::min(s0, s1) <= 1;
}

}  // namespace

ParametricPolyline::ParametricPolyline(std::vector<Point> points, bool closed)
    : points_(std::move(points)), closed_(closed) {
  if (!closed_) fail(ErrorCode::invalid_input, "polyline: only closed polylines are supported");
  if (points_.size() > 1 && points_.front() == points_.back()) points_.pop_back();
  if (points_.size() < 3) fail(ErrorCode::invalid_input, "polyline: need at least 3 points");
  for (const Point& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      fail(ErrorCode::invalid_input, "polyline: non-finite coordinate");
  }
  const std::size_t m = segments();
  for (std::size_t i = 0; i < m; ++i) {
    if (segment_start(i) == segment_end(i))
      fail(ErrorCode::invalid_input, "polyline: repeated point at index " + std::to_string(i));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == m - 1);
      if (adjacent) {
        // Adjacent segments may only share their common endpoint.
        const Point shared = j == i + 1 ? segment_end(i) : segment_start(i);
        const Point u = (j == i + 1 ? segment_start(i) : segment_end(i)) - shared;
        const Point v = (j == i + 1 ? segment_end(j) : segment_start(j)) - shared;
        if (std::abs(cross(u, v)) <= 1e-14 * norm(u) * norm(v) && dot(u, v) > 0)
          fail(ErrorCode::invalid_input,
               "polyline: segments " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
        continue;
      }
      if (proper_crossing(segment_start(i), segment_end(i), segment_start(j), segment_end(j)))
        fail(ErrorCode::invalid_input, "polyline: segments " + std::to_string(i) + " and " +
                                           std::to_string(j) + " intersect");
    }
  }

  cumulative_.assign(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    cumulative_[i + 1] = cumulative_[i] + distance(segment_start(i), segment_end(i));
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      diameter_ = std::max(diameter_, distance(points_[i], points_[j]));
  }
}

Point ParametricPolyline::at(double s) const {
  const double len = length();
  s = std::fmod(s, len);
  if (s < 0) s += len;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());
  i = i == 0 ? 0 : i - 1;
  if (i >= segments()) i = segments() - 1;
  const double seg = cumulative_[i + 1] - cumulative_[i];
  const double w = std::clamp((s - cumulative_[i]) / seg, 0.0, 1.0);
  return segment_start(i) + w * (segment_end(i) - segment_start(i));
}

double ParametricPolyline::distance_to(Point q) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < segments(); ++i)
    best = std::min(best, segment_distance(q, segment_start(i), segment_end(i)));
  return best;
}

bool ParametricPolyline::contains(Point q) const {
  bool inside = false;
  for (std::size_t i = 0; i < segments(); ++i) {
    const Point a = segment_start(i);
    const Point b = segment_end(i);
    if ((a.y > q.y) != (b.y > q.y)) {
      const double x = a.x + (q.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (q.x < x) inside = !inside;
    }
  }
  return inside;
}

double ParametricPolyline::signed_distance(Point q) const {
  const double d = distance_to(q);
  return contains(q) ? -d : d;
}

std::vector<SoscSample> corners_at(const ParametricPolyline& curve, double s,
                                   std::size_t t_index, double tol) {
  const Point o = curve.at(s);
  const std::size_t m = curve.segments();
  const double diam = curve.diameter();
  const double pad = 1e-12 * diam;

  std::vector<Box> boxes(m);
  for (std::size_t i = 0; i < m; ++i)
    boxes[i] = box_of(curve.segment_start(i), curve.segment_end(i), pad);

  std::vector<SoscSample> out;
  for (std::size_t j = 0; j < m; ++j) {
    const Point a = curve.segment_start(j);
    const Point b = curve.segment_end(j);
    const Point ra = rotate_quarter(a, o);
    const Point rb = rotate_quarter(b, o);
    const Box rbox = box_of(ra, rb, pad);
    for (std::size_t i = 0; i < m; ++i) {
      if (!rbox.overlaps(boxes[i])) continue;
      double alpha = 0, beta = 0;
      const Point c = curve.segment_start(i);
      const Point d = curve.segment_end(i);
      if (!intersect(ra, rb, c, d, alpha, beta)) continue;
      alpha = std::clamp(alpha, 0.0, 1.0);
      beta = std::clamp(beta, 0.0, 1.0);
      const Point p = a + alpha * (b - a);
      const Point r = c + beta * (d - c);
      if (distance(p, o) <= kDegenerate * diam) continue;
      if (distance(r, rotate_quarter(p, o)) > tol) continue;
      const bool duplicate = std::any_of(out.begin(), out.end(), [&](const SoscSample& x) {
        return distance(x.p, p) <= 1e-12 * diam && distance(x.r, r) <= 1e-12 * diam;
      });
      if (duplicate) continue;
      out.push_back({t_index, j, i, alpha, o, p, r, opposite_corner(o, p, r)});
    }
  }
  return out;
}

SoscCloud sosc_cloud(const ParametricPolyline& curve, std::size_t n, double tol) {
  require(n >= 8, "sosc_cloud: need at least 8 anchors");
  require(curve.closed(), "sosc_cloud: curve must be closed");
  require(tol > 0, "sosc_cloud: tol must be positive");
  SoscCloud cloud;
  cloud.pitch = curve.length() / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto s = corners_at(curve, static_cast<double>(k) * cloud.pitch, k, tol);
    cloud.samples.insert(cloud.samples.end(), s.begin(), s.end());
  }
  std::stable_sort(cloud.samples.begin(), cloud.samples.end(),
                   [](const SoscSample& x, const SoscSample& y) {
                     return std::tie(x.t_index, x.u_index, x.v_index, x.u_param) <
                            std::tie(y.t_index, y.u_index, y.v_index, y.u_param);
                   });
  return cloud;
}

namespace {

InscribedSquare package(const SoscSample& s, double anchor) {
  InscribedSquare sq;
  sq.vertices = {s.o, s.p, s.q, s.r};
  sq.sidelength = distance(s.o, s.p);
  sq.family = 0;
  sq.t = anchor;
  sq.a = sq.sidelength;
  sq.b = 0;
  return sq;
}

const SoscSample* nearest_q(const std::vector<SoscSample>& samples, Point q, double limit) {
  const SoscSample* best = nullptr;
  double best_d = limit;
  for (const SoscSample& s : samples) {
    const double d = distance(s.q, q);
    if (d <= best_d) {
      best_d = d;
      best = &s;
    }
  }
  return best;
}

bool same_square(const InscribedSquare& x, const InscribedSquare& y, double tol) {
  for (std::size_t shift = 0; shift < 4; ++shift) {
    bool all = true;
    for (std::size_t i = 0; i < 4 && all; ++i)
      all = distance(x.vertices[i], y.vertices[(i + shift) % 4]) <= tol;
    if (all) return true;
  }
  return false;
}

}  // namespace

std::vector<InscribedSquare> inscribed_squares_general(const ParametricPolyline& curve,
                                                       std::size_t n, double tol) {
  const SoscCloud cloud = sosc_cloud(curve, n, tol);
  const double limit = 0.1 * curve.diameter();

  std::vector<std::vector<SoscSample>> by_anchor(n);
  for (const SoscSample& s : cloud.samples) by_anchor[s.t_index].push_back(s);

  std::vector<InscribedSquare> candidates;
  for (std::size_t k = 0; k < n; ++k) {
    const double s_lo = static_cast<double>(k) * cloud.pitch;
    for (const SoscSample& x : by_anchor[k]) {
      const double dx = curve.signed_distance(x.q);
      if (std::abs(dx) <= tol) {
        candidates.push_back(package(x, s_lo));
        continue;
      }
      const SoscSample* y = nearest_q(by_anchor[(k + 1) % n], x.q, limit);
      if (y == nullptr) continue;
      const double dy = curve.signed_distance(y->q);
      if ((dx < 0) == (dy < 0) || std::abs(dy) <= tol) continue;

      // Bisection on the anchor arclength following the Q strand.
      double lo = s_lo;
      double hi = s_lo + cloud.pitch;
      SoscSample left = x;
      double d_left = dx;
      SoscSample best = std::abs(dx) < std::abs(dy) ? x : *y;
      double best_d = std::min(std::abs(dx), std::abs(dy));
      double best_s = std::abs(dx) < std::abs(dy) ? lo : hi;
      for (int step = 0; step < kRefineSteps; ++step) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const auto here = corners_at(curve, mid, k, tol);
        const SoscSample* z = nearest_q(here, left.q, limit);
        if (z == nullptr) break;
        const double dz = curve.signed_distance(z->q);
        if (std::abs(dz) < best_d) {
          best = *z;
          best_d = std::abs(dz);
          best_s = mid;
        }
        if (best_d <= 1e-3 * tol) break;
        if ((dz < 0) == (d_left < 0)) {
          lo = mid;
          left = *z;
          d_left = dz;
        } else {
          hi = mid;
        }
      }
      if (best_d <= tol) candidates.push_back(package(best, best_s));
    }
  }

  std::vector<InscribedSquare> out;
  for (const InscribedSquare& sq : candidates) {
    if (!verify_square(curve, sq, tol)) continue;
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const InscribedSquare& o) { return same_square(o, sq, tol); });
    if (!seen) out.push_back(sq);
  }
  std::stable_sort(out.begin(), out.end(), [](const InscribedSquare& x, const InscribedSquare& y) {
    return x.sidelength > y.sidelength;
  });
  return out;
}

bool verify_square(const ParametricPolyline& curve, const InscribedSquare& sq, double tol) {
  for (const Point& v : sq.vertices) {
    if (curve.distance_to(v) > tol) return false;
  }
  return is_square(sq.vertices, sq.sidelength, tol);
}

std::size_t count_clusters(const std::vector<Point>& points, double radius) {
  std::vector<Point> centres;
  for (const Point& p : points) {
    const bool near = std::any_of(centres.begin(), centres.end(),
                                  [&](Point c) { return distance(c, p) <= radius; });
    if (!near) centres.push_back(p);
  }
  return centres.size();
}

ParametricPolyline circle_polyline(std::size_t vertices, double radius) {
  std::vector<Point> pts(vertices);
  for (std::size_t i = 0; i < vertices; ++i) {
    const double th = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(vertices);
    pts[i] = {radius * std::cos(th), radius * std::sin(th)};
  }
  return ParametricPolyline(std::move(pts));
}

ParametricPolyline ellipse_polyline(std::size_t vertices) {
  std::vector<Point> pts(vertices);
  for (std::size_t i = 0; i < vertices; ++i) {
    const double th = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(vertices);
    pts[i] = {std::cos(th), 2 * std::sin(th)};
  }
  return ParametricPolyline(std::move(pts));
}

ParametricPolyline unit_square_polyline() {
  return ParametricPolyline({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ParametricPolyline pair_polyline(const LipschitzPair& pair) {
  std::vector<Point> pts;
  const auto fx = pair.lower().breakpoints();
  const auto fy = pair.lower().values();
  for (std::size_t i = 0; i < fx.size(); ++i) pts.push_back({fx[i], fy[i]});
  const auto gx = pair.upper().breakpoints();
  const auto gy = pair.upper().values();
  for (std::size_t i = gx.size() - 1; i-- > 1;) pts.push_back({gx[i], gy[i]});
  return ParametricPolyline(std::move(pts));
}

}  // namespace sqpeg
