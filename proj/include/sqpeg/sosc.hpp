#pragma once

#include <cstddef>
#include <vector>

#include "sqpeg/geometry.hpp"
#include "sqpeg/square_finder.hpp"

namespace sqpeg {

// Closed simple polyline; the segment i joins points[i] and points[i + 1],
// cyclically.
class ParametricPolyline {
 public:
  // A repeated closing point is dropped. Throws invalid_input for fewer than
  // 3 points, repeated consecutive points or self-intersection.
  explicit ParametricPolyline(std::vector<Point> points, bool closed = true);

  const std::vector<Point>& points() const { return points_; }
  bool closed() const { return closed_; }
  std::size_t segments() const { return points_.size(); }
  Point segment_start(std::size_t i) const { return points_[i]; }
  Point segment_end(std::size_t i) const { return points_[(i + 1) % points_.size()]; }

  double length() const { return cumulative_.back(); }
  double diameter() const { return diameter_; }
  // Point at arclength s, taken modulo length().
  Point at(double s) const;
  // Unsigned distance to the curve.
  double distance_to(Point q) const;
  // Even-odd containment.
  bool contains(Point q) const;
  // Negative inside, positive outside.
  double signed_distance(Point q) const;

 private:
  std::vector<Point> points_;
  bool closed_{true};
  std::vector<double> cumulative_;  // arclength at points_[i]; last entry is the length
  double diameter_{0};
};

// One square corner (O, P, R) with R = rot(P) about O, all on the curve.
struct SoscSample {
  std::size_t t_index{0};  // anchor index
  std::size_t u_index{0};  // segment carrying P
  std::size_t v_index{0};  // segment carrying R
  double u_param{0};       // position of P along its segment
  Point o, p, r, q;
};

struct SoscCloud {
  double pitch{0};  // anchor spacing in arclength
  std::vector<SoscSample> samples;  // sorted by (t_index, u_index)
};

// Square corners at n anchors equally spaced in arclength.
SoscCloud sosc_cloud(const ParametricPolyline& curve, std::size_t n, double tol = 1e-9);

// Square corners anchored at O = curve.at(s), tagged with t_index.
std::vector<SoscSample> corners_at(const ParametricPolyline& curve, double s,
                                   std::size_t t_index, double tol = 1e-9);

// Cloud samples whose Q is within tol of the curve, plus roots of the signed
// distance of Q between neighbouring anchors, verified and deduplicated.
std::vector<InscribedSquare> inscribed_squares_general(const ParametricPolyline& curve,
                                                       std::size_t n, double tol = 1e-9);

bool verify_square(const ParametricPolyline& curve, const InscribedSquare& sq, double tol);

// Greedy clusters: each point joins the first centre within radius.
std::size_t count_clusters(const std::vector<Point>& points, double radius);

ParametricPolyline circle_polyline(std::size_t vertices = 512, double radius = 1.0);
// x = cos(theta), y = 2 sin(theta), i.e. 4x^2 + y^2 = 4.
ParametricPolyline ellipse_polyline(std::size_t vertices = 512);
ParametricPolyline unit_square_polyline();
// Boundary of the pair region: f left to right, then g right to left.
ParametricPolyline pair_polyline(const LipschitzPair& pair);

}  // namespace sqpeg
