#include <doctest.h>

#include <cmath>

#include "sqpeg/error.hpp"
#include "sqpeg/sosc.hpp"
#include "support.hpp"

using namespace sqpeg;

namespace {

double hausdorff(const std::vector<Point>& a, const std::vector<Point>& b) {
  auto one_way = [](const std::vector<Point>& x, const std::vector<Point>& y) {
    double worst = 0;
    for (const Point& p : x) {
      double best = INFINITY;
      for (const Point& q : y) best = std::min(best, distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

std::vector<Point> q_points(const SoscCloud& c) {
  std::vector<Point> out;
  for (const auto& s : c.samples) out.push_back(s.q);
  return out;
}

}  // namespace

TEST_CASE("polyline validation") {
  CHECK_THROWS_AS(ParametricPolyline({{0, 0}, {1, 0}}), Error);
  CHECK_THROWS_AS(ParametricPolyline({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), Error);
  // Bow tie.
  CHECK_THROWS_AS(ParametricPolyline({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), Error);
  CHECK_THROWS_AS(ParametricPolyline({{0, 0}, {1, 0}, {1, 1}}, false), Error);
  const ParametricPolyline closed({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  CHECK(closed.segments() == 4);
  CHECK(closed.length() == doctest::Approx(4.0));
  CHECK(closed.at(1.5) == Point{1, 0.5});
  CHECK(closed.at(-0.5) == Point{0, 0.5});
  CHECK(closed.contains({0.5, 0.5}));
  CHECK_FALSE(closed.contains({1.5, 0.5}));
  CHECK(closed.signed_distance({0.5, 0.4}) == doctest::Approx(-0.4));
}

TEST_CASE("corners satisfy the rotation equation") {
  const auto poly = ellipse_polyline(128);
  const SoscCloud cloud = sosc_cloud(poly, 64, 1e-9);
  REQUIRE_FALSE(cloud.samples.empty());
  for (const SoscSample& s : cloud.samples) {
    REQUIRE(distance(s.r, rotate_quarter(s.p, s.o)) <= 1e-9);
    REQUIRE(distance(s.p, s.o) > 1e-9 * poly.diameter());
    REQUIRE(poly.distance_to(s.p) <= 1e-12);
    REQUIRE(poly.distance_to(s.r) <= 1e-12);
    REQUIRE(s.q == opposite_corner(s.o, s.p, s.r));
  }
  for (std::size_t i = 1; i < cloud.samples.size(); ++i) {
    const auto& a = cloud.samples[i - 1];
    const auto& b = cloud.samples[i];
    REQUIRE((a.t_index < b.t_index || (a.t_index == b.t_index && a.u_index <= b.u_index)));
  }
  CHECK_THROWS_AS(sosc_cloud(poly, 7, 1e-9), Error);
}

TEST_CASE("circle cloud lies on the circle") {
  const SoscCloud cloud = sosc_cloud(circle_polyline(512), 256, 1e-9);
  REQUIRE(cloud.samples.size() >= 256);
  for (const auto& s : cloud.samples) REQUIRE(std::abs(norm(s.q) - 1) <= 1e-3);
}

TEST_CASE("circle inscribed squares have side sqrt 2") {
  const auto found = inscribed_squares_general(circle_polyline(512), 256, 1e-3);
  REQUIRE_FALSE(found.empty());
  for (const auto& sq : found) CHECK(std::abs(sq.sidelength - std::sqrt(2.0)) <= 1e-3);
}

TEST_CASE("ellipse cloud is symmetric under (x, y) -> (-x, -y)") {
  const SoscCloud cloud = sosc_cloud(ellipse_polyline(512), 256, 1e-9);
  REQUIRE_FALSE(cloud.samples.empty());
  const auto pts = q_points(cloud);
  std::vector<Point> flipped;
  for (const Point& p : pts) flipped.push_back({-p.x, -p.y});
  CHECK(hausdorff(pts, flipped) <= 2 * cloud.pitch);
}

TEST_CASE("unit square: the vertex square is found") {
  // Brute force over vertex quadruples: only the curve's own vertices form a
  // square among them.
  const auto poly = unit_square_polyline();
  const auto& v = poly.points();
  int vertex_squares = 0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t d = 0; d < 4; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (is_square({v[a], v[b], v[c], v[d]}, distance(v[a], v[b]), 1e-12)) ++vertex_squares;
        }
  REQUIRE(vertex_squares > 0);

  const auto found = inscribed_squares_general(poly, 64, 1e-9);
  bool has_vertex_square = false;
  for (const auto& sq : found) {
    CHECK(verify_square(poly, sq, 1e-9));
    int hits = 0;
    for (const Point& p : sq.vertices)
      for (const Point& q : v)
        if (distance(p, q) <= 1e-9) ++hits;
    if (hits == 4) has_vertex_square = true;
  }
  CHECK(has_vertex_square);
}

TEST_CASE("tent triangle contains the family-1 square") {
  const auto poly = pair_polyline(tent_pair());
  const auto found = inscribed_squares_general(poly, 256, 1e-9);
  bool match = false;
  for (const auto& sq : found) {
    if (std::abs(sq.sidelength - 2.0 / 3) > 1e-9) continue;
    bool corners = true;
    for (Point want : {Point{2.0 / 3, 0}, Point{4.0 / 3, 0}, Point{4.0 / 3, 2.0 / 3},
                       Point{2.0 / 3, 2.0 / 3}}) {
      bool hit = false;
      for (const Point& p : sq.vertices) hit = hit || distance(p, want) <= 1e-9;
      corners = corners && hit;
    }
    match = match || corners;
  }
  CHECK(match);

  // Cross-module: the cloud passes within 5 pitches of the square's Q.
  const SoscCloud cloud = sosc_cloud(poly, 256, 1e-9);
  const auto sq = find_squares(tent_pair()).front();
  double best = INFINITY;
  for (const auto& s : cloud.samples) best = std::min(best, distance(s.q, sq.vertices[2]));
  CHECK(best <= 5 * cloud.pitch);
}

TEST_CASE("doubling the anchors never loses clusters") {
  for (const auto& poly : {circle_polyline(512), ellipse_polyline(512)}) {
    const SoscCloud coarse = sosc_cloud(poly, 64, 1e-9);
    const SoscCloud fine = sosc_cloud(poly, 128, 1e-9);
    CHECK(count_clusters(q_points(fine), 3 * fine.pitch) >=
          count_clusters(q_points(coarse), 3 * coarse.pitch));
  }
}
