#include "sqpeg/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>

#include "sqpeg/error.hpp"

namespace sqpeg {

namespace {

constexpr double kSize = 1000.0;
constexpr double kMargin = 40.0;

struct Viewport {
  double x0{0}, y0{0}, scale{1}, ox{0}, oy{0};

  Point map(Point p) const {
    return {ox + (p.x - x0) * scale, kSize - (oy + (p.y - y0) * scale)};
  }
};

Viewport fit(const SvgScene& s) {
  double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
  double xmax = -xmin, ymax = -xmin;
  auto add = [&](Point p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (const auto& c : s.curves) std::for_each(c.begin(), c.end(), add);
  for (const auto& c : s.traces) std::for_each(c.begin(), c.end(), add);
  for (const auto& sq : s.squares) std::for_each(sq.vertices.begin(), sq.vertices.end(), add);
  std::for_each(s.cloud.begin(), s.cloud.end(), add);

  Viewport v;
  if (!(xmin <= xmax)) return v;
  const double w = std::max(xmax - xmin, 1e-12);
  const double h = std::max(ymax - ymin, 1e-12);
  const double inner = kSize - 2 * kMargin;
  v.scale = inner / std::max(w, h);
  v.x0 = xmin;
  v.y0 = ymin;
  v.ox = kMargin + 0.5 * (inner - w * v.scale);
  v.oy = kMargin + 0.5 * (inner - h * v.scale);
  return v;
}

std::string coords(const Viewport& v, const Point* pts, std::size_t n) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < n; ++i) {
    const Point q = v.map(pts[i]);
    std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", i ? " " : "", q.x, q.y);
    out += buf;
  }
  return out;
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
  const Viewport v = fit(scene);
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
      "viewBox=\"0 0 1000 1000\">\n<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  for (const auto& c : scene.curves) {
    out += "<polyline fill=\"none\" stroke=\"blue\" stroke-width=\"2\" points=\"" +
           coords(v, c.data(), c.size()) + "\"/>\n";
  }
  for (std::size_t i = 0; i < scene.traces.size(); ++i) {
    const auto& c = scene.traces[i];
    out += std::string("<polyline fill=\"none\" stroke=\"") + (i % 2 ? "green" : "red") +
           "\" stroke-width=\"1\" points=\"" + coords(v, c.data(), c.size()) + "\"/>\n";
  }
  char buf[96];
  for (const Point& p : scene.cloud) {
    const Point q = v.map(p);
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"1.5\" fill=\"red\"/>\n", q.x,
                  q.y);
    out += buf;
  }
  for (const auto& sq : scene.squares) {
    out += "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"" +
           coords(v, sq.vertices.data(), 4) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

void emit_svg(const SvgScene& scene, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(ErrorCode::io, "cannot open " + path + " for writing");
  os << render_svg(scene);
  if (!os) fail(ErrorCode::io, "write failed: " + path);
}

std::vector<std::vector<Point>> pair_curves(const LipschitzPair& pair) {
  std::vector<std::vector<Point>> out(2);
  const PiecewiseLinear* fs[2] = {&pair.lower(), &pair.upper()};
  for (int k = 0; k < 2; ++k) {
    const auto xs = fs[k]->breakpoints();
    const auto ys = fs[k]->values();
    for (std::size_t i = 0; i < xs.size(); ++i) out[k].push_back({xs[i], ys[i]});
  }
  return out;
}

}  // namespace sqpeg
