#pragma once

#include <string>
#include <vector>

#include "sqpeg/geometry.hpp"
#include "sqpeg/square_finder.hpp"

namespace sqpeg {

struct SvgScene {
  std::vector<std::vector<Point>> curves;  // drawn in blue
  std::vector<std::vector<Point>> traces;  // alternating red and green
  std::vector<InscribedSquare> squares;    // one <polygon> each
  std::vector<Point> cloud;                // small red dots
};

// Scene inside a 1000x1000 viewport, y pointing up, aspect preserved.
std::string render_svg(const SvgScene& scene);

// Writes render_svg(scene) to path; throws io on failure.
void emit_svg(const SvgScene& scene, const std::string& path);

// Graph polylines of f and g over their breakpoints.
std::vector<std::vector<Point>> pair_curves(const LipschitzPair& pair);

}  // namespace sqpeg
