#pragma once

#include <string>
#include <vector>

#include "sqpeg/conservation.hpp"
#include "sqpeg/corner_trace.hpp"
#include "sqpeg/curve.hpp"
#include "sqpeg/sosc.hpp"
#include "sqpeg/square_finder.hpp"

namespace sqpeg {

// Shortest %g form that reads back to the same double.
std::string format_double(double v);

// Throw io on failure.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& content);

// {"T0": r, "T1": r, "f": {"x": [...], "y": [...]}, "g": {...}}. Parsing
// reports the first violated invariant as invalid_input.
LipschitzPair parse_pair_json(const std::string& text);
std::string pair_to_json(const LipschitzPair& pair);

// {"points": [[x, y], ...]}
ParametricPolyline parse_polyline_json(const std::string& text);

// t,u,a,b,Qx,Qy with Q in original coordinates.
std::string trace_csv(const Trace& trace);
std::string trace_json(const Trace& trace);

// [{"family", "t", "sidelength", "vertices": [[x, y] x4]}]
std::string squares_json(const std::vector<InscribedSquare>& squares);
std::string squares_csv(const std::vector<InscribedSquare>& squares);

// t_index,u_index,Qx,Qy
std::string cloud_csv(const SoscCloud& cloud);
std::string cloud_json(const SoscCloud& cloud);

// rho,B,D,F,G,cond1,cond2,feasible
std::string constants_csv(const std::vector<ConstantParams>& rows);
std::string constants_json(const std::vector<ConstantParams>& rows);

}  // namespace sqpeg
