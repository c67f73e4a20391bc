#include "sqpeg/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sqpeg/error.hpp"

namespace sqpeg {

using nlohmann::ordered_json;

namespace {

std::string num(double v) { return format_double(v); }

nlohmann::json parse(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::invalid_input, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<double> numbers(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) fail(ErrorCode::invalid_input, what + " must be an array");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) fail(ErrorCode::invalid_input, what + " must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

PiecewiseLinear function_from(const nlohmann::json& j, const std::string& name) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y"))
    fail(ErrorCode::invalid_input, name + " needs \"x\" and \"y\" arrays");
  try {
    return PiecewiseLinear(numbers(j["x"], name + ".x"), numbers(j["y"], name + ".y"));
  } catch (const Error& e) {
    fail(ErrorCode::invalid_input, name + ": " + e.what());
  }
}

ordered_json point_json(Point p) { return ordered_json::array({p.x, p.y}); }

ordered_json function_json(const PiecewiseLinear& h) {
  return {{"x", std::vector<double>(h.breakpoints().begin(), h.breakpoints().end())},
          {"y", std::vector<double>(h.values().begin(), h.values().end())}};
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string read_text(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(ErrorCode::io, "cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(ErrorCode::io, "cannot open " + path + " for writing");
  os << content;
  if (!os) fail(ErrorCode::io, "write failed: " + path);
}

LipschitzPair parse_pair_json(const std::string& text) {
  const nlohmann::json j = parse(text);
  if (!j.is_object()) fail(ErrorCode::invalid_input, "pair file must hold an object");
  for (const char* key : {"T0", "T1", "f", "g"}) {
    if (!j.contains(key)) fail(ErrorCode::invalid_input, std::string("missing key \"") + key + "\"");
  }
  if (!j["T0"].is_number() || !j["T1"].is_number())
    fail(ErrorCode::invalid_input, "T0 and T1 must be numbers");
  const double t0 = j["T0"].get<double>();
  const double t1 = j["T1"].get<double>();
  PiecewiseLinear f = function_from(j["f"], "f");
  PiecewiseLinear g = function_from(j["g"], "g");
  if (f.front() != t0 || f.back() != t1)
    fail(ErrorCode::invalid_input, "f breakpoints must span [T0, T1]");
  if (g.front() != t0 || g.back() != t1)
    fail(ErrorCode::invalid_input, "g breakpoints must span [T0, T1]");
  try {
    return LipschitzPair(std::move(f), std::move(g));
  } catch (const Error& e) {
    fail(ErrorCode::invalid_input, e.what());
  }
}

std::string pair_to_json(const LipschitzPair& pair) {
  ordered_json j;
  j["T0"] = pair.t0();
  j["T1"] = pair.t1();
  j["f"] = function_json(pair.lower());
  j["g"] = function_json(pair.upper());
  return j.dump(2) + "\n";
}

ParametricPolyline parse_polyline_json(const std::string& text) {
  const nlohmann::json j = parse(text);
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    fail(ErrorCode::invalid_input, "polyline file needs a \"points\" array");
  std::vector<Point> pts;
  for (const auto& p : j["points"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      fail(ErrorCode::invalid_input, "each point must be [x, y]");
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return ParametricPolyline(std::move(pts));
}

std::string trace_csv(const Trace& trace) {
  std::string out = "t,u,a,b,Qx,Qy\n";
  for (const CornerFrame& fr : trace.frames) {
    const Point q = to_original(trace.family, fr.q);
    out += num(fr.t) + "," + num(fr.u) + "," + num(fr.a) + "," + num(fr.b) + "," + num(q.x) + "," +
           num(q.y) + "\n";
  }
  return out;
}

std::string trace_json(const Trace& trace) {
  ordered_json j;
  j["family"] = trace.family;
  auto& frames = j["frames"] = ordered_json::array();
  for (const CornerFrame& fr : trace.frames) {
    frames.push_back({{"t", fr.t},
                      {"u", fr.u},
                      {"a", fr.a},
                      {"b", fr.b},
                      {"Q", point_json(to_original(trace.family, fr.q))}});
  }
  return j.dump(2) + "\n";
}

std::string squares_json(const std::vector<InscribedSquare>& squares) {
  ordered_json arr = ordered_json::array();
  for (const InscribedSquare& sq : squares) {
    ordered_json v = ordered_json::array();
    for (const Point& p : sq.vertices) v.push_back(point_json(p));
    arr.push_back({{"family", sq.family}, {"t", sq.t}, {"sidelength", sq.sidelength}, {"vertices", v}});
  }
  return arr.dump(2) + "\n";
}

std::string squares_csv(const std::vector<InscribedSquare>& squares) {
  std::string out = "family,t,sidelength,x0,y0,x1,y1,x2,y2,x3,y3\n";
  for (const InscribedSquare& sq : squares) {
    out += std::to_string(sq.family) + "," + num(sq.t) + "," + num(sq.sidelength);
    for (const Point& p : sq.vertices) out += "," + num(p.x) + "," + num(p.y);
    out += "\n";
  }
  return out;
}

std::string cloud_csv(const SoscCloud& cloud) {
  std::string out = "t_index,u_index,Qx,Qy\n";
  for (const SoscSample& s : cloud.samples) {
    out += std::to_string(s.t_index) + "," + std::to_string(s.u_index) + "," + num(s.q.x) + "," +
           num(s.q.y) + "\n";
  }
  return out;
}

std::string cloud_json(const SoscCloud& cloud) {
  ordered_json j;
  j["pitch"] = cloud.pitch;
  auto& arr = j["samples"] = ordered_json::array();
  for (const SoscSample& s : cloud.samples) {
    arr.push_back({{"t_index", s.t_index}, {"u_index", s.u_index}, {"Q", point_json(s.q)}});
  }
  return j.dump(2) + "\n";
}

std::string constants_csv(const std::vector<ConstantParams>& rows) {
  std::string out = "rho,B,D,F,G,cond1,cond2,feasible\n";
  for (const ConstantParams& p : rows) {
    const Feasibility f = constant_feasible(p);
    out += num(p.rho) + "," + num(p.b) + "," + num(p.d) + "," + num(p.f) + "," + num(p.g) + "," +
           num(f.cond1) + "," + num(f.cond2) + "," + (f.feasible ? "1" : "0") + "\n";
  }
  return out;
}

std::string constants_json(const std::vector<ConstantParams>& rows) {
  ordered_json arr = ordered_json::array();
  for (const ConstantParams& p : rows) {
    const Feasibility f = constant_feasible(p);
    arr.push_back({{"rho", p.rho},
                   {"B", p.b},
                   {"D", p.d},
                   {"F", p.f},
                   {"G", p.g},
                   {"cond1", f.cond1},
                   {"cond2", f.cond2},
                   {"feasible", f.feasible}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace sqpeg
