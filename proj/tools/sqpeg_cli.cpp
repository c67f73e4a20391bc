// Command-line front end for the sqpeg library.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "sqpeg/conservation.hpp"
#include "sqpeg/error.hpp"
#include "sqpeg/experiment.hpp"
#include "sqpeg/io.hpp"
#include "sqpeg/sosc.hpp"
#include "sqpeg/square_finder.hpp"
#include "sqpeg/svg.hpp"

namespace {

using namespace sqpeg;

enum Exit { kOk = 0, kInvalid = 1, kFailed = 2, kResolution = 3 };

struct Common {
  std::string input;
  std::string builtin;
  std::size_t grid{0};
  double tol{kDefaultTraceTolerance};
  std::string out;
  std::string format{"csv"};
  std::uint64_t seed{1};
  int depth{4};
  double lip{0.99};
  double shrink{0};
};

void add_common(CLI::App* cmd, Common& c, std::size_t default_grid) {
  c.grid = default_grid;
  cmd->add_option("--input", c.input, "pair or polyline JSON file");
  cmd->add_option("--builtin", c.builtin,
                  "tent | mirror-tent | random | circle | ellipse | square");
  cmd->add_option("--grid", c.grid, "grid points (anchors for polylines)")->capture_default_str();
  cmd->add_option("--tol", c.tol, "solver tolerance")->capture_default_str();
  cmd->add_option("--out", c.out, "output path (stdout if omitted)");
  cmd->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "seed for --builtin random")->capture_default_str();
  cmd->add_option("--depth", c.depth, "dyadic depth for --builtin random")->capture_default_str();
  cmd->add_option("--lip", c.lip, "slope bound for --builtin random")->capture_default_str();
  cmd->add_option("--shrink", c.shrink, "multiply a pair by (1 - epsilon)");
}

using Curve = std::variant<LipschitzPair, ParametricPolyline>;

Curve load(const Common& c) {
  if (!c.input.empty() && !c.builtin.empty())
    fail(ErrorCode::invalid_input, "give either --input or --builtin, not both");
  std::optional<Curve> curve;
  if (!c.input.empty()) {
    const std::string text = read_text(c.input);
    if (text.find("\"points\"") != std::string::npos)
      curve.emplace(parse_polyline_json(text));
    else
      curve.emplace(parse_pair_json(text));
  } else {
    const std::string& b = c.builtin.empty() ? std::string("tent") : c.builtin;
    if (b == "tent") curve.emplace(tent_pair());
    else if (b == "mirror-tent") curve.emplace(mirror_tent_pair());
    else if (b == "random") curve.emplace(random_pair(c.seed, c.depth, c.lip));
    else if (b == "circle") curve.emplace(circle_polyline());
    else if (b == "ellipse") curve.emplace(ellipse_polyline());
    else if (b == "square") curve.emplace(unit_square_polyline());
    else fail(ErrorCode::invalid_input, "unknown builtin '" + b + "'");
  }
  if (c.shrink != 0) {
    auto* pair = std::get_if<LipschitzPair>(&*curve);
    if (!pair) fail(ErrorCode::invalid_input, "--shrink applies to pairs only");
    *curve = shrink(*pair, c.shrink);
  }
  return std::move(*curve);
}

const LipschitzPair& need_pair(const Curve& c, const char* cmd) {
  if (auto* p = std::get_if<LipschitzPair>(&c)) return *p;
  fail(ErrorCode::invalid_input, std::string(cmd) + " needs a function pair, not a polyline");
}

const ParametricPolyline& need_polyline(const Curve& c, const char* cmd) {
  if (auto* p = std::get_if<ParametricPolyline>(&c)) return *p;
  fail(ErrorCode::invalid_input, std::string(cmd) + " needs a polyline, not a function pair");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty())
    std::cout << text;
  else
    write_text(c.out, text);
}

std::string fmt(double v) { return format_double(v); }

int run(int argc, char** argv) {
  CLI::App app{"Inscribed squares in curves made of two Lipschitz graphs"};
  app.require_subcommand(1);

  Common tr_c, sq_c, so_c, co_c, ct_c, re_c;
  int family = 1;
  auto* tr = app.add_subcommand("trace", "opposite-corner trace of one family");
  add_common(tr, tr_c, kDefaultTraceGrid);
  tr->add_option("--family", family, "1-4")->check(CLI::Range(1, 4))->capture_default_str();

  auto* sq = app.add_subcommand("squares", "inscribed squares of a pair or polyline");
  add_common(sq, sq_c, kDefaultSquareGrid);

  auto* so = app.add_subcommand("sosc", "opposite square corner cloud of a polyline");
  add_common(so, so_c, 256);

  double from = 0, to = 0;
  std::size_t cells = 0;
  auto* co = app.add_subcommand("conserve", "conservation identity residuals under refinement");
  add_common(co, co_c, 0);
  co->add_option("--from", from, "start parameter (default T0)");
  co->add_option("--to", to, "end parameter (default T1)");
  co->add_option("--cells", cells, "finest cell count, 2^k (default 8192)");

  std::vector<double> rhos{0.005, 0.01, 0.015, 0.018, 0.019, 0.02, 0.05, 0.1};
  std::vector<double> bs{4};
  auto* ct = app.add_subcommand("constants", "end-game constants and feasibility on a grid");
  ct->add_option("--rho", rhos, "rho values in (0, 1/8)")->delimiter(',');
  ct->add_option("--B", bs, "B values >= 2")->delimiter(',');
  ct->add_option("--out", ct_c.out, "output path");
  ct->add_option("--format", ct_c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  ExperimentConfig cfg;
  std::string ex_out, ex_format = "json";
  auto* ex = app.add_subcommand("experiment", "random-pair experiment");
  ex->add_option("--seed", cfg.seed)->capture_default_str();
  ex->add_option("--trials", cfg.trials)->capture_default_str();
  ex->add_option("--depth", cfg.depth, "depth, or max depth with --vary-depth")
      ->capture_default_str();
  ex->add_flag("--vary-depth", cfg.vary_depth, "trial i uses depth 1 + i mod depth");
  ex->add_option("--lip", cfg.lip)->capture_default_str();
  ex->add_option("--epsilon", cfg.epsilon)->capture_default_str();
  ex->add_option("--grid", cfg.grid_n)->capture_default_str();
  ex->add_option("--tol", cfg.tol)->capture_default_str();
  ex->add_option("--threads", cfg.threads, "0 = all cores")->capture_default_str();
  ex->add_option("--out", ex_out, "report path (stdout if omitted)");
  ex->add_option("--format", ex_format)->check(CLI::IsMember({"csv", "json"}));

  auto* re = app.add_subcommand("render", "SVG of a curve with its traces and squares");
  add_common(re, re_c, kDefaultTraceGrid);
  re->get_option("--out")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  if (tr->parsed()) {
    const Curve curve = load(tr_c);
    const LipschitzPair& pair = need_pair(curve, "trace");
    const Trace t = trace(pair, tr_c.grid, family, tr_c.tol);
    emit(tr_c, tr_c.format == "json" ? trace_json(t) : trace_csv(t));
  } else if (sq->parsed()) {
    const Curve curve = load(sq_c);
    std::vector<InscribedSquare> found;
    if (auto* pair = std::get_if<LipschitzPair>(&curve))
      found = find_squares(*pair, sq_c.grid, {1, 2, 3, 4}, sq_c.tol);
    else
      found = inscribed_squares_general(std::get<ParametricPolyline>(curve), sq_c.grid,
                                        std::max(sq_c.tol, kVerifyTolerance));
    emit(sq_c, sq_c.format == "json" ? squares_json(found) : squares_csv(found));
  } else if (so->parsed()) {
    const Curve curve = load(so_c);
    const ParametricPolyline& poly = need_polyline(curve, "sosc");
    const SoscCloud cloud = sosc_cloud(poly, so_c.grid, std::max(so_c.tol, kVerifyTolerance));
    emit(so_c, so_c.format == "json" ? cloud_json(cloud) : cloud_csv(cloud));
  } else if (co->parsed()) {
    const Curve curve = load(co_c);
    const LipschitzPair& pair = need_pair(curve, "conserve");
    const double lo = co->count("--from") ? from : pair.t0();
    const double hi = co->count("--to") ? to : pair.t1();
    const std::size_t finest = cells ? cells : 8192;
    std::string out = co_c.format == "json" ? "[\n" : "cells,residual_trapezoid,residual_graph\n";
    bool first = true;
    for (std::size_t n = std::max<std::size_t>(finest / 8, 1); n <= finest; n *= 2) {
      const QuadrupleTrace q = extract_quadruple(pair, lo, hi, n, co_c.tol);
      const double r_all = conservation_residual(q);
      const double r_graph = conservation_residual(q, pair);
      if (co_c.format == "json") {
        out += std::string(first ? "" : ",\n") + "  {\"cells\": " + std::to_string(n) +
               ", \"residual_trapezoid\": " + fmt(r_all) + ", \"residual_graph\": " +
               fmt(r_graph) + "}";
      } else {
        out += std::to_string(n) + "," + fmt(r_all) + "," + fmt(r_graph) + "\n";
      }
      first = false;
    }
    if (co_c.format == "json") out += "\n]\n";
    emit(co_c, out);
  } else if (ct->parsed()) {
    std::vector<ConstantParams> rows;
    for (double b : bs) {
      for (double r : rhos) rows.push_back(ConstantParams::make(r, b));
    }
    emit(ct_c, ct_c.format == "json" ? constants_json(rows) : constants_csv(rows));
  } else if (ex->parsed()) {
    const ExperimentReport rep = run_experiment(cfg);
    const std::string text = ex_format == "csv" ? rep.to_csv() : rep.to_json();
    if (ex_out.empty())
      std::cout << text;
    else
      write_text(ex_out, text);
    std::fprintf(stderr, "status %s, min ratio %.6f, min margin %.6f, below 0.5: %d\n",
                 status_name(rep.status), rep.min_ratio, rep.min_margin, rep.below_half);
    if (!rep.status_detail.empty()) std::fprintf(stderr, "%s\n", rep.status_detail.c_str());
    if (rep.status == ExperimentStatus::failed) return kFailed;
    if (rep.status == ExperimentStatus::resolution_insufficient) return kResolution;
  } else if (re->parsed()) {
    const Curve curve = load(re_c);
    SvgScene scene;
    if (auto* pair = std::get_if<LipschitzPair>(&curve)) {
      scene.curves = pair_curves(*pair);
      for (int fam = 1; fam <= 4; ++fam) {
        const Trace t = trace(*pair, re_c.grid, fam, re_c.tol);
        std::vector<Point> q;
        for (const CornerFrame& fr : t.frames) {
          if (!fr.degenerate()) q.push_back(to_original(fam, fr.q));
        }
        scene.traces.push_back(std::move(q));
      }
      scene.squares = find_squares(*pair, kDefaultSquareGrid, {1, 2, 3, 4}, re_c.tol);
    } else {
      const auto& poly = std::get<ParametricPolyline>(curve);
      std::vector<Point> outline = poly.points();
      outline.push_back(outline.front());
      scene.curves.push_back(std::move(outline));
      const std::size_t anchors = re_c.grid == kDefaultTraceGrid ? 256 : re_c.grid;
      const double tol = std::max(re_c.tol, kVerifyTolerance);
      for (const SoscSample& s : sosc_cloud(poly, anchors, tol).samples) scene.cloud.push_back(s.q);
      scene.squares = inscribed_squares_general(poly, anchors, tol);
    }
    emit_svg(scene, re_c.out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sqpeg::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code() == sqpeg::ErrorCode::resolution_insufficient ? kResolution : kInvalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalid;
  }
}
