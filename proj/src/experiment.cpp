#include "sqpeg/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <limits>
#include <thread>

#include <json.hpp>

#include "sqpeg/curve.hpp"
#include "sqpeg/error.hpp"
#include "sqpeg/io.hpp"
#include "sqpeg/square_finder.hpp"

namespace sqpeg {

namespace {

constexpr double kFloorSlack = 1e-9;
constexpr double kHalfSlack = 1e-3;

bool power_of_two_plus_one(std::size_t n) {
  const std::size_t k = n - 1;
  return n >= 3 && (k & (k - 1)) == 0;
}

TrialRecord run_trial(const ExperimentConfig& c, int i) {
  TrialRecord rec;
  rec.trial = i;
  rec.seed = c.seed + static_cast<std::uint64_t>(i);
  rec.depth = c.vary_depth ? 1 + i % c.depth : c.depth;

  LipschitzPair pair = random_pair(rec.seed, rec.depth, c.lip);
  if (c.epsilon > 0) pair = shrink(pair, c.epsilon);
  rec.m = pair.max_gap().value;

  const SquareSearch found = search_squares(pair, c.grid_n, {1, 2, 3, 4}, c.tol);
  rec.refined = found.refined;
  rec.squares = found.squares.size();
  rec.min_ratio = std::numeric_limits<double>::infinity();
  for (const InscribedSquare& sq : found.squares) {
    double& best = rec.best_by_family[static_cast<std::size_t>(sq.family - 1)];
    best = std::max(best, sq.sidelength);
    rec.best_side = std::max(rec.best_side, sq.sidelength);
    rec.min_ratio = std::min(rec.min_ratio, sq.sidelength / rec.m);
  }
  if (found.squares.empty()) rec.min_ratio = 0;
  rec.best_ratio = rec.best_side / rec.m;
  return rec;
}

std::string num(double v) { return format_double(v); }

}  // namespace

void ExperimentConfig::validate() const {
  require(trials >= 1, "experiment: trials must be >= 1");
  require(depth >= 1 && depth <= 12, "experiment: depth must lie in [1, 12]");
  require(lip > 0 && lip <= 1, "experiment: lip must lie in (0, 1]");
  require(epsilon >= 0 && epsilon < 0.5, "experiment: epsilon must lie in [0, 0.5)");
  require(power_of_two_plus_one(grid_n), "experiment: grid must be 2^k + 1");
  require(tol > 0, "experiment: tol must be positive");
}

const char* status_name(ExperimentStatus s) {
  switch (s) {
    case ExperimentStatus::ok: return "OK";
    case ExperimentStatus::failed: return "FAILED";
    case ExperimentStatus::resolution_insufficient: return "RESOLUTION_INSUFFICIENT";
  }
  return "?";
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  const int n = config.trials;
  std::vector<TrialRecord> records(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));

  unsigned workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1u, static_cast<unsigned>(n));
  auto work = [&](unsigned w) {
    for (int i = static_cast<int>(w); i < n; i += static_cast<int>(workers)) {
      try {
        records[static_cast<std::size_t>(i)] = run_trial(config, i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ExperimentReport rep;
  rep.config = config;
  rep.records = std::move(records);
  rep.min_ratio = std::numeric_limits<double>::infinity();
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (const TrialRecord& r : rep.records) {
    rep.min_ratio = std::min(rep.min_ratio, r.best_ratio);
    rep.min_margin = std::min(rep.min_margin, r.margin());
    if (r.best_ratio < kConjecturedConstant - kHalfSlack) {
      ++rep.below_half;
      rep.below_half_seeds.push_back(r.seed);
    }
    if (rep.status == ExperimentStatus::failed) continue;
    if (r.squares > 0 && r.best_side < kTheoremConstant * r.m - kFloorSlack) {
      rep.status = ExperimentStatus::failed;
      rep.status_detail = "trial " + std::to_string(r.trial) + " (seed " +
                          std::to_string(r.seed) + ") best ratio " + num(r.best_ratio) +
                          " below the 0.018 floor";
    } else if (r.squares == 0 && rep.status == ExperimentStatus::ok) {
      rep.status = ExperimentStatus::resolution_insufficient;
      rep.status_detail = "trial " + std::to_string(r.trial) + " (seed " +
                          std::to_string(r.seed) + ") found no square at grid " +
                          std::to_string(4 * (config.grid_n - 1) + 1);
    }
  }
  return rep;
}

std::string ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["config"] = {{"seed", config.seed},       {"trials", config.trials},
                 {"depth", config.depth},     {"vary_depth", config.vary_depth},
                 {"lip", config.lip},         {"epsilon", config.epsilon},
                 {"grid_n", config.grid_n},   {"tol", config.tol}};
  j["status"] = status_name(status);
  j["status_detail"] = status_detail;
  j["min_ratio"] = min_ratio;
  j["min_margin"] = min_margin;
  j["below_half"] = below_half;
  j["below_half_seeds"] = below_half_seeds;
  auto& arr = j["records"] = nlohmann::ordered_json::array();
  for (const TrialRecord& r : records) {
    arr.push_back({{"trial", r.trial},
                   {"seed", r.seed},
                   {"depth", r.depth},
                   {"M", r.m},
                   {"best_by_family", r.best_by_family},
                   {"best_side", r.best_side},
                   {"best_ratio", r.best_ratio},
                   {"min_ratio", r.min_ratio},
                   {"squares", r.squares},
                   {"refined", r.refined}});
  }
  return j.dump(2) + "\n";
}

std::string ExperimentReport::to_csv() const {
  std::string out = "# seed=" + std::to_string(config.seed) +
                    " trials=" + std::to_string(config.trials) +
                    " depth=" + std::to_string(config.depth) +
                    (config.vary_depth ? " (varied)" : "") + " lip=" + num(config.lip) +
                    " epsilon=" + num(config.epsilon) + " grid=" + std::to_string(config.grid_n) +
                    " status=" + status_name(status) + "\n";
  out += "trial,seed,depth,M,best_f1,best_f2,best_f3,best_f4,best_side,best_ratio,min_ratio,"
         "squares,refined\n";
  for (const TrialRecord& r : records) {
    out += std::to_string(r.trial) + "," + std::to_string(r.seed) + "," +
           std::to_string(r.depth) + "," + num(r.m);
    for (double b : r.best_by_family) out += "," + num(b);
    out += "," + num(r.best_side) + "," + num(r.best_ratio) + "," + num(r.min_ratio) + "," +
           std::to_string(r.squares) + "," + (r.refined ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace sqpeg
