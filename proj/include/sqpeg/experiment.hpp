#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sqpeg {

inline constexpr double kTheoremConstant = 0.018;
inline constexpr double kConjecturedConstant = 0.5;

struct ExperimentConfig {
  std::uint64_t seed{42};
  int trials{200};
  int depth{6};
  // Trial i uses depth 1 + (i mod depth) instead of a fixed depth.
  bool vary_depth{false};
  double lip{0.99};
  double epsilon{0.01};
  std::size_t grid_n{8193};
  double tol{1e-12};
  unsigned threads{0};  // 0 picks hardware_concurrency

  // Throws precondition on an invalid field.
  void validate() const;
};

struct TrialRecord {
  int trial{0};
  std::uint64_t seed{0};
  int depth{0};
  double m{0};
  std::array<double, 4> best_by_family{};  // 0 when a family found nothing
  double best_side{0};
  double best_ratio{0};
  double min_ratio{0};  // smallest ratio over every detected square
  std::size_t squares{0};
  bool refined{false};  // needed the 4x grid
  double margin() const { return best_ratio - kTheoremConstant; }
};

enum class ExperimentStatus { ok, failed, resolution_insufficient };

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialRecord> records;
  double min_ratio{0};
  double min_margin{0};
  int below_half{0};  // trials with best ratio < 0.5 - 1e-3
  std::vector<std::uint64_t> below_half_seeds;
  ExperimentStatus status{ExperimentStatus::ok};
  std::string status_detail;

  std::string to_json() const;
  std::string to_csv() const;
};

const char* status_name(ExperimentStatus s);

ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace sqpeg
