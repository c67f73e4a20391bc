#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sqpeg/curve.hpp"

namespace testing {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  // Random PL function on [c, d] with `pieces` random-width pieces and slopes
  // in [-lip, lip].
  sqpeg::PiecewiseLinear pl(double c, double d, int pieces, double lip, double y0 = 0) {
    std::vector<double> cuts{c, d};
    for (int i = 1; i < pieces; ++i) cuts.push_back(uniform(c, d));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<double> ys{y0};
    for (std::size_t i = 1; i < cuts.size(); ++i)
      ys.push_back(ys.back() + uniform(-lip, lip) * (cuts[i] - cuts[i - 1]));
    return {cuts, ys};
  }

  sqpeg::LipschitzPair shrunk_pair(double eps) {
    const auto seed = static_cast<std::uint64_t>(integer(0, 1 << 30));
    return sqpeg::shrink(sqpeg::random_pair(seed, integer(1, 6), 0.99), eps);
  }
};

// Independent integral: exact Simpson per piece of the merged partition.
inline double oracle_integral(const sqpeg::PiecewiseLinear& h, double c, double d) {
  if (c == d) return 0;
  const double sign = c < d ? 1 : -1;
  const double lo = std::min(c, d), hi = std::max(c, d);
  std::vector<double> cuts{lo, hi};
  for (double x : h.breakpoints())
    if (x > lo && x < hi) cuts.push_back(x);
  std::sort(cuts.begin(), cuts.end());
  double sum = 0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const double a = cuts[i - 1], b = cuts[i];
    sum += (b - a) / 6 * (h(a) + 4 * h(0.5 * (a + b)) + h(b));
  }
  return sign * sum;
}

}  // namespace testing
