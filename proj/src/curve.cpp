#include "sqpeg/curve.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "sqpeg/error.hpp"

namespace sqpeg {

namespace {

// Slopes are recomputed from stored ordinates, so exact 1-Lipschitz data can
// come back a few ulps steeper.
constexpr double kSlopeSlack = 1e-12;

std::string at(std::size_t i) { return " at breakpoint " + std::to_string(i); }

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size())
    fail(ErrorCode::invalid_input, "breakpoint and value counts differ");
  if (xs_.size() < 2) fail(ErrorCode::invalid_input, "need at least 2 breakpoints");
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i]))
      fail(ErrorCode::invalid_input, "non-finite data" + at(i));
    if (i > 0 && !(xs_[i] > xs_[i - 1]))
      fail(ErrorCode::invalid_input, "breakpoints not strictly increasing" + at(i));
  }
  cumulative_.assign(xs_.size(), 0.0);
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    const double dx = xs_[i] - xs_[i - 1];
    if (std::abs(ys_[i] - ys_[i - 1]) > (1.0 + kSlopeSlack) * dx)
      fail(ErrorCode::invalid_input, "slope exceeds 1 (not 1-Lipschitz)" + at(i));
    cumulative_[i] = cumulative_[i - 1] + 0.5 * dx * (ys_[i] + ys_[i - 1]);
  }
}

double PiecewiseLinear::operator()(double t) const {
  if (t <= xs_.front()) return ys_.front();
  if (t >= xs_.back()) return ys_.back();
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  const double w = (t - xs_[i]) / (xs_[i + 1] - xs_[i]);
  return ys_[i] + w * (ys_[i + 1] - ys_[i]);
}

double PiecewiseLinear::antiderivative(double t) const {
  if (t <= xs_.front()) return (t - xs_.front()) * ys_.front();
  if (t >= xs_.back()) return cumulative_.back() + (t - xs_.back()) * ys_.back();
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  return cumulative_[i] + 0.5 * (t - xs_[i]) * (ys_[i] + (*this)(t));
}

double PiecewiseLinear::integral(double from, double to) const {
  if (from == to) return 0.0;
  return antiderivative(to) - antiderivative(from);
}

double PiecewiseLinear::lipschitz_constant() const {
  double lip = 0.0;
  for (std::size_t i = 1; i < xs_.size(); ++i)
    lip = std::max(lip, std::abs(ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1]));
  return lip;
}

double PiecewiseLinear::min_value() const { return *std::min_element(ys_.begin(), ys_.end()); }
double PiecewiseLinear::max_value() const { return *std::max_element(ys_.begin(), ys_.end()); }

PiecewiseLinear PiecewiseLinear::scaled(double factor) const {
  std::vector<double> ys = ys_;
  for (double& y : ys) y *= factor;
  return {xs_, std::move(ys)};
}

PiecewiseLinear PiecewiseLinear::reflected() const {
  std::vector<double> xs(xs_.rbegin(), xs_.rend());
  for (double& x : xs) x = -x;
  return {std::move(xs), std::vector<double>(ys_.rbegin(), ys_.rend())};
}

PiecewiseLinear PiecewiseLinear::negated() const {
  std::vector<double> ys = ys_;
  for (double& y : ys) y = -y;
  return {xs_, std::move(ys)};
}

LipschitzPair::LipschitzPair(PiecewiseLinear lower, PiecewiseLinear upper)
    : f_(std::move(lower)), g_(std::move(upper)) {
  if (f_.front() != g_.front() || f_.back() != g_.back())
    fail(ErrorCode::invalid_input, "f and g are defined on different intervals");
  if (f_(t0()) != g_(t0())) fail(ErrorCode::invalid_input, "f(T0) != g(T0)");
  if (f_(t1()) != g_(t1())) fail(ErrorCode::invalid_input, "f(T1) != g(T1)");

  // g - f is piecewise linear on the merged partition, so checking it at the
  // merged breakpoints is exact.
  gap_ = {0.0, t0()};
  for (double t : merged_breakpoints()) {
    if (t == t0() || t == t1()) continue;
    const double d = g_(t) - f_(t);
    if (!(d > 0))
      fail(ErrorCode::invalid_input,
           "g <= f at interior abscissa " + std::to_string(t));
    if (d > gap_.value) gap_ = {d, t};
  }
  if (!(gap_.value > 0))
    fail(ErrorCode::invalid_input, "degenerate pair: g coincides with f");
}

double LipschitzPair::lipschitz_constant() const {
  return std::max(f_.lipschitz_constant(), g_.lipschitz_constant());
}

std::vector<double> LipschitzPair::merged_breakpoints() const {
  std::vector<double> out;
  const auto fx = f_.breakpoints();
  const auto gx = g_.breakpoints();
  std::set_union(fx.begin(), fx.end(), gx.begin(), gx.end(), std::back_inserter(out));
  return out;
}

MaxGap max_gap(const LipschitzPair& pair) { return pair.max_gap(); }

LipschitzPair random_pair(std::uint64_t seed, int depth, double lip) {
  require(depth >= 1 && depth <= 24, "random_pair: depth must lie in [1, 24]");
  require(lip > 0 && lip <= 1, "random_pair: lip must lie in (0, 1]");

  const std::size_t cells = std::size_t{1} << depth;
  const double h = 1.0 / static_cast<double>(cells);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> slope(-lip, lip);
  std::uniform_real_distribution<double> tilt(-0.5 * lip, 0.5 * lip);

  std::vector<double> xs(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) xs[i] = static_cast<double>(i) * h;

  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<double> sf(cells), sg(cells);
    for (std::size_t i = 0; i < cells; ++i) {
      sf[i] = slope(rng);
      sg[i] = slope(rng);
    }
    // Zero-mean slopes close both functions at the right endpoint; a common
    // tilt keeps them closed and leaves g - f untouched.
    const double c = tilt(rng);
    const auto center = [&](std::vector<double>& s) {
      double mean = 0;
      for (double v : s) mean += v;
      mean /= static_cast<double>(cells);
      for (double& v : s) v += c - mean;
    };
    center(sf);
    center(sg);

    // Cycle lemma: starting the increments of g - f right after the minimum of
    // its partial sums makes every interior partial sum non-negative.
    std::size_t start = 0;
    double run = 0, lowest = 0;
    for (std::size_t i = 0; i < cells; ++i) {
      run += sg[i] - sf[i];
      if (run < lowest) {
        lowest = run;
        start = i + 1;
      }
    }
    start %= cells;
    std::rotate(sf.begin(), sf.begin() + static_cast<std::ptrdiff_t>(start), sf.end());
    std::rotate(sg.begin(), sg.begin() + static_cast<std::ptrdiff_t>(start), sg.end());

    double steepest = 0;
    for (std::size_t i = 0; i < cells; ++i)
      steepest = std::max({steepest, std::abs(sf[i]), std::abs(sg[i])});
    const double scale = steepest > lip ? lip / steepest : 1.0;

    std::vector<double> fy(cells + 1, 0.0), gy(cells + 1, 0.0);
    bool positive = true;
    for (std::size_t i = 0; i < cells; ++i) {
      fy[i + 1] = fy[i] + scale * sf[i] * h;
      gy[i + 1] = gy[i] + scale * sg[i] * h;
      if (i + 1 < cells && !(gy[i + 1] - fy[i + 1] > 1e-12)) positive = false;
    }
    gy[cells] = fy[cells];
    if (!positive) continue;
    return {PiecewiseLinear(xs, std::move(fy)), PiecewiseLinear(xs, std::move(gy))};
  }
  fail(ErrorCode::internal, "random_pair: no valid pair after bounded retries");
}

LipschitzPair shrink(const LipschitzPair& pair, double epsilon) {
  require(epsilon > 0 && epsilon < 1, "shrink: epsilon must lie in (0, 1)");
  const double k = 1.0 - epsilon;
  return {pair.lower().scaled(k), pair.upper().scaled(k)};
}

PiecewiseLinear unit_tent() { return {{0.0, 1.0, 2.0}, {0.0, 1.0, 0.0}}; }

LipschitzPair tent_pair() {
  return {PiecewiseLinear({0.0, 2.0}, {0.0, 0.0}), unit_tent()};
}

LipschitzPair mirror_tent_pair() { return {unit_tent().negated(), unit_tent()}; }

}  // namespace sqpeg
