#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sqpeg {

// A 1-Lipschitz piecewise-linear function given by its breakpoints. Outside
// [front(), back()] it is extended by its boundary values.
class PiecewiseLinear {
 public:
  // Throws invalid_input if the breakpoints are not strictly increasing, there
  // are fewer than two, a value is non-finite, or a slope exceeds 1.
  PiecewiseLinear(std::vector<double> xs, std::vector<double> ys);

  double operator()(double t) const;

  // Signed integral over [from, to] including the constant extension.
  double integral(double from, double to) const;

  // Exact max |slope| over all segments.
  double lipschitz_constant() const;

  double front() const { return xs_.front(); }
  double back() const { return xs_.back(); }
  double min_value() const;
  double max_value() const;
  std::span<const double> breakpoints() const { return xs_; }
  std::span<const double> values() const { return ys_; }

  PiecewiseLinear scaled(double factor) const;
  // t -> h(-t)
  PiecewiseLinear reflected() const;
  // t -> -h(t)
  PiecewiseLinear negated() const;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

 private:
  double antiderivative(double t) const;

  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<double> cumulative_;  // integral from xs_[0] to xs_[i]
};

struct MaxGap {
  double value{0};     // M
  double abscissa{0};  // T, first argmax
};

// Lower/upper function pair (f, g) sharing the domain [T0, T1] and its endpoint
// ordinates, with g > f strictly inside.
class LipschitzPair {
 public:
  // Validates every invariant and reports the first one violated.
  LipschitzPair(PiecewiseLinear lower, PiecewiseLinear upper);

  const PiecewiseLinear& lower() const { return f_; }
  const PiecewiseLinear& upper() const { return g_; }
  double t0() const { return f_.front(); }
  double t1() const { return f_.back(); }
  MaxGap max_gap() const { return gap_; }
  double lipschitz_constant() const;

  // Sorted union of the breakpoints of f and g.
  std::vector<double> merged_breakpoints() const;

  friend bool operator==(const LipschitzPair& a, const LipschitzPair& b) {
    return a.f_ == b.f_ && a.g_ == b.g_;
  }

 private:
  PiecewiseLinear f_;
  PiecewiseLinear g_;
  MaxGap gap_;
};

MaxGap max_gap(const LipschitzPair& pair);

// Random pair over the dyadic partition of [0, 1] into 2^depth cells with
// slopes bounded by lip. Deterministic in seed.
LipschitzPair random_pair(std::uint64_t seed, int depth, double lip);

// Both functions multiplied by (1 - epsilon); epsilon must lie in (0, 1).
LipschitzPair shrink(const LipschitzPair& pair, double epsilon);

// Fixtures on [0, 2]: f = 0 under the unit tent, and -tent under tent.
PiecewiseLinear unit_tent();
LipschitzPair tent_pair();
LipschitzPair mirror_tent_pair();

}  // namespace sqpeg
