#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "sqpeg/corner_trace.hpp"
#include "sqpeg/curve.hpp"
#include "sqpeg/geometry.hpp"

namespace sqpeg {

inline constexpr std::size_t kDefaultSquareGrid = 8193;
inline constexpr double kVerifyTolerance = 1e-9;

struct InscribedSquare {
  // Cyclic order O, P, Q, R of the generating frame, in original coordinates.
  std::array<Point, 4> vertices;
  double sidelength{0};
  int family{0};  // 1-4 for graph pairs, 0 for general polylines
  double t{0};
  double a{0};
  double b{0};
};

// f(t) + a + b - g(t + a - b): zero iff Q lies on the upper graph.
double vertical_defect(const LipschitzPair& pair, const CornerFrame& frame);

// Squares arising as sign changes of the vertical defect along each family
// trace. Sorted by sidelength, largest first. If no square is found on the
// initial grid, the scan is repeated once on a 4x finer grid.
std::vector<InscribedSquare> find_squares(const LipschitzPair& pair,
                                          std::size_t n = kDefaultSquareGrid,
                                          std::vector<int> families = {1, 2, 3, 4},
                                          double tol = kDefaultTraceTolerance);

struct SquareSearch {
  std::vector<InscribedSquare> squares;
  std::size_t grid{0};   // grid that produced the squares
  bool refined{false};   // true if the 4x retry was needed
};

// find_squares with the grid actually used.
SquareSearch search_squares(const LipschitzPair& pair, std::size_t n = kDefaultSquareGrid,
                            std::vector<int> families = {1, 2, 3, 4},
                            double tol = kDefaultTraceTolerance);

// Checks vertices on the graphs over [T0, T1], equal sides, equal diagonals
// and the stored sidelength, all at tolerance tol.
bool verify_square(const LipschitzPair& pair, const InscribedSquare& sq,
                   double tol = kVerifyTolerance);

// Shared square-shape test for any curve.
bool is_square(const std::array<Point, 4>& v, double sidelength, double tol);

struct CrossingWindow {
  double rho{0};
  double m{0};  // max gap M
  double t_max{0};  // T
  double t0{0}, t1{0};
  double tau0{0}, tau1{0};
  double a0{0}, a1{0};
  int sigma{1};
  double signed_area{0};
  double area{0};
};

// Window between the last small-square crossing before T and the first one
// after it, with the area enclosed by Q([t0, t1]) and the upper graph over
// [tau0, tau1]. Requires rho in (0, 1/8) and a pair with Lipschitz constant
// below 1.
CrossingWindow crossing_window(const LipschitzPair& pair, double rho,
                               std::size_t n = kDefaultSquareGrid,
                               double tol = kDefaultTraceTolerance);

}  // namespace sqpeg
