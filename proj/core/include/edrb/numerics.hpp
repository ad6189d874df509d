#pragma once

#include <functional>

namespace edrb {

struct MinimizeResult {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

// Golden-section search for a minimum of a unimodal function on [lo, hi].
// Stops when the bracket width is below rel_tol * max(|x|, 1).
MinimizeResult golden_section_minimize(const std::function<double(double)>& f,
                                       double lo, double hi, double rel_tol,
                                       int max_iter = 200);

// Evaluates f on `grid_points` evenly spaced points of [lo, hi], then refines
// the best point with golden-section search between its neighbours. Used on
// objectives that are unimodal only near the optimum.
MinimizeResult scan_then_golden(const std::function<double(double)>& f,
                                double lo, double hi, int grid_points,
                                double rel_tol);

// Root of f in [lo, hi] (f(lo), f(hi) of opposite sign). Throws
// BracketFailure when there is no sign change.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol = 1e-12);

}  // namespace edrb
