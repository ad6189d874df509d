#include "edrb/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/tools/roots.hpp>

#include "edrb/errors.hpp"

namespace edrb {
namespace {

constexpr double kInvPhi = 0.6180339887498949;  // 1 / golden ratio

}  // namespace

MinimizeResult golden_section_minimize(const std::function<double(double)>& f,
                                       double lo, double hi, double rel_tol,
                                       int max_iter) {
  if (!(hi > lo)) throw DomainError("golden_section_minimize: empty bracket");
  MinimizeResult r;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  r.evaluations = 2;
  for (int i = 0; i < max_iter; ++i) {
    if (b - a <= rel_tol * std::max(1.0, std::abs(0.5 * (a + b)))) break;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++r.evaluations;
  }
  if (fc <= fd) {
    r.x = c;
    r.value = fc;
  } else {
    r.x = d;
    r.value = fd;
  }
  return r;
}

MinimizeResult scan_then_golden(const std::function<double(double)>& f,
                                double lo, double hi, int grid_points,
                                double rel_tol) {
  if (grid_points < 3) throw DomainError("scan_then_golden: need >= 3 grid points");
  const double step = (hi - lo) / (grid_points - 1);
  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_points; ++i) {
    const double v = f(lo + i * step);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  if (!std::isfinite(best_value)) {
    throw NonConvergence("objective is not finite anywhere on the search grid");
  }
  const double a = lo + std::max(0, best - 1) * step;
  const double b = lo + std::min(grid_points - 1, best + 1) * step;
  MinimizeResult r = golden_section_minimize(f, a, b, rel_tol);
  r.evaluations += grid_points;
  if (best_value < r.value) {
    r.x = lo + best * step;
    r.value = best_value;
  }
  return r;
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol) {
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw BracketFailure("no sign change in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
  std::uintmax_t max_iter = 200;
  auto tol = [rel_tol](double a, double b) {
    return std::abs(b - a) <= rel_tol * std::max(std::abs(a), std::abs(b));
  };
  const auto [a, b] =
      boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, max_iter);
  return 0.5 * (a + b);
}

}  // namespace edrb
