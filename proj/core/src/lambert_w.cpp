#include "edrb/lambert_w.hpp"

#include <cmath>
#include <numbers>

#include "edrb/errors.hpp"

namespace edrb {
namespace {

constexpr double kMinusInvE = -1.0 / std::numbers::e;
constexpr int kMaxIter = 64;

// Halley iteration on w*exp(w) - x.
double halley(double x, double w) {
  for (int i = 0; i < kMaxIter; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0) break;
    const double step = f / denom;
    double next = w - step;
    if (next > -1.0) next = 0.5 * (w - 1.0);  // stay on the lower branch
    if (std::abs(next - w) <= 4e-16 * std::abs(next)) return next;
    w = next;
  }
  return w;
}

// Halley iteration on w + log(-w) - log_neg_x, well conditioned far from the
// branch point.
double halley_log(double log_neg_x, double w) {
  for (int i = 0; i < kMaxIter; ++i) {
    const double h = w + std::log(-w) - log_neg_x;
    const double h1 = (w + 1.0) / w;
    const double h2 = -1.0 / (w * w);
    const double step = 2.0 * h * h1 / (2.0 * h1 * h1 - h * h2);
    double next = w - step;
    if (next > -1.0) next = 0.5 * (w - 1.0);
    if (std::abs(next - w) <= 4e-16 * std::abs(next)) return next;
    w = next;
  }
  return w;
}

double asymptotic_guess(double log_neg_x) {
  const double l1 = log_neg_x;
  const double l2 = std::log(-l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

double lambert_w_minus1(double x) {
  if (!(x >= kMinusInvE) || !(x < 0.0)) {
    // Allow the rounding of -1/e itself.
    if (x < kMinusInvE && x > kMinusInvE * (1.0 + 1e-15)) return -1.0;
    throw DomainError("lambert_w_minus1: argument outside [-1/e, 0)");
  }
  const double q = 1.0 + std::numbers::e * x;  // distance from branch point
  if (q <= 0.0) return -1.0;
  double w0;
  if (q < 0.25) {
    const double p = -std::sqrt(2.0 * q);
    w0 = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else {
    w0 = asymptotic_guess(std::log(-x));
    if (w0 > -1.0) w0 = -1.5;
  }
  return halley(x, w0);
}

double lambert_w_minus1_from_log(double log_neg_x) {
  if (!(log_neg_x <= -1.0)) {
    throw DomainError("lambert_w_minus1_from_log: log(-x) must be <= -1");
  }
  if (log_neg_x > -700.0) return lambert_w_minus1(-std::exp(log_neg_x));
  return halley_log(log_neg_x, asymptotic_guess(log_neg_x));
}

}  // namespace edrb
