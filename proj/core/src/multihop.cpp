#include "edrb/multihop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "edrb/errors.hpp"
#include "edrb/numerics.hpp"

namespace edrb {
namespace {

double link_at(const DerivedConstants& consts, const ChannelSpec& channel,
               double p_t, double d) {
  const double p_l = link_probability(channel, consts.n_b, snr(consts, p_t, d),
                                      preferred_mode(channel));
  require_usable_link(p_l);
  return p_l;
}

}  // namespace

HopPlan min_total_energy(const DerivedConstants& consts,
                         const ChannelSpec& channel, double d, int n) {
  if (!(d > 0.0)) throw DomainError("distance must be positive");
  if (n < 1) throw DomainError("hop count must be >= 1");
  HopPlan plan;
  plan.n_hops = n;
  plan.hop_length = d / n;
  plan.per_hop_power = power_for_range(consts, channel, plan.hop_length);
  const double p_l = link_at(consts, channel, plan.per_hop_power, plan.hop_length);
  const double hop_edrb = energy_per_bit(consts, plan.per_hop_power) / (plan.hop_length * p_l);
  plan.total_energy = consts.n_b * hop_edrb * d;
  plan.total_delay = n / p_l;
  return plan;
}

double split_total_energy(const DerivedConstants& consts,
                          const ChannelSpec& channel,
                          std::span<const double> hops) {
  double total = 0.0;
  for (double h : hops) {
    total += consts.n_b * edrb_of_range(consts, channel, h) * h;
  }
  return total;
}

double split_total_delay(const DerivedConstants& consts,
                         const ChannelSpec& channel,
                         std::span<const double> hops, double p_t) {
  double total = 0.0;
  for (double h : hops) total += 1.0 / link_at(consts, channel, p_t, h);
  return total;
}

int optimal_hop_count(const DerivedConstants& consts, const ChannelSpec& channel,
                      double d, const OperatingPoint& optimum) {
  if (!(d > 0.0)) throw DomainError("distance must be positive");
  if (d <= optimum.d0) return 1;
  const int n = static_cast<int>(std::floor(d / optimum.d0));
  const double fewer = edrb_of_range(consts, channel, d / n);
  const double more = edrb_of_range(consts, channel, d / (n + 1));
  return more < fewer ? n + 1 : n;
}

int optimal_hop_count(const DerivedConstants& consts, const ChannelSpec& channel,
                      double d) {
  return optimal_hop_count(consts, channel, d, best_operating_point(consts, channel));
}

std::vector<BoundPoint> lower_bound_curve(const DerivedConstants& consts,
                                          const ChannelSpec& channel,
                                          std::span<const double> d_values) {
  const OperatingPoint optimum = best_operating_point(consts, channel);
  std::vector<BoundPoint> curve;
  curve.reserve(d_values.size());
  for (double d : d_values) {
    BoundPoint pt;
    pt.d = d;
    pt.n_hops = optimal_hop_count(consts, channel, d, optimum);
    const double hop = d / pt.n_hops;
    const double p_t = power_for_range(consts, channel, hop);
    const double p_l = link_at(consts, channel, p_t, hop);
    pt.edrb_lb = energy_per_bit(consts, p_t) / (hop * p_l);
    pt.delay = pt.n_hops / p_l;
    curve.push_back(pt);
  }
  return curve;
}

double characteristic_range(const DerivedConstants& consts,
                            const ChannelSpec& channel,
                            const OperatingPoint& optimum) {
  auto gap = [&](double d) {
    return edrb_of_range(consts, channel, d) - edrb_of_range(consts, channel, 0.5 * d);
  };
  return find_root(gap, optimum.d0, 10.0 * optimum.d0, 1e-13);
}

double characteristic_range(const DerivedConstants& consts,
                            const ChannelSpec& channel) {
  return characteristic_range(consts, channel, best_operating_point(consts, channel));
}

std::vector<TradeoffPoint> mark_pareto_frontier(std::vector<TradeoffPoint>& points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].delay != points[b].delay) return points[a].delay < points[b].delay;
    return points[a].energy < points[b].energy;
  });
  std::vector<TradeoffPoint> frontier;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i : order) {
    points[i].on_frontier = false;
    if (points[i].energy < best) {
      best = points[i].energy;
      points[i].on_frontier = true;
      frontier.push_back(points[i]);
    }
  }
  return frontier;
}

TradeoffResult energy_delay_tradeoff(const DerivedConstants& consts,
                                     const ChannelSpec& channel, double d,
                                     int max_hops,
                                     std::span<const double> power_grid_w) {
  if (!(d > 0.0)) throw DomainError("distance must be positive");
  if (max_hops < 1) throw DomainError("max_hops must be >= 1");
  if (power_grid_w.empty()) throw DomainError("power grid is empty");
  TradeoffResult result;
  for (int n = 1; n <= max_hops; ++n) {
    const double hop = d / n;
    for (double p_t : power_grid_w) {
      try {
        const double p_l = link_at(consts, channel, p_t, hop);
        TradeoffPoint pt;
        pt.n_hops = n;
        pt.p_t = p_t;
        pt.delay = n / p_l;
        pt.energy = n * consts.n_b * energy_per_bit(consts, p_t) / p_l;
        result.points.push_back(pt);
      } catch (const DegenerateLink&) {
        ++result.omitted;
      }
    }
  }
  result.frontier = mark_pareto_frontier(result.points);
  return result;
}

}  // namespace edrb
