#pragma once

#include <span>
#include <vector>

#include "edrb/channel.hpp"
#include "edrb/energy_model.hpp"
#include "edrb/onehop.hpp"

namespace edrb {

/// Equidistant multi-hop plan over a straight line.
struct HopPlan {
  int n_hops = 1;
  double hop_length = 0.0;     // m
  double per_hop_power = 0.0;  // W
  double total_energy = 0.0;   // J for one n_b-bit packet end to end
  double total_delay = 0.0;    // one-hop units
};

struct TradeoffPoint {
  double delay = 0.0;   // one-hop units
  double energy = 0.0;  // J per packet end to end
  int n_hops = 1;
  double p_t = 0.0;     // W, common to every hop
  bool on_frontier = false;
};

struct BoundPoint {
  double d = 0.0;
  double edrb_lb = 0.0;  // J/bit/m
  double delay = 0.0;    // one-hop units
  int n_hops = 1;
};

// n equal hops of length d / n, each at power_for_range(d / n).
HopPlan min_total_energy(const DerivedConstants& consts,
                         const ChannelSpec& channel, double d, int n);

// Energy of an arbitrary split (hop lengths summing to the distance), each hop
// at its own energy-optimal power.
double split_total_energy(const DerivedConstants& consts,
                          const ChannelSpec& channel,
                          std::span<const double> hops);

// Mean end-to-end delay of a split where every hop transmits at p_t.
double split_total_delay(const DerivedConstants& consts,
                         const ChannelSpec& channel,
                         std::span<const double> hops, double p_t);

// floor(d / d0) or one more, whichever gives the lower EDRb; 1 when d <= d0.
// Ties go to the smaller count.
int optimal_hop_count(const DerivedConstants& consts, const ChannelSpec& channel,
                      double d);
int optimal_hop_count(const DerivedConstants& consts, const ChannelSpec& channel,
                      double d, const OperatingPoint& optimum);

std::vector<BoundPoint> lower_bound_curve(const DerivedConstants& consts,
                                          const ChannelSpec& channel,
                                          std::span<const double> d_values);

// Range d_c > d0 at which one hop and two half-length hops cost the same
// EDRb. Throws BracketFailure when no sign change exists in [d0, 10 d0].
double characteristic_range(const DerivedConstants& consts,
                            const ChannelSpec& channel);
double characteristic_range(const DerivedConstants& consts,
                            const ChannelSpec& channel,
                            const OperatingPoint& optimum);

struct TradeoffResult {
  std::vector<TradeoffPoint> points;    // every (n, p_t), on_frontier marked
  std::vector<TradeoffPoint> frontier;  // sorted by delay
  int omitted = 0;                      // degenerate links skipped
};

/// Energy and delay of n equidistant hops at a forced common power, for every
/// n in [1, max_hops] and every power in `power_grid_w`.
TradeoffResult energy_delay_tradeoff(const DerivedConstants& consts,
                                     const ChannelSpec& channel, double d,
                                     int max_hops,
                                     std::span<const double> power_grid_w);

/// Lower-left Pareto frontier on (delay, energy): stable sort by delay, ties
/// keep the lower energy, a point survives only if it strictly improves on
/// the energy of every point with smaller or equal delay. Marks
/// `on_frontier` in `points` and returns the frontier sorted by delay.
std::vector<TradeoffPoint> mark_pareto_frontier(std::vector<TradeoffPoint>& points);

}  // namespace edrb
