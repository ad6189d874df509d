#include "edrb/routing.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "edrb/errors.hpp"
#include "edrb/multihop.hpp"

namespace edrb {
namespace {

constexpr double kEdgeSlack = 1e-9;  // m

void check_pair(const Topology& topo, std::size_t src, std::size_t dst) {
  if (src >= topo.size() || dst >= topo.size()) {
    throw InvalidParameter("node index out of range");
  }
  if (src == dst) throw InvalidParameter("source and destination must differ");
}

// Node within [lo, hi] of `cur` that is strictly closer to `dst` than `cur`
// and closest to `dst` among those; topo.size() when there is none.
std::size_t closest_to_destination(const Topology& topo, std::size_t cur,
                                   std::size_t dst, double lo, double hi) {
  const double remaining = topo.distance(cur, dst);
  std::size_t best = topo.size();
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < topo.size(); ++k) {
    if (k == cur) continue;
    const double r = topo.distance(cur, k);
    if (r < lo - kEdgeSlack || r > hi + kEdgeSlack) continue;
    const double to_dst = topo.distance(k, dst);
    if (to_dst >= remaining) continue;
    if (to_dst < best_dist) {
      best_dist = to_dst;
      best = k;
    }
  }
  return best;
}

void append_hop(const Topology& topo, Path& path, std::size_t next, double ring_upper) {
  path.hop_lengths.push_back(topo.distance(path.node_indices.back(), next));
  path.ring_upper.push_back(ring_upper);
  path.node_indices.push_back(next);
}

}  // namespace

GreedyRouting GreedyRouting::prepare(const DerivedConstants& consts,
                                     const ChannelSpec& channel) {
  GreedyRouting r{consts, channel, best_operating_point(consts, channel), 0.0};
  r.characteristic_range = edrb::characteristic_range(consts, channel, r.optimum);
  return r;
}

Path route_energy_greedy(const Topology& topo, std::size_t src, std::size_t dst,
                         const GreedyRouting& routing) {
  check_pair(topo, src, dst);
  const double d0 = routing.optimum.d0;
  const double dc = routing.characteristic_range;
  const double half_width = dc - d0;

  Path path;
  path.node_indices.push_back(src);
  std::size_t cur = src;
  while (cur != dst) {
    if (path.hop_lengths.size() > topo.size()) {
      throw RoutingFailure("greedy route exceeded the node count without arriving");
    }
    const double remaining = topo.distance(cur, dst);
    if (remaining <= dc) {
      append_hop(topo, path, dst, dc);
      break;
    }
    const int hops = optimal_hop_count(routing.consts, routing.channel, remaining,
                                       routing.optimum);
    const double centre = remaining / hops;
    double lo = centre - half_width;
    double hi = centre + half_width;
    std::size_t next = closest_to_destination(topo, cur, dst, lo, hi);
    while (next == topo.size()) {
      if (lo <= 0.0 && hi >= remaining) {
        throw RoutingFailure("no relay makes progress from node " + std::to_string(cur));
      }
      lo -= d0;
      hi += d0;
      next = closest_to_destination(topo, cur, dst, lo, hi);
    }
    append_hop(topo, path, next, hi);
    cur = next;
  }
  return path;
}

Path route_energy_greedy(const Topology& topo, std::size_t src, std::size_t dst,
                         const DerivedConstants& consts,
                         const ChannelSpec& channel) {
  return route_energy_greedy(topo, src, dst, GreedyRouting::prepare(consts, channel));
}

Path route_fixed_hops(const Topology& topo, std::size_t src, std::size_t dst,
                      int n_hops) {
  check_pair(topo, src, dst);
  if (n_hops < 1) throw InvalidParameter("n_hops must be >= 1");

  Path path;
  path.requested_hops = n_hops;
  path.node_indices.push_back(src);
  std::size_t cur = src;
  int hops_left = n_hops;
  while (cur != dst) {
    if (path.hop_lengths.size() > topo.size()) {
      throw RoutingFailure("fixed-hop route exceeded the node count without arriving");
    }
    const double remaining = topo.distance(cur, dst);
    const double hop = remaining / hops_left;
    double radius = hop;
    std::size_t next = closest_to_destination(topo, cur, dst, 0.0, radius);
    while (next == topo.size()) {
      radius += hop;
      next = closest_to_destination(topo, cur, dst, 0.0, radius);
    }
    append_hop(topo, path, next, radius);
    cur = next;
    hops_left = std::max(1, hops_left - 1);
  }
  return path;
}

}  // namespace edrb
