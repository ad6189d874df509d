#pragma once

#include <cstddef>
#include <vector>

#include "edrb/channel.hpp"
#include "edrb/energy_model.hpp"
#include "edrb/onehop.hpp"
#include "edrb/topology.hpp"

namespace edrb {

struct PowerPolicy {
  enum class Kind { kAdaptive, kFixed };
  Kind kind = Kind::kAdaptive;
  double fixed_w = 0.0;

  static PowerPolicy adaptive() { return {}; }
  static PowerPolicy fixed(double watts) { return {Kind::kFixed, watts}; }
};

struct Path {
  std::vector<std::size_t> node_indices;  // source first, destination last
  std::vector<double> hop_lengths;        // m
  PowerPolicy power_policy;
  // Upper edge of the candidate ring/disk at the step that selected each hop.
  std::vector<double> ring_upper;
  int requested_hops = 0;  // route_fixed_hops only

  int n_hops() const { return static_cast<int>(hop_lengths.size()); }
};

/// Quantities the energy-greedy router needs, computed once per channel.
struct GreedyRouting {
  DerivedConstants consts;
  ChannelSpec channel;
  OperatingPoint optimum;      // supplies d0
  double characteristic_range;  // d_c

  static GreedyRouting prepare(const DerivedConstants& consts,
                               const ChannelSpec& channel);
};

/// Energy-greedy geographic routing: transmit directly once the destination
/// is within d_c; otherwise look for relays at distance
/// remaining / N_hop0 +- (d_c - d0) from the current node (ring widened by d0
/// per side while empty) and take the one closest to the destination.
Path route_energy_greedy(const Topology& topo, std::size_t src, std::size_t dst,
                         const GreedyRouting& routing);
Path route_energy_greedy(const Topology& topo, std::size_t src, std::size_t dst,
                         const DerivedConstants& consts,
                         const ChannelSpec& channel);

/// Fixed-hop-count routing: relays within one hop length
/// (remaining / hops left) of the current node, extended by one hop length
/// while empty; the candidate closest to the destination wins.
Path route_fixed_hops(const Topology& topo, std::size_t src, std::size_t dst,
                      int n_hops);

}  // namespace edrb
