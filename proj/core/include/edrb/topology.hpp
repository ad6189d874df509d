#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace edrb {

struct Node {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Node& a, const Node& b);

/// Nodes of a homogeneous Poisson point process on [0, side]^2.
struct Topology {
  double side = 0.0;     // m
  double density = 0.0;  // nodes / m^2
  std::uint64_t seed = 0;
  std::vector<Node> nodes;

  std::size_t size() const { return nodes.size(); }
  double distance(std::size_t a, std::size_t b) const {
    return edrb::distance(nodes[a], nodes[b]);
  }
};

// Node count ~ Poisson(density * side^2), positions i.i.d. uniform.
// Deterministic in (density, side, seed).
Topology generate(double density, double side, std::uint64_t seed);

}  // namespace edrb
