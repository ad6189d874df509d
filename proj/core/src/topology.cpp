#include "edrb/topology.hpp"

#include <cmath>
#include <random>

#include "edrb/errors.hpp"
#include "edrb/rng.hpp"

namespace edrb {

double distance(const Node& a, const Node& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Topology generate(double density, double side, std::uint64_t seed) {
  if (!(density > 0.0) || !(side > 0.0)) {
    throw InvalidParameter("density and side must be positive");
  }
  Topology topo;
  topo.side = side;
  topo.density = density;
  topo.seed = seed;

  Rng rng(seed);
  const double mean = density * side * side;
  std::poisson_distribution<long> count(mean);
  const long n = count(rng);
  std::uniform_real_distribution<double> coord(0.0, side);
  topo.nodes.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const double x = coord(rng);
    const double y = coord(rng);
    topo.nodes.push_back({x, y});
  }
  return topo;
}

}  // namespace edrb
