#include "edrb/simulation.hpp"

#include <random>

#include "edrb/errors.hpp"
#include "edrb/onehop.hpp"
#include "edrb/rng.hpp"

namespace edrb {

SimRecord evaluate_path(const Topology& topo, const Path& path,
                        const DerivedConstants& consts,
                        const ChannelSpec& channel, EvalMode mode,
                        std::uint64_t seed, long max_attempts) {
  if (path.node_indices.size() < 2 ||
      path.hop_lengths.size() + 1 != path.node_indices.size()) {
    throw InvalidParameter("path needs at least one hop and consistent lengths");
  }
  const bool fixed = path.power_policy.kind == PowerPolicy::Kind::kFixed;
  if (fixed && !(path.power_policy.fixed_w > 0.0)) {
    throw InvalidParameter("fixed transmit power must be positive");
  }
  if (max_attempts < 1) throw InvalidParameter("max_attempts must be >= 1");

  SimRecord rec;
  rec.src = path.node_indices.front();
  rec.dst = path.node_indices.back();
  rec.euclid_distance = topo.distance(rec.src, rec.dst);
  rec.n_hops = path.n_hops();
  rec.mode = mode;
  rec.density = topo.density;

  const LinkMode link_mode = preferred_mode(channel);
  Rng rng(seed);
  for (double hop : path.hop_lengths) {
    const double p_t = fixed ? path.power_policy.fixed_w
                             : power_for_range(consts, channel, hop);
    const double p_l = link_probability(channel, consts.n_b, snr(consts, p_t, hop), link_mode);
    require_usable_link(p_l);
    const double packet_energy = consts.n_b * energy_per_bit(consts, p_t);
    if (mode == EvalMode::kAnalytic) {
      rec.mean_energy += packet_energy / p_l;
      rec.mean_delay += 1.0 / p_l;
      continue;
    }
    long attempts = max_attempts;
    if (p_l >= 1.0) {
      attempts = 1;
    } else {
      std::geometric_distribution<long> failures(p_l);
      const long f = failures(rng);
      if (f < max_attempts - 1) attempts = f + 1;
    }
    if (attempts == max_attempts && p_l < 1.0) ++rec.cap_hits;
    rec.mean_energy += attempts * packet_energy;
    rec.mean_delay += static_cast<double>(attempts);
  }
  return rec;
}

}  // namespace edrb
