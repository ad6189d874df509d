#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edrb/channel.hpp"
#include "edrb/energy_model.hpp"
#include "edrb/multihop.hpp"
#include "edrb/routing.hpp"
#include "edrb/topology.hpp"

namespace edrb {

enum class EvalMode { kAnalytic, kMonteCarlo };

EvalMode eval_mode_from_name(std::string_view name);
std::string eval_mode_name(EvalMode mode);

inline constexpr long kDefaultMaxAttempts = 10000;

struct SimRecord {
  std::size_t src = 0;
  std::size_t dst = 0;
  double euclid_distance = 0.0;  // m
  double mean_energy = 0.0;      // J per packet end to end
  double mean_delay = 0.0;       // one-hop units
  int n_hops = 0;
  EvalMode mode = EvalMode::kAnalytic;
  long cap_hits = 0;  // hops whose attempt count hit max_attempts
  double density = 0.0;
  int topology = 0;

  // Mean energy per bit per metre of Euclidean distance.
  double edrb(int n_b) const { return mean_energy / (n_b * euclid_distance); }
};

/// Energy and delay of delivering one packet along `path`. Analytic mode sums
/// the expectations E_b / p_l and 1 / p_l per hop; MonteCarlo mode draws one
/// geometric attempt count per hop (deterministic in `seed`).
SimRecord evaluate_path(const Topology& topo, const Path& path,
                        const DerivedConstants& consts,
                        const ChannelSpec& channel, EvalMode mode,
                        std::uint64_t seed,
                        long max_attempts = kDefaultMaxAttempts);

struct EdrbSweepConfig {
  std::vector<double> densities{0.001};
  std::vector<int> topologies{10};  // per density (last value reused)
  double side = 900.0;
  ChannelSpec channel = ChannelSpec::nakagami(1.0);
  PowerPolicy policy = PowerPolicy::adaptive();
  bool fixed_at_optimum = false;  // Fixed policy at P0 (ignores fixed_w)
  EvalMode mode = EvalMode::kMonteCarlo;
  std::uint64_t seed = 1;
  int pairs_per_topology = 20000;
  bool all_pairs = false;
  long max_attempts = kDefaultMaxAttempts;
  double bin_width = 25.0;
};

struct BinStat {
  double density = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  long count = 0;
  double mean_edrb = 0.0;
  double se_edrb = 0.0;
  double mean_bound = 0.0;   // lower bound at each record's distance, averaged
  double mean_excess = 0.0;  // mean of (edrb - bound)
  double se_excess = 0.0;
  long cap_hits = 0;
};

struct EdrbSweepResult {
  std::vector<SimRecord> records;
  std::vector<BinStat> bins;
  long routing_failures = 0;
  long degenerate = 0;
};

EdrbSweepResult sweep_edrb(const DerivedConstants& consts,
                           const EdrbSweepConfig& config);

// Groups records by (density, distance bin) and compares them with the
// analytic lower bound.
std::vector<BinStat> bin_records(const DerivedConstants& consts,
                                 const ChannelSpec& channel,
                                 const std::vector<SimRecord>& records,
                                 double bin_width, double side);

struct TradeoffSweepConfig {
  std::vector<double> densities{0.01};
  double side = 900.0;
  double distance = 380.0;
  int max_hops = 5;
  std::vector<double> power_grid_dbm;  // empty: 1..40 dBm in 1 dB steps
  int repetitions = 50;
  ChannelSpec channel = ChannelSpec::nakagami(1.0);
  EvalMode mode = EvalMode::kAnalytic;
  std::uint64_t seed = 1;
  long max_attempts = kDefaultMaxAttempts;

  std::vector<double> resolved_power_grid_dbm() const;
};

struct TradeoffSweepPoint {
  double density = 0.0;
  TradeoffPoint point;
  double mean_hops = 0.0;  // realized hops, may be fewer than requested
  int samples = 0;         // repetitions that contributed
  long cap_hits = 0;
};

struct TradeoffSweepResult {
  std::vector<TradeoffSweepPoint> points;  // every (density, n, p_t)
  long routing_failures = 0;
  long degenerate = 0;

  // Frontier of one density, sorted by delay.
  std::vector<TradeoffPoint> frontier(double density) const;
};

/// Source and destination are injected `distance` apart at the centre of each
/// topology; every requested hop count and power is evaluated on the same
/// routes, then averaged over repetitions.
TradeoffSweepResult sweep_tradeoff(const DerivedConstants& consts,
                                   const TradeoffSweepConfig& config);

}  // namespace edrb
