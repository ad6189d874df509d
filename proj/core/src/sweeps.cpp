#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <string>

#include "edrb/errors.hpp"
#include "edrb/multihop.hpp"
#include "edrb/onehop.hpp"
#include "edrb/parallel.hpp"
#include "edrb/rng.hpp"
#include "edrb/simulation.hpp"
#include "edrb/units.hpp"

namespace edrb {

EvalMode eval_mode_from_name(std::string_view name) {
  if (name == "analytic") return EvalMode::kAnalytic;
  if (name == "montecarlo" || name == "monte_carlo" || name == "mc") {
    return EvalMode::kMonteCarlo;
  }
  throw InvalidParameter("unknown evaluation mode '" + std::string(name) + "'");
}

std::string eval_mode_name(EvalMode mode) {
  return mode == EvalMode::kAnalytic ? "analytic" : "montecarlo";
}

namespace {

struct TopologyTask {
  std::size_t density_index;
  int topology;
};

struct Moments {
  long n = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double v) {
    ++n;
    sum += v;
    sum_sq += v * v;
  }
  double mean() const { return n ? sum / n : 0.0; }
  double standard_error() const {
    if (n < 2) return 0.0;
    const double m = mean();
    const double var = std::max(0.0, (sum_sq - n * m * m) / (n - 1));
    return std::sqrt(var / n);
  }
};

struct TaskOutput {
  std::vector<SimRecord> records;
  long routing_failures = 0;
  long degenerate = 0;
};

}  // namespace

std::vector<BinStat> bin_records(const DerivedConstants& consts,
                                 const ChannelSpec& channel,
                                 const std::vector<SimRecord>& records,
                                 double bin_width, double side) {
  if (!(bin_width > 0.0)) throw InvalidParameter("bin width must be positive");
  std::vector<double> distances;
  distances.reserve(records.size());
  for (const SimRecord& r : records) distances.push_back(r.euclid_distance);
  const std::vector<BoundPoint> bound = lower_bound_curve(consts, channel, distances);

  const long max_bin = static_cast<long>(std::ceil(side * std::numbers::sqrt2 / bin_width));
  struct Acc {
    Moments edrb;
    Moments bound;
    Moments excess;
    long cap_hits = 0;
  };
  std::map<std::pair<double, long>, Acc> acc;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SimRecord& r = records[i];
    const long bin = std::min(max_bin, static_cast<long>(std::floor(r.euclid_distance / bin_width)));
    Acc& a = acc[{r.density, bin}];
    const double e = r.edrb(consts.n_b);
    a.edrb.add(e);
    a.bound.add(bound[i].edrb_lb);
    a.excess.add(e - bound[i].edrb_lb);
    a.cap_hits += r.cap_hits;
  }
  std::vector<BinStat> bins;
  bins.reserve(acc.size());
  for (const auto& [key, a] : acc) {
    BinStat b;
    b.density = key.first;
    b.lo = key.second * bin_width;
    b.hi = b.lo + bin_width;
    b.count = a.edrb.n;
    b.mean_edrb = a.edrb.mean();
    b.se_edrb = a.edrb.standard_error();
    b.mean_bound = a.bound.mean();
    b.mean_excess = a.excess.mean();
    b.se_excess = a.excess.standard_error();
    b.cap_hits = a.cap_hits;
    bins.push_back(b);
  }
  return bins;
}

EdrbSweepResult sweep_edrb(const DerivedConstants& consts,
                           const EdrbSweepConfig& config) {
  if (config.densities.empty()) throw InvalidParameter("no densities configured");
  if (config.topologies.empty()) throw InvalidParameter("no topology counts configured");
  config.channel.validate();

  const GreedyRouting routing = GreedyRouting::prepare(consts, config.channel);
  PowerPolicy policy = config.policy;
  if (policy.kind == PowerPolicy::Kind::kFixed && config.fixed_at_optimum) {
    policy.fixed_w = optimal_power(consts);
  }

  std::vector<TopologyTask> tasks;
  for (std::size_t di = 0; di < config.densities.size(); ++di) {
    const int count = config.topologies[std::min(di, config.topologies.size() - 1)];
    for (int t = 0; t < count; ++t) tasks.push_back({di, t});
  }

  std::vector<TaskOutput> outputs(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const TopologyTask& task = tasks[i];
    const std::uint64_t topo_seed = derive_seed(config.seed, {task.density_index,
                                                              static_cast<std::uint64_t>(task.topology)});
    const Topology topo = generate(config.densities[task.density_index], config.side, topo_seed);
    TaskOutput& out = outputs[i];
    const std::size_t n = topo.size();
    if (n < 2) return;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (config.all_pairs) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
      }
    } else {
      Rng rng(derive_seed(topo_seed, {1}));
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int k = 0; k < config.pairs_per_topology; ++k) {
        const std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        while (b == a) b = pick(rng);
        pairs.emplace_back(a, b);
      }
    }

    for (std::size_t k = 0; k < pairs.size(); ++k) {
      try {
        Path path = route_energy_greedy(topo, pairs[k].first, pairs[k].second, routing);
        path.power_policy = policy;
        SimRecord rec = evaluate_path(topo, path, consts, config.channel, config.mode,
                                      derive_seed(topo_seed, {2, k}), config.max_attempts);
        rec.topology = task.topology;
        out.records.push_back(rec);
      } catch (const RoutingFailure&) {
        ++out.routing_failures;
      } catch (const DegenerateLink&) {
        ++out.degenerate;
      }
    }
  });

  EdrbSweepResult result;
  for (TaskOutput& out : outputs) {
    result.records.insert(result.records.end(), out.records.begin(), out.records.end());
    result.routing_failures += out.routing_failures;
    result.degenerate += out.degenerate;
  }
  result.bins = bin_records(consts, config.channel, result.records, config.bin_width,
                            config.side);
  return result;
}

std::vector<double> TradeoffSweepConfig::resolved_power_grid_dbm() const {
  if (!power_grid_dbm.empty()) return power_grid_dbm;
  std::vector<double> grid;
  for (int dbm = 1; dbm <= 40; ++dbm) grid.push_back(dbm);
  return grid;
}

std::vector<TradeoffPoint> TradeoffSweepResult::frontier(double density) const {
  std::vector<TradeoffPoint> pts;
  for (const TradeoffSweepPoint& p : points) {
    if (p.density == density) pts.push_back(p.point);
  }
  return mark_pareto_frontier(pts);
}

TradeoffSweepResult sweep_tradeoff(const DerivedConstants& consts,
                                   const TradeoffSweepConfig& config) {
  if (config.densities.empty()) throw InvalidParameter("no densities configured");
  if (config.max_hops < 1) throw InvalidParameter("max_hops must be >= 1");
  if (config.repetitions < 1) throw InvalidParameter("repetitions must be >= 1");
  if (!(config.distance > 0.0) || config.distance >= config.side) {
    throw InvalidParameter("distance must be positive and shorter than the side");
  }
  config.channel.validate();

  const std::vector<double> grid_dbm = config.resolved_power_grid_dbm();
  const std::size_t n_power = grid_dbm.size();
  const std::size_t n_hop = static_cast<std::size_t>(config.max_hops);
  const std::size_t cells = n_hop * n_power;

  struct Cell {
    double delay = 0.0;
    double energy = 0.0;
    double hops = 0.0;
    int samples = 0;
    long cap_hits = 0;
  };
  struct RepOutput {
    std::vector<Cell> cells;
    long routing_failures = 0;
    long degenerate = 0;
  };

  TradeoffSweepResult result;
  for (std::size_t di = 0; di < config.densities.size(); ++di) {
    std::vector<RepOutput> reps(static_cast<std::size_t>(config.repetitions));
    parallel_for(reps.size(), [&](std::size_t r) {
      RepOutput& out = reps[r];
      out.cells.resize(cells);
      const std::uint64_t topo_seed = derive_seed(config.seed, {di, r});
      Topology topo = generate(config.densities[di], config.side, topo_seed);

      Rng rng(derive_seed(topo_seed, {3}));
      const double theta = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
      const double cx = 0.5 * config.side;
      const double half = 0.5 * config.distance;
      const std::size_t src = topo.nodes.size();
      topo.nodes.push_back({cx - half * std::cos(theta), cx - half * std::sin(theta)});
      const std::size_t dst = topo.nodes.size();
      topo.nodes.push_back({cx + half * std::cos(theta), cx + half * std::sin(theta)});

      for (std::size_t h = 0; h < n_hop; ++h) {
        Path path;
        try {
          path = route_fixed_hops(topo, src, dst, static_cast<int>(h + 1));
        } catch (const RoutingFailure&) {
          ++out.routing_failures;
          continue;
        }
        for (std::size_t pi = 0; pi < n_power; ++pi) {
          path.power_policy = PowerPolicy::fixed(dbm_to_watt(grid_dbm[pi]));
          try {
            const SimRecord rec = evaluate_path(topo, path, consts, config.channel, config.mode,
                                                derive_seed(topo_seed, {4, h, pi}),
                                                config.max_attempts);
            Cell& c = out.cells[h * n_power + pi];
            c.delay += rec.mean_delay;
            c.energy += rec.mean_energy;
            c.hops += rec.n_hops;
            c.cap_hits += rec.cap_hits;
            ++c.samples;
          } catch (const DegenerateLink&) {
            ++out.degenerate;
          }
        }
      }
    });

    std::vector<Cell> total(cells);
    for (const RepOutput& rep : reps) {
      result.routing_failures += rep.routing_failures;
      result.degenerate += rep.degenerate;
      for (std::size_t i = 0; i < cells; ++i) {
        total[i].delay += rep.cells[i].delay;
        total[i].energy += rep.cells[i].energy;
        total[i].hops += rep.cells[i].hops;
        total[i].samples += rep.cells[i].samples;
        total[i].cap_hits += rep.cells[i].cap_hits;
      }
    }

    std::vector<TradeoffSweepPoint> density_points;
    for (std::size_t h = 0; h < n_hop; ++h) {
      for (std::size_t pi = 0; pi < n_power; ++pi) {
        const Cell& c = total[h * n_power + pi];
        if (c.samples == 0) continue;
        TradeoffSweepPoint p;
        p.density = config.densities[di];
        p.point.n_hops = static_cast<int>(h + 1);
        p.point.p_t = dbm_to_watt(grid_dbm[pi]);
        p.point.delay = c.delay / c.samples;
        p.point.energy = c.energy / c.samples;
        p.mean_hops = c.hops / c.samples;
        p.samples = c.samples;
        p.cap_hits = c.cap_hits;
        density_points.push_back(p);
      }
    }
    std::vector<TradeoffPoint> pts;
    for (const auto& p : density_points) pts.push_back(p.point);
    mark_pareto_frontier(pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      density_points[i].point.on_frontier = pts[i].on_frontier;
    }
    result.points.insert(result.points.end(), density_points.begin(), density_points.end());
  }
  return result;
}

}  // namespace edrb
