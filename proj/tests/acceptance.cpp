// Acceptance suite. Prints one PASS/FAIL line per criterion, preceded by the
// measured values. `--criterion N` runs a single criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "edrb/errors.hpp"
#include "edrb/multihop.hpp"
#include "edrb/onehop.hpp"
#include "edrb/simulation.hpp"
#include "edrb/units.hpp"
#include "oracle.hpp"
#include "property_support.hpp"

namespace {

using namespace edrb;
using Clock = std::chrono::steady_clock;

class Criterion {
 public:
  void check(bool ok, const char* what, double measured, const std::string& target) {
    ok_ = ok_ && ok;
    std::printf("    %-4s %-44s %.6g  (target %s)\n", ok ? "ok" : "MISS", what, measured, target.c_str());
  }
  void note(const std::string& text) { std::printf("    note %s\n", text.c_str()); }
  bool ok() const { return ok_; }

 private:
  bool ok_ = true;
};

std::string within(double target, double tol, const char* unit = "") {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6g +- %.4g%s", target, tol, unit);
  return buf;
}

std::string within_rel(double target, double rel) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6g +- %.4g%%", target, rel * 100.0);
  return buf;
}

bool near_abs(double v, double target, double tol) { return std::abs(v - target) <= tol; }
bool near_rel(double v, double target, double rel) { return std::abs(v - target) <= rel * std::abs(target); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const DerivedConstants& radio_defaults() {
  static const DerivedConstants c = derive_constants(RadioParameters{});
  return c;
}

void c1_awgn_optimum(Criterion& c) {
  const auto t0 = Clock::now();
  const OperatingPoint op = operating_point(radio_defaults(), ChannelSpec::awgn());
  const double secs = seconds_since(t0);
  c.check(near_rel(op.d0, 172.31, 0.02), "d0g [m]", op.d0, within_rel(172.31, 0.02));
  c.check(near_rel(op.p0, 0.18051, 0.01), "P0 [W]", op.p0, within_rel(0.18051, 0.01));
  c.check(near_abs(linear_to_db(op.gamma0), 9.34, 0.1), "gamma0g [dB]", linear_to_db(op.gamma0), within(9.34, 0.1));
  c.check(near_rel(op.ber0, 1.37e-5, 0.05), "BER0g", op.ber0, within_rel(1.37e-5, 0.05));
  c.check(near_abs(op.p_l0, 0.9655, 0.005), "p_l", op.p_l0, within(0.9655, 0.005));
  c.check(near_abs(op.delay0, 1.04, 0.01), "delay [units]", op.delay0, within(1.04, 0.01));
  c.check(secs < 1.0, "runtime [s]", secs, "< 1");
}

void c2_nakagami_optimum(Criterion& c) {
  const auto t0 = Clock::now();
  const OperatingPoint op = operating_point(radio_defaults(), ChannelSpec::nakagami(1.0));
  const double secs = seconds_since(t0);
  c.check(near_rel(op.d0, 134.16, 0.02), "d0b [m]", op.d0, within_rel(134.16, 0.02));
  c.check(near_abs(linear_to_db(op.gamma0), 12.69, 0.1), "gamma0b [dB]", linear_to_db(op.gamma0), within(12.69, 0.1));
  c.check(near_abs(op.p_l0, 0.72, 0.01), "p_l0", op.p_l0, within(0.72, 0.01));
  c.check(near_abs(op.delay0, 1.40, 0.02), "delay [units]", op.delay0, within(1.40, 0.02));
  c.check(secs < 1.0, "runtime [s]", secs, "< 1");
}

void c3_rayleigh(Criterion& c) {
  const OperatingPoint op = operating_point(radio_defaults(), ChannelSpec::rayleigh());
  c.check(near_abs(linear_to_db(op.gamma0), 32.83, 0.05), "gamma0f [dB]", linear_to_db(op.gamma0), within(32.83, 0.05));
  c.check(near_rel(op.ber0, 1.30e-4, 0.02), "BER0f", op.ber0, within_rel(1.30e-4, 0.02));
  const oracle::GridMin g = oracle::grid_minimize(1);
  c.check(near_rel(op.d0, g.d, 0.005), "d0f closed form vs 2-D grid [m]", op.d0, within_rel(g.d, 0.005));
}

void c4_power_for_range(Criterion& c) {
  struct Case {
    const char* name;
    ChannelSpec channel;
    int family;
    double d;
    double target_w;
  };
  const Case cases[] = {{"AWGN 380 m", ChannelSpec::awgn(), 0, 380.0, 0.53587},
                        {"Rayleigh 50 m", ChannelSpec::rayleigh(), 1, 50.0, 0.73412}};
  for (const Case& k : cases) {
    const double p = power_for_range(radio_defaults(), k.channel, k.d);
    const double brute = oracle::power_grid_minimize(k.family, k.d, 1e-4, 5.0, 1e-4);
    c.check(near_rel(p, k.target_w, 0.01), (std::string("P [W], ") + k.name).c_str(), p, within_rel(k.target_w, 0.01));
    c.check(std::abs(p - brute) <= 1e-4, (std::string("brute-force 0.1 mW grid, ") + k.name).c_str(), brute,
            within(p, 1e-4));
  }
}

void c5_characteristic_range(Criterion& c) {
  const ChannelSpec ch = ChannelSpec::nakagami(1.0);
  const double dc = characteristic_range(radio_defaults(), ch);
  const double one = edrb_of_range(radio_defaults(), ch, dc);
  const double two = edrb_of_range(radio_defaults(), ch, dc / 2);
  const double residual = std::abs(one - two) / one;
  c.check(near_abs(dc, 187.0, 2.0), "d_c [m]", dc, within(187.0, 2.0));
  c.check(residual < 1e-6, "root residual (relative)", residual, "< 1e-6");
}

void c6_equidistant(Criterion& c) {
  const auto t0 = Clock::now();
  const ChannelSpec ch = ChannelSpec::nakagami(1.0);
  std::mt19937_64 rng(6);
  int energy_violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const SplitSample s = sample_split(rng);
    const double equal = min_total_energy(radio_defaults(), ch, s.distance, s.n()).total_energy;
    if (split_total_energy(radio_defaults(), ch, s.hops) < equal * (1.0 - 1e-12)) ++energy_violations;
  }
  int delay_violations = 0;
  int delay_checked = 0;
  int rejected = 0;
  while (delay_checked < 1000) {
    const SplitSample s = sample_split(rng);
    const double p = power_for_range(radio_defaults(), ch, s.distance / s.n());
    double split = 0.0;
    try {
      split = split_total_delay(radio_defaults(), ch, s.hops, p);
    } catch (const DegenerateLink&) {
      ++rejected;
      continue;
    }
    const std::vector<double> equal_hops(s.hops.size(), s.distance / s.n());
    if (split < split_total_delay(radio_defaults(), ch, equal_hops, p) * (1.0 - 1e-12)) ++delay_violations;
    ++delay_checked;
  }
  const double secs = seconds_since(t0);
  c.check(energy_violations == 0, "energy: splits beating equidistant", energy_violations, "0 of 1000");
  c.check(delay_violations == 0, "delay (common power): splits beating equidistant", delay_violations, "0 of 1000");
  c.note(std::to_string(rejected) + " delay samples redrawn because a hop fell below the link floor");
  c.check(secs < 30.0, "runtime [s]", secs, "< 30");
}

void c7_numeric_vs_closed(Criterion& c) {
  for (const ChannelSpec& ch : {ChannelSpec::awgn(), ChannelSpec::rayleigh(), ChannelSpec::nakagami(1.0)}) {
    const OperatingPoint cf = operating_point(radio_defaults(), ch);
    const OperatingPoint nu = numeric_optimum(radio_defaults(), ch);
    c.check(near_rel(nu.d0, cf.d0, 0.005), (ch.name() + " numeric d0 [m]").c_str(), nu.d0, within_rel(cf.d0, 0.005));
    c.check(near_rel(nu.p0, cf.p0, 0.005), (ch.name() + " numeric P0 [W]").c_str(), nu.p0, within_rel(cf.p0, 0.005));
  }
}

void c8_quadrature_vs_fit(Criterion& c) {
  for (int nb : {320, 2560, 10240}) {
    const double g0 = 3.0 / 2.0 * (4.25 * std::log10(nb) - 2.2);
    double worst = 0.0;
    const int steps = 200;
    for (int i = 0; i <= steps; ++i) {
      const double gbar = g0 / 4.0 * std::pow(16.0, static_cast<double>(i) / steps);
      const double q = link_probability(ChannelSpec::nakagami(1.0), nb, gbar, LinkMode::kExact);
      const double a = link_probability(ChannelSpec::nakagami(1.0), nb, gbar, LinkMode::kApprox);
      worst = std::max(worst, std::abs(a - q) / q);
    }
    c.check(worst <= 0.10, ("max relative p_l error, n_b=" + std::to_string(nb)).c_str(), worst, "<= 0.10");
  }
}

void c9_simulation_vs_bound(Criterion& c) {
  const auto t0 = Clock::now();
  EdrbSweepConfig cfg;
  cfg.densities = {0.001};
  cfg.topologies = {10};
  cfg.pairs_per_topology = 20000;
  cfg.channel = ChannelSpec::nakagami(1.0);
  cfg.policy = PowerPolicy::adaptive();
  cfg.mode = EvalMode::kMonteCarlo;
  cfg.seed = 1;
  const EdrbSweepResult r = sweep_edrb(radio_defaults(), cfg);
  const double secs = seconds_since(t0);

  double worst_ratio = 0.0;
  double worst_ratio_lo = 0.0;
  double worst_z = std::numeric_limits<double>::infinity();
  int gated = 0;
  int over = 0;
  int under = 0;
  for (const BinStat& b : r.bins) {
    if (b.count < 50) continue;
    ++gated;
    const double ratio = b.mean_edrb / b.mean_bound;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst_ratio_lo = b.lo;
    }
    if (ratio > 1.10) ++over;
    if (b.se_excess > 0.0) {
      const double z = b.mean_excess / b.se_excess;
      worst_z = std::min(worst_z, z);
      if (z < -3.0) ++under;
    }
  }
  c.check(r.records.size() >= 5000, "sampled pairs", static_cast<double>(r.records.size()), ">= 5000");
  c.check(over == 0, "bins above 1.10 x bound", over, "0 of " + std::to_string(gated));
  c.note("largest mean/bound ratio " + std::to_string(worst_ratio) + " in bin starting at " +
         std::to_string(worst_ratio_lo) + " m");
  c.check(under == 0, "bins below bound by more than 3 SE", under, "0 (lowest z " + std::to_string(worst_z) + ")");
  c.note(std::to_string(r.routing_failures) + " routing failures, " + std::to_string(r.degenerate) + " degenerate paths");
  c.check(secs < 300.0, "runtime [s]", secs, "< 300");
}

// Energy of `frontier` (sorted by delay) at delay d, linear between
// vertices and clamped to the end points outside its delay range.
double frontier_energy_at(const std::vector<TradeoffPoint>& frontier, double d) {
  if (d <= frontier.front().delay) return frontier.front().energy;
  if (d >= frontier.back().delay) return frontier.back().energy;
  auto hi = std::upper_bound(frontier.begin(), frontier.end(), d,
                             [](double v, const TradeoffPoint& p) { return v < p.delay; });
  auto lo = hi - 1;
  const double t = (d - lo->delay) / (hi->delay - lo->delay);
  return lo->energy + t * (hi->energy - lo->energy);
}

void c10_tradeoff_simulation(Criterion& c) {
  const auto t0 = Clock::now();
  TradeoffSweepConfig cfg;
  cfg.densities = {0.01};
  cfg.distance = 380.0;
  cfg.max_hops = 5;
  cfg.repetitions = 50;
  cfg.channel = ChannelSpec::nakagami(1.0);
  cfg.mode = EvalMode::kAnalytic;
  cfg.seed = 1;
  const TradeoffSweepResult sim = sweep_tradeoff(radio_defaults(), cfg);
  const double secs = seconds_since(t0);

  std::vector<double> grid_w;
  for (double dbm : cfg.resolved_power_grid_dbm()) grid_w.push_back(dbm_to_watt(dbm));
  const TradeoffResult analytic = energy_delay_tradeoff(radio_defaults(), cfg.channel, cfg.distance, cfg.max_hops, grid_w);
  const std::vector<TradeoffPoint> sim_frontier = sim.frontier(0.01);

  double worst = 0.0;
  for (const TradeoffPoint& p : sim_frontier) {
    worst = std::max(worst, std::abs(p.energy / frontier_energy_at(analytic.frontier, p.delay) - 1.0));
  }
  for (const TradeoffPoint& p : analytic.frontier) {
    worst = std::max(worst, std::abs(frontier_energy_at(sim_frontier, p.delay) / p.energy - 1.0));
  }
  c.check(!sim_frontier.empty(), "simulated frontier points", static_cast<double>(sim_frontier.size()), "> 0");
  c.check(worst <= 0.10, "max relative energy gap at matched delay", worst, "<= 0.10");
  c.check(secs < 300.0, "runtime [s]", secs, "< 300");
}

void c11_impact_monotonicity(Criterion& c) {
  const RadioParameters params;
  auto column = [](const std::vector<SweepRow>& rows, bool edrb0) {
    std::vector<double> v;
    for (const SweepRow& r : rows) v.push_back(r.point ? (edrb0 ? r.point->edrb0 : r.point->d0) : NAN);
    return v;
  };
  auto increasing = [](const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (!(v[i] > v[i - 1])) return false;
    }
    return true;
  };
  auto decreasing = [](const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (!(v[i] < v[i - 1])) return false;
    }
    return true;
  };
  const auto alpha = impact_sweep(params, ChannelSpec::awgn(), SweepDimension::kAlpha, {"2.5", "3", "3.5"});
  c.check(increasing(column(alpha, true)), "alpha 2.5/3/3.5: EDRb0 increasing", 1, "1");
  c.check(decreasing(column(alpha, false)), "alpha 2.5/3/3.5: d0 decreasing", 1, "1");
  const auto circ = impact_sweep(params, ChannelSpec::awgn(), SweepDimension::kCircuitryScale, {"1", "0.5", "0.1"});
  c.check(decreasing(column(circ, true)) && decreasing(column(circ, false)), "circuitry 1/0.5/0.1: EDRb0, d0 decreasing", 1, "1");
  const auto mod = impact_sweep(params, ChannelSpec::awgn(), SweepDimension::kModulation, {"mqam4", "mqam16", "mqam64"});
  c.check(increasing(column(mod, true)), "MQAM 4/16/64: EDRb0 increasing", 1, "1");
  const auto fading = impact_sweep(params, ChannelSpec::nakagami(1.0), SweepDimension::kFadingM, {"1", "2", "4"});
  c.check(increasing(column(fading, false)), "Nakagami m 1/2/4: d0 increasing", 1, "1");
  c.note("full-scale sweeps: edrb sweep-impact / simulate --all-pairs (not gated)");
}

struct Entry {
  int id;
  const char* title;
  std::function<void(Criterion&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {1, "AWGN operating point", c1_awgn_optimum},
      {2, "Nakagami m=1 operating point", c2_nakagami_optimum},
      {3, "Rayleigh SNR/BER and closed-form range vs grid oracle", c3_rayleigh},
      {4, "Power for a given range", c4_power_for_range},
      {5, "Characteristic range", c5_characteristic_range},
      {6, "Equidistant optimality property suites", c6_equidistant},
      {7, "Numeric optimizer vs closed forms", c7_numeric_vs_closed},
      {8, "Block-fading quadrature vs closed-form fit", c8_quadrature_vs_fit},
      {9, "Poisson simulation EDRb vs lower bound", c9_simulation_vs_bound},
      {10, "Poisson trade-off frontier vs analytic frontier", c10_tradeoff_simulation},
      {11, "Parameter-impact monotonicity", c11_impact_monotonicity},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  int failed = 0;
  int ran = 0;
  for (const Entry& e : entries()) {
    if (only != 0 && e.id != only) continue;
    ++ran;
    Criterion c;
    std::printf("criterion %d: %s\n", e.id, e.title);
    bool ok = false;
    try {
      e.run(c);
      ok = c.ok();
    } catch (const std::exception& ex) {
      std::printf("    error %s\n", ex.what());
    }
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", e.id, e.title);
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  if (ran > 1) std::printf("%d of %d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
