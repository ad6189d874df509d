#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "edrb/csv.hpp"
#include "edrb/errors.hpp"
#include "edrb/multihop.hpp"
#include "edrb/onehop.hpp"
#include "edrb/params_io.hpp"
#include "edrb/simulation.hpp"
#include "edrb/units.hpp"

namespace edrb::cli {

namespace {

class FileNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* const kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  usage error\n"
    "  2  file not found or not writable\n"
    "  3  parse error in a parameter or config file, or in --set\n"
    "  4  validation error (parameter out of range, unsupported channel)\n"
    "  5  computation error (non-convergence, degenerate link, routing)\n";

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonOptions {
  std::string channel = "awgn";
  double m = 1.0;
  std::string modulation = "bpsk";
  std::string params_path;
  std::vector<std::string> overrides;
  std::string out_path;
  std::optional<std::uint64_t> seed;
};

void add_channel_options(CLI::App* app, CommonOptions& o) {
  app->add_option("--channel", o.channel, "awgn | rayleigh | nakagami");
  app->add_option("--m", o.m, "Nakagami shape parameter");
  app->add_option("--modulation", o.modulation, "bpsk | qpsk | mqamM");
}

void add_io_options(CLI::App* app, CommonOptions& o) {
  app->add_option("--params", o.params_path, "JSON file of radio parameters");
  app->add_option("--set", o.overrides,
                  "key=value override, repeatable; powers also accept key_dbm");
  app->add_option("--out", o.out_path, "CSV output file (default: stdout)");
}

RadioParameters resolve_params(const CommonOptions& o) {
  RadioParameters params;
  if (!o.params_path.empty()) params = radio_parameters_from_json(read_file(o.params_path));
  std::map<std::string, std::string> kv;
  for (const std::string& item : o.overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("override '" + item + "' is not key=value");
    }
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  apply_overrides(params, kv);
  params.validate();
  return params;
}

ChannelSpec resolve_channel(const std::string& family, double m, const std::string& modulation) {
  ChannelSpec ch;
  ch.family = channel_family_from_name(family);
  ch.m = m;
  ch.modulation = modulation_from_label(modulation);
  ch.validate();
  return ch;
}

std::string channel_tag(const ChannelSpec& ch) {
  std::string s = ch.name();
  if (ch.family == ChannelFamily::kNakagamiBlock) s += " m=" + format_double(ch.m);
  return s + " modulation=" + ch.modulation.label;
}

std::string comment_line(const RadioParameters& params, const std::string& extra,
                         std::optional<std::uint64_t> seed) {
  std::string c = std::string(kToolVersion) + " params=" + radio_parameters_to_json(params);
  if (!extra.empty()) c += " " + extra;
  c += " seed=" + (seed ? std::to_string(*seed) : std::string("none"));
  return c;
}

// Writes to --out when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : to_file_(!path.empty()) {
    if (to_file_) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw FileNotFound("cannot write '" + path + "'");
    }
    stream_ = to_file_ ? static_cast<std::ostream*>(&file_) : &fallback;
  }
  std::ostream& stream() { return *stream_; }
  bool to_file() const { return to_file_; }

 private:
  bool to_file_;
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<double> grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw InvalidParameter("--grid-step must be positive");
  if (stop < start) throw InvalidParameter("--grid-stop is below --grid-start");
  std::vector<double> g;
  const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long i = 0; i <= n; ++i) g.push_back(start + static_cast<double>(i) * step);
  return g;
}

void print_point(std::ostream& out, const ChannelSpec& ch, const OperatingPoint& p) {
  out << channel_tag(ch) << (p.numeric ? " (numeric)" : "") << '\n'
      << "  d0     " << fmt("%.3f m", p.d0) << '\n'
      << "  P0     " << fmt("%.3f mW", p.p0 * 1e3) << fmt(" (%.2f dBm)", watt_to_dbm(p.p0)) << '\n'
      << "  gamma0 " << fmt("%.3f dB", linear_to_db(p.gamma0)) << '\n'
      << "  BER0   " << fmt("%.4g", p.ber0) << '\n'
      << "  p_l0   " << fmt("%.4f", p.p_l0) << '\n'
      << "  delay0 " << fmt("%.4f", p.delay0) << '\n'
      << "  EDRb0  " << fmt("%.6g J/bit/m", p.edrb0) << '\n';
}

std::vector<ChannelSpec> channels_for(const CommonOptions& o) {
  if (o.channel == "all") {
    const ModulationSpec mod = modulation_from_label(o.modulation);
    return {ChannelSpec::awgn(mod), ChannelSpec::rayleigh(mod), ChannelSpec::nakagami(o.m, mod)};
  }
  return {resolve_channel(o.channel, o.m, o.modulation)};
}

int cmd_optimum(const CommonOptions& o, std::ostream& out) {
  const RadioParameters params = resolve_params(o);
  const DerivedConstants consts = derive_constants(params);
  Sink sink(o.out_path, out);
  std::vector<std::pair<ChannelSpec, OperatingPoint>> rows;
  for (const ChannelSpec& ch : channels_for(o)) rows.emplace_back(ch, best_operating_point(consts, ch));

  if (!sink.to_file()) {
    for (const auto& [ch, p] : rows) print_point(out, ch, p);
    return kOk;
  }
  CsvWriter csv(sink.stream(), comment_line(params, "", o.seed),
                {"channel", "m", "modulation", "d0_m", "p0_w", "gamma0_db", "ber0", "pl0",
                 "delay0", "edrb0_j_per_bit_m", "method"});
  for (const auto& [ch, p] : rows) {
    csv.field(ch.name()).field(ch.m).field(ch.modulation.label).field(p.d0).field(p.p0)
        .field(linear_to_db(p.gamma0)).field(p.ber0).field(p.p_l0).field(p.delay0)
        .field(p.edrb0).field(p.numeric ? "numeric" : "closed_form");
    csv.end_row();
  }
  for (const auto& [ch, p] : rows) print_point(out, ch, p);
  return kOk;
}

struct GridOptions {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
};

int cmd_curve(const CommonOptions& o, const GridOptions& g, std::optional<double> power_dbm,
              std::ostream& out, std::ostream& err) {
  const RadioParameters params = resolve_params(o);
  const DerivedConstants consts = derive_constants(params);
  const ChannelSpec ch = resolve_channel(o.channel, o.m, o.modulation);
  const LinkMode mode = preferred_mode(ch);
  const std::vector<double> ds = grid(g.start, g.stop, g.step);
  if (ds.front() <= 0.0) throw InvalidParameter("distances must be positive");

  Sink sink(o.out_path, out);
  std::string extra = "channel=" + channel_tag(ch);
  if (power_dbm) extra += " power_dbm=" + format_double(*power_dbm);
  CsvWriter csv(sink.stream(), comment_line(params, extra, o.seed),
                {"d_m", "p_t_w", "gamma_db", "pl", "edrb_j_per_bit_m", "delay_units", "method"});
  long skipped = 0;
  for (double d : ds) {
    PowerSolution sol{};
    if (power_dbm) {
      sol.p_t = dbm_to_watt(*power_dbm);
    } else {
      sol = solve_power_for_range(consts, ch, d);
    }
    const double gamma = snr(consts, sol.p_t, d);
    const double pl = link_probability(ch, consts.n_b, gamma, mode);
    if (pl < kLinkProbabilityFloor) {
      ++skipped;
      continue;
    }
    csv.field(d).field(sol.p_t).field(linear_to_db(gamma)).field(pl)
        .field(edrb(consts, ch, sol.p_t, d)).field(1.0 / pl)
        .field(power_dbm ? "fixed" : (sol.numeric ? "numeric" : "closed_form"));
    csv.end_row();
  }
  if (skipped > 0) err << "note: " << skipped << " distances skipped (degenerate link)\n";
  if (sink.to_file()) out << "wrote " << ds.size() - skipped << " rows to " << o.out_path << '\n';
  return kOk;
}

int cmd_tradeoff(const CommonOptions& o, const GridOptions& g, double distance, int max_hops,
                 bool frontier_only, std::ostream& out, std::ostream& err) {
  const RadioParameters params = resolve_params(o);
  const DerivedConstants consts = derive_constants(params);
  const ChannelSpec ch = resolve_channel(o.channel, o.m, o.modulation);
  std::vector<double> powers_w;
  for (double dbm : grid(g.start, g.stop, g.step)) powers_w.push_back(dbm_to_watt(dbm));
  const TradeoffResult res = energy_delay_tradeoff(consts, ch, distance, max_hops, powers_w);

  Sink sink(o.out_path, out);
  const std::string extra = "channel=" + channel_tag(ch) + " distance=" + format_double(distance);
  CsvWriter csv(sink.stream(), comment_line(params, extra, o.seed),
                {"n_hops", "p_t_dbm", "delay_units", "energy_j", "on_frontier"});
  for (const TradeoffPoint& p : frontier_only ? res.frontier : res.points) {
    csv.field(p.n_hops).field(watt_to_dbm(p.p_t)).field(p.delay).field(p.energy)
        .field(p.on_frontier ? 1 : 0);
    csv.end_row();
  }
  if (res.omitted > 0) err << "note: " << res.omitted << " (n, P) pairs omitted (degenerate link)\n";
  if (sink.to_file()) {
    out << "wrote " << res.points.size() << " points (" << res.frontier.size()
        << " on the frontier) to " << o.out_path << '\n';
  }
  return kOk;
}

int cmd_dc(const CommonOptions& o, std::ostream& out) {
  const RadioParameters params = resolve_params(o);
  const DerivedConstants consts = derive_constants(params);
  const ChannelSpec ch = resolve_channel(o.channel, o.m, o.modulation);
  const OperatingPoint opt = best_operating_point(consts, ch);
  const double dc = characteristic_range(consts, ch, opt);
  if (!o.out_path.empty()) {
    Sink sink(o.out_path, out);
    CsvWriter csv(sink.stream(), comment_line(params, "", o.seed),
                  {"channel", "m", "modulation", "d0_m", "dc_m"});
    csv.field(ch.name()).field(ch.m).field(ch.modulation.label).field(opt.d0).field(dc);
    csv.end_row();
  }
  out << channel_tag(ch) << '\n'
      << "  d0 " << fmt("%.3f m", opt.d0) << '\n'
      << "  dc " << fmt("%.3f m", dc) << '\n';
  return kOk;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_sweep_impact(const CommonOptions& o, const std::string& dimension,
                     const std::string& values, std::ostream& out, std::ostream& err) {
  const RadioParameters params = resolve_params(o);
  const ChannelSpec ch = resolve_channel(o.channel, o.m, o.modulation);
  const SweepDimension dim = sweep_dimension_from_name(dimension);
  const std::vector<std::string> vals = split_list(values);
  if (vals.empty()) throw InvalidParameter("--values is empty");
  const std::vector<SweepRow> rows = impact_sweep(params, ch, dim, vals);

  Sink sink(o.out_path, out);
  const std::string extra = "channel=" + channel_tag(ch) + " dimension=" + sweep_dimension_name(dim);
  CsvWriter csv(sink.stream(), comment_line(params, extra, o.seed),
                {"dimension_value", "d0_m", "p0_w", "gamma0_db", "ber0", "pl0", "delay0",
                 "edrb0_j_per_bit_m", "method", "error"});
  long failed = 0;
  for (const SweepRow& r : rows) {
    csv.field(r.value);
    if (r.point) {
      const OperatingPoint& p = *r.point;
      csv.field(p.d0).field(p.p0).field(linear_to_db(p.gamma0)).field(p.ber0).field(p.p_l0)
          .field(p.delay0).field(p.edrb0).field(r.numeric ? "numeric" : "closed_form").field("");
    } else {
      ++failed;
      for (int i = 0; i < 7; ++i) csv.field("");
      csv.field("failed").field(r.error);
    }
    csv.end_row();
  }
  if (failed > 0) err << "note: " << failed << " of " << rows.size() << " sweep rows failed\n";
  if (sink.to_file()) out << "wrote " << rows.size() << " rows to " << o.out_path << '\n';
  return failed == static_cast<long>(rows.size()) ? kComputation : kOk;
}

struct SimulateOptions {
  std::string config_path;
  std::string kind;
  std::vector<double> densities;
  std::optional<double> side;
  std::optional<std::string> mode;
  std::optional<std::string> policy;
  std::optional<double> power_dbm;
  std::optional<int> topologies;
  std::optional<int> pairs;
  bool all_pairs = false;
  std::optional<int> repetitions;
  std::optional<double> distance;
  std::optional<int> max_hops;
  std::string records_path;
  bool channel_given = false;
  bool m_given = false;
  bool modulation_given = false;
  std::optional<GridOptions> power_grid;
};

int cmd_simulate(const CommonOptions& o, const SimulateOptions& s, std::ostream& out,
                 std::ostream& err) {
  const RadioParameters params = resolve_params(o);
  const DerivedConstants consts = derive_constants(params);
  SimulationConfig cfg;
  if (!s.config_path.empty()) cfg = simulation_config_from_json(read_file(s.config_path));
  if (!s.kind.empty()) {
    if (s.kind != "edrb" && s.kind != "tradeoff") throw InvalidParameter("--kind must be edrb or tradeoff");
    cfg.kind = s.kind;
  }
  EdrbSweepConfig& e = cfg.edrb;
  TradeoffSweepConfig& t = cfg.tradeoff;

  if (s.channel_given || s.m_given || s.modulation_given) {
    ChannelSpec ch = e.channel;
    if (s.channel_given) ch.family = channel_family_from_name(o.channel);
    if (s.m_given) ch.m = o.m;
    if (s.modulation_given) ch.modulation = modulation_from_label(o.modulation);
    e.channel = t.channel = ch;
  }
  e.channel.validate();
  if (!s.densities.empty()) e.densities = t.densities = s.densities;
  if (s.side) e.side = t.side = *s.side;
  if (o.seed) e.seed = t.seed = *o.seed;
  if (s.mode) e.mode = t.mode = eval_mode_from_name(*s.mode);
  if (s.policy) {
    if (*s.policy == "adaptive") {
      e.policy.kind = PowerPolicy::Kind::kAdaptive;
    } else if (*s.policy == "fixed") {
      e.policy.kind = PowerPolicy::Kind::kFixed;
      e.fixed_at_optimum = !s.power_dbm && !cfg.has_fixed_power;
    } else {
      throw InvalidParameter("--policy must be adaptive or fixed");
    }
  }
  if (s.power_dbm) {
    e.policy.fixed_w = dbm_to_watt(*s.power_dbm);
    e.fixed_at_optimum = false;
  }
  if (s.topologies) e.topologies = {*s.topologies};
  if (s.pairs) e.pairs_per_topology = *s.pairs;
  if (s.all_pairs) e.all_pairs = true;
  if (s.repetitions) t.repetitions = *s.repetitions;
  if (s.distance) t.distance = *s.distance;
  if (s.max_hops) t.max_hops = *s.max_hops;
  if (s.power_grid) t.power_grid_dbm = grid(s.power_grid->start, s.power_grid->stop, s.power_grid->step);

  const std::uint64_t seed = cfg.kind == "edrb" ? e.seed : t.seed;
  Sink sink(o.out_path, out);

  if (cfg.kind == "edrb") {
    const EdrbSweepResult res = sweep_edrb(consts, e);
    std::string extra = "kind=edrb channel=" + channel_tag(e.channel) + " mode=" +
                        eval_mode_name(e.mode) + " policy=" +
                        (e.policy.kind == PowerPolicy::Kind::kAdaptive ? "adaptive" : "fixed");
    if (e.policy.kind == PowerPolicy::Kind::kFixed) {
      extra += " power_w=" + format_double(e.fixed_at_optimum ? optimal_power(consts) : e.policy.fixed_w);
    }
    extra += " side=" + format_double(e.side);
    CsvWriter csv(sink.stream(), comment_line(params, extra, seed),
                  {"density", "bin_lo_m", "bin_hi_m", "count", "mean_edrb", "se_edrb",
                   "mean_bound", "mean_excess", "se_excess", "cap_hits"});
    for (const BinStat& b : res.bins) {
      csv.field(b.density).field(b.lo).field(b.hi).field(static_cast<long long>(b.count))
          .field(b.mean_edrb).field(b.se_edrb).field(b.mean_bound).field(b.mean_excess)
          .field(b.se_excess).field(static_cast<long long>(b.cap_hits));
      csv.end_row();
    }
    if (!s.records_path.empty()) {
      Sink rec_sink(s.records_path, out);
      CsvWriter rcsv(rec_sink.stream(), comment_line(params, extra, seed),
                     {"density", "topology", "src", "dst", "distance_m", "n_hops", "energy_j",
                      "delay_units", "edrb", "cap_hits"});
      for (const SimRecord& r : res.records) {
        rcsv.field(r.density).field(r.topology).field(static_cast<long long>(r.src))
            .field(static_cast<long long>(r.dst)).field(r.euclid_distance).field(r.n_hops)
            .field(r.mean_energy).field(r.mean_delay).field(r.edrb(consts.n_b))
            .field(static_cast<long long>(r.cap_hits));
        rcsv.end_row();
      }
    }
    if (res.routing_failures + res.degenerate > 0) {
      err << "note: " << res.routing_failures << " routing failures, " << res.degenerate
          << " degenerate paths\n";
    }
    if (sink.to_file()) {
      out << "simulated " << res.records.size() << " paths into " << res.bins.size()
          << " bins, wrote " << o.out_path << '\n';
    }
    return kOk;
  }

  const TradeoffSweepResult res = sweep_tradeoff(consts, t);
  const std::string extra = "kind=tradeoff channel=" + channel_tag(t.channel) + " mode=" +
                            eval_mode_name(t.mode) + " distance=" + format_double(t.distance) +
                            " side=" + format_double(t.side) +
                            " repetitions=" + std::to_string(t.repetitions);
  CsvWriter csv(sink.stream(), comment_line(params, extra, seed),
                {"density", "n_hops", "p_t_dbm", "delay_units", "energy_j", "mean_hops",
                 "samples", "on_frontier"});
  for (const TradeoffSweepPoint& p : res.points) {
    csv.field(p.density).field(p.point.n_hops).field(watt_to_dbm(p.point.p_t))
        .field(p.point.delay).field(p.point.energy).field(p.mean_hops).field(p.samples)
        .field(p.point.on_frontier ? 1 : 0);
    csv.end_row();
  }
  if (res.routing_failures + res.degenerate > 0) {
    err << "note: " << res.routing_failures << " routing failures, " << res.degenerate
        << " degenerate (route, power) pairs\n";
  }
  if (sink.to_file()) out << "wrote " << res.points.size() << " points to " << o.out_path << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy-optimal range/power and energy-delay bounds for unreliable links", "edrb"};
  app.footer(kExitCodes);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  CommonOptions o;
  GridOptions curve_grid{10.0, 400.0, 1.0};
  GridOptions power_grid{1.0, 40.0, 1.0};
  std::optional<double> power_dbm;
  double distance = 380.0;
  int max_hops = 5;
  bool frontier_only = false;
  std::string dimension;
  std::string values;
  SimulateOptions s;
  std::uint64_t seed_value = 0;

  auto* optimum = app.add_subcommand("optimum", "Energy-optimal operating point per channel");
  add_channel_options(optimum, o);
  optimum->get_option("--channel")->description("awgn | rayleigh | nakagami | all (default all)");
  add_io_options(optimum, o);

  auto* curve = app.add_subcommand("curve", "EDRb and one-hop delay over a distance grid");
  add_channel_options(curve, o);
  add_io_options(curve, o);
  curve->add_option("--grid-start", curve_grid.start, "first distance, m")->capture_default_str();
  curve->add_option("--grid-stop", curve_grid.stop, "last distance, m")->capture_default_str();
  curve->add_option("--grid-step", curve_grid.step, "distance step, m")->capture_default_str();
  curve->add_option("--power-dbm", power_dbm, "fixed transmit power instead of the per-range optimum");

  auto* tradeoff = app.add_subcommand("tradeoff", "Energy-delay points and Pareto frontier over hops and powers");
  add_channel_options(tradeoff, o);
  add_io_options(tradeoff, o);
  tradeoff->add_option("--distance", distance, "source-destination distance, m")->capture_default_str();
  tradeoff->add_option("--max-hops", max_hops, "largest hop count")->capture_default_str();
  tradeoff->add_option("--grid-start", power_grid.start, "lowest power, dBm")->capture_default_str();
  tradeoff->add_option("--grid-stop", power_grid.stop, "highest power, dBm")->capture_default_str();
  tradeoff->add_option("--grid-step", power_grid.step, "power step, dB")->capture_default_str();
  tradeoff->add_flag("--frontier-only", frontier_only, "write only the frontier points");

  auto* dc = app.add_subcommand("dc", "Characteristic range where a relay starts to pay off");
  add_channel_options(dc, o);
  add_io_options(dc, o);

  auto* sweep = app.add_subcommand("sweep-impact", "Operating point as one parameter varies");
  add_channel_options(sweep, o);
  add_io_options(sweep, o);
  sweep->add_option("--dimension", dimension, "fading_m | alpha | circuitry_scale | modulation | packet_size | rate")
      ->required();
  sweep->add_option("--values", values, "comma-separated values")->required();

  auto* simulate = app.add_subcommand("simulate", "Poisson network simulation (EDRb sweep or trade-off)");
  add_io_options(simulate, o);
  auto* sim_channel = simulate->add_option("--channel", o.channel, "awgn | rayleigh | nakagami");
  auto* sim_m = simulate->add_option("--m", o.m, "Nakagami shape parameter");
  auto* sim_mod = simulate->add_option("--modulation", o.modulation, "bpsk | qpsk | mqamM");
  simulate->add_option("--config", s.config_path, "JSON simulation config");
  simulate->add_option("--kind", s.kind, "edrb | tradeoff");
  simulate->add_option("--density", s.densities, "node density, 1/m^2 (repeatable)");
  simulate->add_option("--side", s.side, "square side, m");
  simulate->add_option("--mode", s.mode, "analytic | montecarlo");
  simulate->add_option("--policy", s.policy, "adaptive | fixed (edrb kind)");
  simulate->add_option("--power-dbm", s.power_dbm, "fixed-policy power (default: P0)");
  simulate->add_option("--topologies", s.topologies, "topologies per density");
  simulate->add_option("--pairs", s.pairs, "sampled pairs per topology");
  simulate->add_flag("--all-pairs", s.all_pairs, "evaluate every node pair");
  simulate->add_option("--repetitions", s.repetitions, "topologies per density (tradeoff kind)");
  simulate->add_option("--distance", s.distance, "injected pair distance, m (tradeoff kind)");
  simulate->add_option("--max-hops", s.max_hops, "largest hop count (tradeoff kind)");
  GridOptions sim_grid{1.0, 40.0, 1.0};
  auto* gs = simulate->add_option("--grid-start", sim_grid.start, "lowest power, dBm (tradeoff kind)");
  auto* ge = simulate->add_option("--grid-stop", sim_grid.stop, "highest power, dBm (tradeoff kind)");
  auto* gp = simulate->add_option("--grid-step", sim_grid.step, "power step, dB (tradeoff kind)");
  simulate->add_option("--records", s.records_path, "per-path CSV (edrb kind)");

  for (CLI::App* sub : {optimum, curve, tradeoff, dc, sweep, simulate}) {
    sub->add_option("--seed", seed_value, "recorded in the CSV header; seeds simulations");
    sub->footer(kExitCodes);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->count("--seed") > 0) o.seed = seed_value;
  }

  try {
    if (*optimum) {
      if (optimum->get_option("--channel")->count() == 0) o.channel = "all";
      return cmd_optimum(o, out);
    }
    if (*curve) return cmd_curve(o, curve_grid, power_dbm, out, err);
    if (*tradeoff) return cmd_tradeoff(o, power_grid, distance, max_hops, frontier_only, out, err);
    if (*dc) return cmd_dc(o, out);
    if (*sweep) return cmd_sweep_impact(o, dimension, values, out, err);
    if (*simulate) {
      s.channel_given = sim_channel->count() > 0;
      s.m_given = sim_m->count() > 0;
      s.modulation_given = sim_mod->count() > 0;
      if (gs->count() + ge->count() + gp->count() > 0) s.power_grid = sim_grid;
      return cmd_simulate(o, s, out, err);
    }
  } catch (const FileNotFound& e) {
    err << "error: " << e.what() << '\n';
    return kFileNotFound;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kValidation;
  } catch (const UnsupportedModulation& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kValidation;
  } catch (const ApproxUnavailable& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kValidation;
  } catch (const Error& e) {
    err << "computation error: " << e.what() << '\n';
    return kComputation;
  }
  err << "error: no command given\n";
  return kUsage;
}

}  // namespace edrb::cli
