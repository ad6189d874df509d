#include "edrb/params_io.hpp"

#include <charconv>
#include <cmath>
#include <functional>

#include <json.hpp>

#include "edrb/errors.hpp"
#include "edrb/units.hpp"

namespace edrb {

namespace {

using nlohmann::json;

struct Field {
  const char* name;
  bool is_power;
  std::function<void(RadioParameters&, double)> set;
  std::function<double(const RadioParameters&)> get;
};

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      {"p_start", true, [](auto& p, double v) { p.p_start = v; }, [](const auto& p) { return p.p_start; }},
      {"t_start", false, [](auto& p, double v) { p.t_start = v; }, [](const auto& p) { return p.t_start; }},
      {"p_tx_elec", true, [](auto& p, double v) { p.p_tx_elec = v; }, [](const auto& p) { return p.p_tx_elec; }},
      {"alpha_amp", true, [](auto& p, double v) { p.alpha_amp = v; }, [](const auto& p) { return p.alpha_amp; }},
      {"beta_amp", false, [](auto& p, double v) { p.beta_amp = v; }, [](const auto& p) { return p.beta_amp; }},
      {"p_rx_elec", true, [](auto& p, double v) { p.p_rx_elec = v; }, [](const auto& p) { return p.p_rx_elec; }},
      {"n_b", false,
       [](auto& p, double v) {
         if (v != std::floor(v) || v < 1 || v > 1e9) throw ParseError("n_b must be a positive integer");
         p.n_b = static_cast<int>(v);
       },
       [](const auto& p) { return static_cast<double>(p.n_b); }},
      {"rate", false, [](auto& p, double v) { p.rate = v; }, [](const auto& p) { return p.rate; }},
      {"n0", true, [](auto& p, double v) { p.n0 = v; }, [](const auto& p) { return p.n0; }},
      {"f_c", false, [](auto& p, double v) { p.f_c = v; }, [](const auto& p) { return p.f_c; }},
      {"g_tant", false, [](auto& p, double v) { p.g_tant = v; }, [](const auto& p) { return p.g_tant; }},
      {"g_rant", false, [](auto& p, double v) { p.g_rant = v; }, [](const auto& p) { return p.g_rant; }},
      {"alpha", false, [](auto& p, double v) { p.alpha = v; }, [](const auto& p) { return p.alpha; }},
      {"loss", false, [](auto& p, double v) { p.loss = v; }, [](const auto& p) { return p.loss; }},
      {"t_ack", false, [](auto& p, double v) { p.t_ack = v; }, [](const auto& p) { return p.t_ack; }},
      {"bandwidth", false, [](auto& p, double v) { p.bandwidth = v; },
       [](const auto& p) { return p.effective_bandwidth(); }},
  };
  return table;
}

// Resolves "name" or "name_dbm"; returns nullptr when unknown.
const Field* lookup(std::string_view key, bool& in_dbm) {
  in_dbm = false;
  for (const Field& f : fields()) {
    if (key == f.name) return &f;
  }
  constexpr std::string_view suffix = "_dbm";
  if (key.size() > suffix.size() && key.ends_with(suffix)) {
    const std::string_view base = key.substr(0, key.size() - suffix.size());
    for (const Field& f : fields()) {
      if (f.is_power && base == f.name) {
        in_dbm = true;
        return &f;
      }
    }
  }
  return nullptr;
}

// n0 in dBm is per hertz, so the same conversion applies.
void assign(RadioParameters& params, std::string_view key, double value) {
  bool in_dbm = false;
  const Field* f = lookup(key, in_dbm);
  if (!f) throw ParseError("unknown parameter '" + std::string(key) + "'");
  f->set(params, in_dbm ? dbm_to_watt(value) : value);
}

double parse_number(std::string_view key, std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    throw ParseError("malformed number for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return v;
}

json parse_object(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("expected a JSON object");
  return j;
}

double number_at(const json& j, const std::string& key) {
  if (!j.is_number()) throw ParseError("'" + key + "' must be a number");
  return j.get<double>();
}

long integer_at(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ParseError("'" + key + "' must be an integer");
  return j.get<long>();
}

std::vector<double> numbers_at(const json& j, const std::string& key) {
  std::vector<double> out;
  if (j.is_number()) {
    out.push_back(j.get<double>());
    return out;
  }
  if (!j.is_array()) throw ParseError("'" + key + "' must be a number or an array");
  for (const json& v : j) out.push_back(number_at(v, key));
  return out;
}

std::string string_at(const json& j, const std::string& key) {
  if (!j.is_string()) throw ParseError("'" + key + "' must be a string");
  return j.get<std::string>();
}

}  // namespace

RadioParameters radio_parameters_from_json(std::string_view json_text, RadioParameters base) {
  const json j = parse_object(json_text);
  for (const auto& [key, value] : j.items()) {
    assign(base, key, number_at(value, key));
  }
  return base;
}

std::string radio_parameters_to_json(const RadioParameters& params) {
  json j = json::object();
  for (const Field& f : fields()) {
    if (std::string_view(f.name) == "n_b") {
      j[f.name] = params.n_b;
    } else {
      j[f.name] = f.get(params);
    }
  }
  return j.dump();
}

void apply_overrides(RadioParameters& params,
                     const std::map<std::string, std::string>& overrides) {
  for (const auto& [key, text] : overrides) {
    assign(params, key, parse_number(key, text));
  }
}

SimulationConfig simulation_config_from_json(std::string_view json_text) {
  const json j = parse_object(json_text);
  SimulationConfig cfg;
  if (j.contains("kind")) {
    cfg.kind = string_at(j["kind"], "kind");
    if (cfg.kind != "edrb" && cfg.kind != "tradeoff") {
      throw ParseError("kind must be 'edrb' or 'tradeoff'");
    }
  }
  EdrbSweepConfig& e = cfg.edrb;
  TradeoffSweepConfig& t = cfg.tradeoff;
  // The trade-off study defaults to the analytic evaluation; the EDRb sweep
  // defaults to Monte Carlo. An explicit "mode" sets both.
  std::string family = "nakagami";
  double m = 1.0;
  std::string modulation = "bpsk";
  std::string policy = "adaptive";

  for (const auto& [key, v] : j.items()) {
    if (key == "kind") continue;
    if (key == "densities") {
      e.densities = numbers_at(v, key);
      t.densities = e.densities;
    } else if (key == "topologies") {
      e.topologies.clear();
      for (double x : numbers_at(v, key)) {
        if (x != std::floor(x) || x < 1) throw ParseError("topologies must be positive integers");
        e.topologies.push_back(static_cast<int>(x));
      }
    } else if (key == "side") {
      e.side = t.side = number_at(v, key);
    } else if (key == "channel") {
      family = string_at(v, key);
    } else if (key == "m") {
      m = number_at(v, key);
    } else if (key == "modulation") {
      modulation = string_at(v, key);
    } else if (key == "policy") {
      policy = string_at(v, key);
    } else if (key == "power_dbm") {
      e.policy.fixed_w = dbm_to_watt(number_at(v, key));
      cfg.has_fixed_power = true;
    } else if (key == "mode") {
      try {
        e.mode = t.mode = eval_mode_from_name(string_at(v, key));
      } catch (const InvalidParameter& ex) {
        throw ParseError(ex.what());
      }
    } else if (key == "seed") {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ParseError("seed must be a non-negative integer");
      }
      e.seed = t.seed = v.get<std::uint64_t>();
    } else if (key == "pairs_per_topology") {
      e.pairs_per_topology = static_cast<int>(integer_at(v, key));
    } else if (key == "all_pairs") {
      if (!v.is_boolean()) throw ParseError("all_pairs must be a boolean");
      e.all_pairs = v.get<bool>();
    } else if (key == "max_attempts") {
      e.max_attempts = t.max_attempts = integer_at(v, key);
    } else if (key == "bin_width") {
      e.bin_width = number_at(v, key);
    } else if (key == "distance") {
      t.distance = number_at(v, key);
    } else if (key == "max_hops") {
      t.max_hops = static_cast<int>(integer_at(v, key));
    } else if (key == "power_grid_dbm") {
      t.power_grid_dbm = numbers_at(v, key);
    } else if (key == "repetitions") {
      t.repetitions = static_cast<int>(integer_at(v, key));
    } else {
      throw ParseError("unknown configuration key '" + key + "'");
    }
  }

  try {
    ChannelSpec ch;
    ch.family = channel_family_from_name(family);
    ch.m = m;
    ch.modulation = modulation_from_label(modulation);
    e.channel = t.channel = ch;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& ex) {
    throw ParseError(ex.what());
  }

  if (policy == "adaptive") {
    e.policy.kind = PowerPolicy::Kind::kAdaptive;
  } else if (policy == "fixed") {
    e.policy.kind = PowerPolicy::Kind::kFixed;
    e.fixed_at_optimum = !cfg.has_fixed_power;
  } else {
    throw ParseError("policy must be 'adaptive' or 'fixed'");
  }
  if (e.max_attempts < 1) throw ParseError("max_attempts must be >= 1");
  if (e.pairs_per_topology < 1 && !e.all_pairs) throw ParseError("pairs_per_topology must be >= 1");
  return cfg;
}

}  // namespace edrb
