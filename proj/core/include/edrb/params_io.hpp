#pragma once

#include <map>
#include <string>
#include <string_view>

#include "edrb/energy_model.hpp"
#include "edrb/simulation.hpp"

namespace edrb {

// Parses a JSON object whose keys are RadioParameters field names. Missing
// keys keep their defaults; unknown keys are a ParseError.
RadioParameters radio_parameters_from_json(std::string_view json_text,
                                           RadioParameters base = {});

// Compact single-line JSON with every field, bandwidth resolved.
std::string radio_parameters_to_json(const RadioParameters& params);

// Applies key=value overrides on top of `params`. Power fields also accept a
// `_dbm` suffix (e.g. p_start_dbm=17.7). Throws ParseError for unknown keys
// or malformed numbers.
void apply_overrides(RadioParameters& params,
                     const std::map<std::string, std::string>& overrides);

struct SimulationConfig {
  std::string kind = "edrb";  // "edrb" | "tradeoff"
  EdrbSweepConfig edrb;
  TradeoffSweepConfig tradeoff;
  bool has_fixed_power = false;
};

// Keys: kind, densities, topologies, side, channel, m, modulation, policy
// ("adaptive" | "fixed"), power_dbm, mode ("analytic" | "montecarlo"), seed,
// pairs_per_topology, all_pairs, max_attempts, bin_width, distance,
// max_hops, power_grid_dbm, repetitions.
SimulationConfig simulation_config_from_json(std::string_view json_text);

}  // namespace edrb
