#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edrb/channel.hpp"
#include "edrb/energy_model.hpp"

namespace edrb {

/// Energy-optimal single-hop operating point.
struct OperatingPoint {
  double d0 = 0.0;       // m
  double p0 = 0.0;       // W
  double gamma0 = 0.0;   // linear (mean) SNR at (d0, p0)
  double ber0 = 0.0;     // per-bit error rate at gamma0
  double p_l0 = 0.0;     // packet success probability
  double delay0 = 0.0;   // one-hop delay units, 1 / p_l0
  double edrb0 = 0.0;    // J/bit/m
  bool numeric = false;  // true when produced by numeric_optimum
};

// Transmit power minimizing EDRb jointly with range: e_c / (k1 (alpha - 1)).
// Independent of channel and modulation.
double optimal_power(const DerivedConstants& consts);
double optimal_power(const DerivedConstants& consts, double alpha);

// True for AWGN and Rayleigh (any modulation) and Nakagami m = 1 with
// alpha_m = 1.
bool has_closed_form(const ChannelSpec& channel);

// Closed-form optimal hop length. Throws NoClosedForm otherwise.
double optimal_range(const DerivedConstants& consts, const ChannelSpec& channel);

OperatingPoint operating_point(const DerivedConstants& consts,
                               const ChannelSpec& channel);

// Closed form when available, numeric_optimum otherwise.
OperatingPoint best_operating_point(const DerivedConstants& consts,
                                    const ChannelSpec& channel);

struct PowerSolution {
  double p_t = 0.0;
  bool numeric = false;  // closed form unavailable, out of domain or ill-conditioned
};

// Transmit power minimizing EDRb at a fixed range d.
PowerSolution solve_power_for_range(const DerivedConstants& consts,
                                    const ChannelSpec& channel, double d);
double power_for_range(const DerivedConstants& consts,
                       const ChannelSpec& channel, double d);

// Numeric minimizer of EDRb over p_t at fixed d, without closed forms.
PowerSolution numeric_power_for_range(const DerivedConstants& consts,
                                      const ChannelSpec& channel, double d);

// EDRb at (d, power_for_range(d)).
double edrb_of_range(const DerivedConstants& consts, const ChannelSpec& channel,
                     double d);

// Mean one-hop delay 1 / p_l in one-hop units.
double onehop_delay(const DerivedConstants& consts, const ChannelSpec& channel,
                    double p_t, double d);

/// Joint minimization of EDRb over (d, p_t) by nested golden-section search,
/// for every channel including Nakagami m != 1. `mode` defaults to the
/// channel's preferred link model.
OperatingPoint numeric_optimum(const DerivedConstants& consts,
                               const ChannelSpec& channel);
OperatingPoint numeric_optimum(const DerivedConstants& consts,
                               const ChannelSpec& channel, LinkMode mode);

// Bundle the derived quantities at an arbitrary (d, p_t).
OperatingPoint describe_point(const DerivedConstants& consts,
                              const ChannelSpec& channel, double d, double p_t,
                              bool numeric);

enum class SweepDimension {
  kFadingM,
  kAlpha,
  kCircuitryScale,
  kModulation,
  kPacketSize,
  kRate
};

SweepDimension sweep_dimension_from_name(std::string_view name);
std::string sweep_dimension_name(SweepDimension dimension);

struct SweepRow {
  std::string value;                    // as given, e.g. "3.5" or "mqam16"
  std::optional<OperatingPoint> point;  // empty when the row failed
  bool numeric = false;                 // routed to numeric_optimum
  std::string error;                    // non-empty when the row failed
};

/// One operating point per value of `dimension`, the other parameters held
/// at `params` / `channel`. Row failures are recorded and the sweep continues.
/// Rows are evaluated in parallel; output order follows `values`.
std::vector<SweepRow> impact_sweep(const RadioParameters& params,
                                   const ChannelSpec& channel,
                                   SweepDimension dimension,
                                   const std::vector<std::string>& values);

}  // namespace edrb
