#include "edrb/onehop.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "edrb/errors.hpp"
#include "edrb/lambert_w.hpp"
#include "edrb/numerics.hpp"
#include "edrb/parallel.hpp"

namespace edrb {
namespace {

constexpr double kAwgnFitScale = 0.1826;
constexpr double kAwgnFitExponent = 0.5415;

// Inner search runs over log mean SNR; P = gamma * d^alpha / k2.
constexpr double kLogSnrLo = -3.0;   // gamma ~ 0.05
constexpr double kLogSnrHi = 16.0;   // gamma ~ 8.9e6
constexpr int kInnerGrid = 96;
constexpr int kOuterGrid = 33;

bool is_block_fit_channel(const ChannelSpec& channel) {
  return channel.family == ChannelFamily::kNakagamiBlock && has_approx(channel);
}

// log EDRb + log d at mean SNR exp(log_snr) and hop length d (d^alpha passed in).
double log_cost(const DerivedConstants& consts, const ChannelSpec& channel,
                LinkMode mode, double d_alpha, double log_snr) {
  const double gamma = std::exp(log_snr);
  const double p_t = gamma * d_alpha / consts.k2;
  const double log_pl = log_link_probability(channel, consts.n_b, gamma, mode);
  if (!std::isfinite(log_pl)) return std::numeric_limits<double>::infinity();
  return std::log(consts.e_c + consts.k1 * p_t) - log_pl;
}

struct InnerResult {
  double p_t;
  double log_cost;
};

InnerResult inner_minimize(const DerivedConstants& consts,
                           const ChannelSpec& channel, LinkMode mode, double d) {
  const double d_alpha = std::pow(d, consts.alpha);
  const auto r = scan_then_golden(
      [&](double u) { return log_cost(consts, channel, mode, d_alpha, u); },
      kLogSnrLo, kLogSnrHi, kInnerGrid, 1e-10);
  const double step = (kLogSnrHi - kLogSnrLo) / (kInnerGrid - 1);
  if (r.x <= kLogSnrLo + step || r.x >= kLogSnrHi - step) {
    throw NonConvergence("optimal SNR at d = " + std::to_string(d) +
                         " m lies on the search boundary (log gamma = " +
                         std::to_string(r.x) + ")");
  }
  return {std::exp(r.x) * d_alpha / consts.k2, r.value};
}

double closed_form_range_awgn(const DerivedConstants& consts,
                              const ModulationSpec& mod) {
  const double n = consts.n_b;
  const double a = consts.alpha;
  const double log_neg_arg = -1.0 / (n * a) - std::log(kAwgnFitScale * mod.alpha_m * n * a);
  const double w = lambert_w_minus1_from_log(log_neg_arg);
  const double denom = consts.k1 * (a - 1.0) * (1.0 + a * n * w);
  const double d_alpha = -kAwgnFitExponent * mod.beta_m * consts.k2 * n * consts.e_c * a / denom;
  if (!(d_alpha > 0.0)) throw DomainError("AWGN optimal range is not positive");
  return std::pow(d_alpha, 1.0 / a);
}

}  // namespace

double optimal_power(const DerivedConstants& consts, double alpha) {
  if (!(alpha > 1.0)) throw DomainError("optimal_power requires alpha > 1");
  return consts.e_c / (consts.k1 * (alpha - 1.0));
}

double optimal_power(const DerivedConstants& consts) {
  return optimal_power(consts, consts.alpha);
}

bool has_closed_form(const ChannelSpec& channel) {
  return channel.family != ChannelFamily::kNakagamiBlock || has_approx(channel);
}

double optimal_range(const DerivedConstants& consts, const ChannelSpec& channel) {
  channel.validate();
  const ModulationSpec& mod = channel.modulation;
  const double n = consts.n_b;
  const double a = consts.alpha;
  switch (channel.family) {
    case ChannelFamily::kAwgn:
      return closed_form_range_awgn(consts, mod);
    case ChannelFamily::kRayleighFlat: {
      const double d_alpha = 2.0 * mod.beta_m * consts.e_c * consts.k2 /
                             ((a - 1.0) * consts.k1 * mod.alpha_m * (a * n + 1.0));
      return std::pow(d_alpha, 1.0 / a);
    }
    case ChannelFamily::kNakagamiBlock: {
      if (!has_approx(channel)) {
        throw NoClosedForm("no closed-form optimal range for Nakagami m = " +
                           std::to_string(channel.m) + " with alpha_m = " +
                           std::to_string(mod.alpha_m) + "; use numeric_optimum");
      }
      const double c = block_fading_fit_constant(consts.n_b);
      if (!(c > 0.0)) throw DomainError("block-fading fit needs n_b >= 4");
      const double d_alpha = mod.beta_m * consts.k2 * consts.e_c /
                             (consts.k1 * (a * a - a) * c);
      return std::pow(d_alpha, 1.0 / a);
    }
  }
  throw DomainError("unknown channel family");
}

OperatingPoint describe_point(const DerivedConstants& consts,
                              const ChannelSpec& channel, double d, double p_t,
                              bool numeric) {
  const LinkMode mode = preferred_mode(channel);
  OperatingPoint op;
  op.d0 = d;
  op.p0 = p_t;
  op.gamma0 = snr(consts, p_t, d);
  const double log_pl = log_link_probability(channel, consts.n_b, op.gamma0, mode);
  op.p_l0 = std::exp(log_pl);
  require_usable_link(op.p_l0);
  if (channel.family == ChannelFamily::kNakagamiBlock) {
    // Memoryless BER giving the same packet success probability.
    op.ber0 = -std::expm1(log_pl / consts.n_b);
  } else {
    op.ber0 = ber(channel, op.gamma0, mode).value;
  }
  op.delay0 = 1.0 / op.p_l0;
  op.edrb0 = energy_per_bit(consts, p_t) / (d * op.p_l0);
  op.numeric = numeric;
  return op;
}

OperatingPoint operating_point(const DerivedConstants& consts,
                               const ChannelSpec& channel) {
  const double d0 = optimal_range(consts, channel);
  return describe_point(consts, channel, d0, optimal_power(consts), false);
}

OperatingPoint best_operating_point(const DerivedConstants& consts,
                                    const ChannelSpec& channel) {
  if (has_closed_form(channel)) return operating_point(consts, channel);
  return numeric_optimum(consts, channel);
}

PowerSolution numeric_power_for_range(const DerivedConstants& consts,
                                      const ChannelSpec& channel, double d) {
  if (!(d > 0.0)) throw DomainError("distance must be positive");
  return {inner_minimize(consts, channel, preferred_mode(channel), d).p_t, true};
}

PowerSolution solve_power_for_range(const DerivedConstants& consts,
                                    const ChannelSpec& channel, double d) {
  if (!(d > 0.0)) throw DomainError("distance must be positive");
  channel.validate();
  const ModulationSpec& mod = channel.modulation;
  const double n = consts.n_b;
  const double d_alpha = std::pow(d, consts.alpha);
  const double e_c = consts.e_c;
  const double k1 = consts.k1;
  const double k2 = consts.k2;

  double p = std::numeric_limits<double>::quiet_NaN();
  switch (channel.family) {
    case ChannelFamily::kAwgn: {
      const double log_neg_arg = -kAwgnFitExponent * e_c * k2 * mod.beta_m / (k1 * d_alpha) -
                                 1.0 / n - std::log(kAwgnFitScale * mod.alpha_m * n);
      if (log_neg_arg > -1.0) break;  // outside the W_-1 domain
      const double w = lambert_w_minus1_from_log(log_neg_arg);
      p = (d_alpha + n * d_alpha * w) / (-kAwgnFitExponent * mod.beta_m * k2 * n) - e_c / k1;
      // Very short ranges: the subtraction above cancels most digits.
      if (p < 1e-8 * e_c / k1) p = std::numeric_limits<double>::quiet_NaN();
      break;
    }
    case ChannelFamily::kRayleighFlat: {
      const double am = mod.alpha_m;
      const double bm = mod.beta_m;
      p = d_alpha * (1.0 + n) * am / (4.0 * k2 * bm) +
          std::sqrt(d_alpha * k1 * am *
                    (d_alpha * k1 * (1.0 + n) * (1.0 + n) * am + 8.0 * e_c * k2 * n * bm)) /
              (4.0 * k2 * k1 * bm);
      break;
    }
    case ChannelFamily::kNakagamiBlock: {
      if (!is_block_fit_channel(channel)) break;
      const double c = block_fading_fit_constant(consts.n_b);
      if (!(c > 0.0)) break;
      p = -2.0 * e_c /
          (k1 - std::sqrt(k1 * (4.0 * e_c * mod.beta_m * k2 + d_alpha * k1 * c)) /
                    std::sqrt(d_alpha * c));
      break;
    }
  }
  if (std::isfinite(p) && p > 0.0) return {p, false};
  return numeric_power_for_range(consts, channel, d);
}

double power_for_range(const DerivedConstants& consts, const ChannelSpec& channel,
                       double d) {
  return solve_power_for_range(consts, channel, d).p_t;
}

double edrb_of_range(const DerivedConstants& consts, const ChannelSpec& channel,
                     double d) {
  return edrb(consts, channel, power_for_range(consts, channel, d), d);
}

double onehop_delay(const DerivedConstants& consts, const ChannelSpec& channel,
                    double p_t, double d) {
  const double p_l = link_probability(channel, consts.n_b, snr(consts, p_t, d),
                                      preferred_mode(channel));
  require_usable_link(p_l);
  return 1.0 / p_l;
}

OperatingPoint numeric_optimum(const DerivedConstants& consts,
                               const ChannelSpec& channel, LinkMode mode) {
  channel.validate();
  if (mode == LinkMode::kApprox && !has_approx(channel)) {
    throw ApproxUnavailable("no approximate link model for this channel");
  }
  // Starting range: the channel's own closed form, or the block-fading fit
  // with this modulation's beta_m.
  double guess = 0.0;
  if (has_closed_form(channel)) {
    guess = optimal_range(consts, channel);
  } else {
    ChannelSpec proxy = ChannelSpec::nakagami(1.0, {1.0, channel.modulation.beta_m, "proxy"});
    guess = optimal_range(consts, proxy);
  }
  const double lo = std::log(guess / 10.0);
  const double hi = std::log(guess * 10.0);

  auto outer = [&](double log_d) {
    try {
      return inner_minimize(consts, channel, mode, std::exp(log_d)).log_cost - log_d;
    } catch (const NonConvergence&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  const MinimizeResult r = scan_then_golden(outer, lo, hi, kOuterGrid, 1e-9);
  const double step = (hi - lo) / (kOuterGrid - 1);
  if (r.x <= lo + 0.5 * step || r.x >= hi - 0.5 * step) {
    throw NonConvergence("numeric optimum range hit the bracket edge at d = " +
                         std::to_string(std::exp(r.x)) + " m after " +
                         std::to_string(r.evaluations) + " evaluations");
  }
  const double d = std::exp(r.x);
  const double p = inner_minimize(consts, channel, mode, d).p_t;
  OperatingPoint op = describe_point(consts, channel, d, p, true);
  if (mode != preferred_mode(channel)) {
    const double log_pl = log_link_probability(channel, consts.n_b, op.gamma0, mode);
    op.p_l0 = std::exp(log_pl);
    op.delay0 = 1.0 / op.p_l0;
    op.edrb0 = energy_per_bit(consts, p) / (d * op.p_l0);
    op.ber0 = channel.family == ChannelFamily::kNakagamiBlock
                  ? -std::expm1(log_pl / consts.n_b)
                  : ber(channel, op.gamma0, mode).value;
  }
  return op;
}

OperatingPoint numeric_optimum(const DerivedConstants& consts,
                               const ChannelSpec& channel) {
  return numeric_optimum(consts, channel, preferred_mode(channel));
}

SweepDimension sweep_dimension_from_name(std::string_view name) {
  if (name == "fading_m" || name == "m") return SweepDimension::kFadingM;
  if (name == "alpha") return SweepDimension::kAlpha;
  if (name == "circuitry_scale") return SweepDimension::kCircuitryScale;
  if (name == "modulation") return SweepDimension::kModulation;
  if (name == "packet_size" || name == "n_b") return SweepDimension::kPacketSize;
  if (name == "rate") return SweepDimension::kRate;
  throw InvalidParameter("unknown sweep dimension '" + std::string(name) + "'");
}

std::string sweep_dimension_name(SweepDimension dimension) {
  switch (dimension) {
    case SweepDimension::kFadingM: return "fading_m";
    case SweepDimension::kAlpha: return "alpha";
    case SweepDimension::kCircuitryScale: return "circuitry_scale";
    case SweepDimension::kModulation: return "modulation";
    case SweepDimension::kPacketSize: return "packet_size";
    case SweepDimension::kRate: return "rate";
  }
  return "unknown";
}

namespace {

double parse_number(const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw InvalidParameter("not a number: '" + text + "'");
  }
  return v;
}

SweepRow sweep_row(const RadioParameters& base, const ChannelSpec& base_channel,
                   SweepDimension dimension, const std::string& value) {
  SweepRow row;
  row.value = value;
  try {
    RadioParameters params = base;
    ChannelSpec channel = base_channel;
    switch (dimension) {
      case SweepDimension::kFadingM:
        if (channel.family != ChannelFamily::kNakagamiBlock) {
          throw InvalidParameter("fading_m sweeps need the nakagami channel");
        }
        channel.m = parse_number(value);
        break;
      case SweepDimension::kAlpha:
        params.alpha = parse_number(value);
        break;
      case SweepDimension::kCircuitryScale: {
        const double s = parse_number(value);
        params.p_tx_elec *= s;
        params.p_rx_elec *= s;
        params.alpha_amp *= s;
        params.p_start *= s;
        break;
      }
      case SweepDimension::kModulation:
        channel.modulation = modulation_from_label(value);
        break;
      case SweepDimension::kPacketSize: {
        const double n = parse_number(value);
        if (n != std::floor(n)) throw InvalidParameter("packet size must be an integer");
        params.n_b = static_cast<int>(n);
        break;
      }
      case SweepDimension::kRate:
        params.rate = parse_number(value);
        break;
    }
    channel.validate();
    const DerivedConstants consts = derive_constants(params);
    row.numeric = !has_closed_form(channel);
    row.point = row.numeric ? numeric_optimum(consts, channel)
                            : operating_point(consts, channel);
  } catch (const std::exception& e) {
    row.point.reset();
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> impact_sweep(const RadioParameters& params,
                                   const ChannelSpec& channel,
                                   SweepDimension dimension,
                                   const std::vector<std::string>& values) {
  std::vector<SweepRow> rows(values.size());
  parallel_for(values.size(), [&](std::size_t i) {
    rows[i] = sweep_row(params, channel, dimension, values[i]);
  });
  return rows;
}

}  // namespace edrb
