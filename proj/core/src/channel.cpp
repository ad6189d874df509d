#include "edrb/channel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "edrb/errors.hpp"

namespace edrb {
namespace {

constexpr double kAwgnFitScale = 0.1826;
constexpr double kAwgnFitExponent = 0.5415;
constexpr double kRayleighValidSnr = 5.0;
constexpr double kQuadratureRelTol = 1e-8;
constexpr double kQuadratureAbsTol = 1e-14;
constexpr double kGammaTailMass = 1e-12;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

int parse_order(std::string_view digits, std::string_view label) {
  int order = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), order);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw UnsupportedModulation("unsupported modulation '" + std::string(label) + "'");
  }
  return order;
}

// p_l for block fading: average of the AWGN packet success probability over
// a gamma-distributed instantaneous SNR with shape m and mean mean_gamma.
double block_fading_quadrature(const ChannelSpec& channel, int n_b,
                               double mean_gamma) {
  const double m = channel.m;
  const double scale = mean_gamma / m;
  const boost::math::gamma_distribution<double> dist(m, scale);
  const double upper = boost::math::quantile(boost::math::complement(dist, kGammaTailMass));
  const double log_norm = -std::lgamma(m) - m * std::log(scale);

  auto integrand = [&](double g) {
    if (g <= 0.0) return 0.0;
    const double b = awgn_ber(channel.modulation, g, LinkMode::kApprox);
    const double log_pdf = log_norm + (m - 1.0) * std::log(g) - g / scale;
    return std::exp(n_b * std::log1p(-b) + log_pdf);
  };

  // The packet success probability switches from ~0 to ~1 over a narrow SNR
  // window; split there so the adaptive rule cannot step over it.
  const double a = kAwgnFitScale * channel.modulation.alpha_m * n_b;
  const double rate = kAwgnFitExponent * channel.modulation.beta_m;
  std::array<double, 4> breaks{0.0, std::max(0.0, (std::log(a) - std::log(40.0)) / rate),
                               (std::log(a) + 28.0) / rate, upper};
  double total = 0.0;
  double total_err = 0.0;
  double prev = 0.0;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    const double hi = std::min(breaks[i], upper);
    if (hi <= prev) continue;
    double err = 0.0;
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, prev, hi, 15, kQuadratureRelTol * 1e-2, &err);
    total_err += err;
    prev = hi;
  }
  if (!std::isfinite(total) ||
      total_err > kQuadratureRelTol * std::abs(total) + kQuadratureAbsTol) {
    throw QuadratureFailure("block-fading link probability did not converge (estimate " +
                            std::to_string(total) + ", error " +
                            std::to_string(total_err) + ")");
  }
  return std::clamp(total, 0.0, 1.0);
}

void require_snr(double gamma) {
  if (!(gamma > 0.0) || std::isnan(gamma)) {
    throw DomainError("SNR must be positive");
  }
}

}  // namespace

ModulationSpec bpsk() { return {1.0, 2.0, "bpsk"}; }

ModulationSpec mqam(int order) {
  if (order < 4 || !std::has_single_bit(static_cast<unsigned>(order))) {
    throw UnsupportedModulation("MQAM order must be a power of two >= 4, got " +
                                std::to_string(order));
  }
  const double bits = std::log2(static_cast<double>(order));
  ModulationSpec spec;
  spec.alpha_m = 4.0 * (1.0 - 1.0 / std::sqrt(static_cast<double>(order))) / bits;
  spec.beta_m = 3.0 * bits / (order - 1.0);
  spec.label = "mqam" + std::to_string(order);
  return spec;
}

ModulationSpec modulation_from_label(std::string_view label) {
  const std::string s = lower(label);
  if (s == "bpsk") return bpsk();
  if (s == "qpsk") return mqam(4);
  for (std::string_view prefix : {"mqam", "qam"}) {
    if (s.starts_with(prefix)) {
      return mqam(parse_order(std::string_view(s).substr(prefix.size()), label));
    }
  }
  if (s.ends_with("qam") && s.size() > 3) {
    return mqam(parse_order(std::string_view(s).substr(0, s.size() - 3), label));
  }
  throw UnsupportedModulation("unsupported modulation '" + std::string(label) + "'");
}

ChannelSpec ChannelSpec::awgn(ModulationSpec mod) {
  return {ChannelFamily::kAwgn, 1.0, std::move(mod)};
}

ChannelSpec ChannelSpec::rayleigh(ModulationSpec mod) {
  return {ChannelFamily::kRayleighFlat, 1.0, std::move(mod)};
}

ChannelSpec ChannelSpec::nakagami(double m, ModulationSpec mod) {
  ChannelSpec spec{ChannelFamily::kNakagamiBlock, m, std::move(mod)};
  spec.validate();
  return spec;
}

void ChannelSpec::validate() const {
  if (!(modulation.alpha_m > 0.0) || !(modulation.beta_m > 0.0)) {
    throw InvalidParameter("modulation coefficients must be positive");
  }
  if (family == ChannelFamily::kNakagamiBlock && !(m >= 0.5)) {
    throw InvalidParameter("Nakagami shape m must be >= 0.5");
  }
}

std::string ChannelSpec::name() const {
  switch (family) {
    case ChannelFamily::kAwgn: return "awgn";
    case ChannelFamily::kRayleighFlat: return "rayleigh";
    case ChannelFamily::kNakagamiBlock: return "nakagami";
  }
  return "unknown";
}

ChannelFamily channel_family_from_name(std::string_view name) {
  const std::string s = lower(name);
  if (s == "awgn") return ChannelFamily::kAwgn;
  if (s == "rayleigh") return ChannelFamily::kRayleighFlat;
  if (s == "nakagami") return ChannelFamily::kNakagamiBlock;
  throw InvalidParameter("unknown channel '" + std::string(name) +
                         "' (expected awgn, rayleigh or nakagami)");
}

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double awgn_ber(const ModulationSpec& mod, double gamma, LinkMode mode) {
  const double b = mode == LinkMode::kExact
                       ? mod.alpha_m * q_function(std::sqrt(mod.beta_m * gamma))
                       : kAwgnFitScale * mod.alpha_m *
                             std::exp(-kAwgnFitExponent * mod.beta_m * gamma);
  return std::min(b, 0.5);
}

BerResult ber(const ChannelSpec& channel, double gamma, LinkMode mode) {
  require_snr(gamma);
  const ModulationSpec& mod = channel.modulation;
  switch (channel.family) {
    case ChannelFamily::kAwgn:
      return {awgn_ber(mod, gamma, mode),
              mode == LinkMode::kApprox && mod.beta_m * gamma < 2.0};
    case ChannelFamily::kRayleighFlat:
      return {std::min(0.5, mod.alpha_m / (2.0 * mod.beta_m * gamma)),
              gamma < kRayleighValidSnr};
    case ChannelFamily::kNakagamiBlock:
      break;
  }
  throw DomainError("block fading has no per-bit error rate; use link_probability");
}

bool has_approx(const ChannelSpec& channel) {
  if (channel.family != ChannelFamily::kNakagamiBlock) return true;
  return channel.m == 1.0 && channel.modulation.alpha_m == 1.0;
}

LinkMode preferred_mode(const ChannelSpec& channel) {
  return has_approx(channel) ? LinkMode::kApprox : LinkMode::kExact;
}

double block_fading_fit_constant(int n_b) {
  return 4.25 * std::log10(static_cast<double>(n_b)) - 2.2;
}

double log_link_probability(const ChannelSpec& channel, int n_b,
                            double mean_gamma, LinkMode mode) {
  require_snr(mean_gamma);
  if (n_b < 1) throw DomainError("n_b must be >= 1");
  if (channel.family != ChannelFamily::kNakagamiBlock) {
    return n_b * std::log1p(-ber(channel, mean_gamma, mode).value);
  }
  if (mode == LinkMode::kApprox) {
    if (!has_approx(channel)) {
      throw ApproxUnavailable(
          "block-fading approximation requires m = 1 and alpha_m = 1");
    }
    const double c = block_fading_fit_constant(n_b);
    return std::min(0.0, -c / (channel.modulation.beta_m * mean_gamma));
  }
  return std::log(block_fading_quadrature(channel, n_b, mean_gamma));
}

double link_probability(const ChannelSpec& channel, int n_b, double mean_gamma,
                        LinkMode mode) {
  return std::exp(log_link_probability(channel, n_b, mean_gamma, mode));
}

}  // namespace edrb
