#include "edrb/energy_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "edrb/errors.hpp"
#include "edrb/units.hpp"

namespace edrb {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidParameter(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

void RadioParameters::validate() const {
  require_positive(p_start, "p_start");
  require_positive(t_start, "t_start");
  require_positive(p_tx_elec, "p_tx_elec");
  require_positive(alpha_amp, "alpha_amp");
  require_positive(p_rx_elec, "p_rx_elec");
  require_positive(rate, "rate");
  require_positive(n0, "n0");
  require_positive(f_c, "f_c");
  require_positive(g_tant, "g_tant");
  require_positive(g_rant, "g_rant");
  require_positive(t_ack, "t_ack");
  if (bandwidth) require_positive(*bandwidth, "bandwidth");
  if (!(beta_amp >= 1.0)) throw InvalidParameter("beta_amp must be >= 1");
  if (!(alpha >= 2.0)) throw InvalidParameter("alpha must be >= 2");
  if (!(loss >= 1.0)) throw InvalidParameter("loss must be >= 1");
  if (n_b < 1) throw InvalidParameter("n_b must be >= 1");
}

DerivedConstants derive_constants(const RadioParameters& params) {
  params.validate();
  const double n_b = params.n_b;
  const double circuitry = params.p_tx_elec + params.p_rx_elec + params.alpha_amp;

  DerivedConstants c;
  // Two radio start-ups per packet (sender and receiver), circuitry for the
  // packet airtime plus the ACK wait, all spread over the packet's bits.
  c.e_c = 2.0 * params.t_start * params.p_start / n_b +
          circuitry * (1.0 / params.rate + params.t_ack / n_b);
  c.k1 = params.beta_amp / params.rate;
  const double lambda = kSpeedOfLight / params.f_c;
  const double four_pi = 4.0 * std::numbers::pi;
  c.k2 = params.g_tant * params.g_rant * lambda * lambda /
         (four_pi * four_pi * params.n0 * params.effective_bandwidth() *
          params.loss);
  c.alpha = params.alpha;
  c.n_b = params.n_b;
  return c;
}

double energy_per_bit(const DerivedConstants& consts, double p_t) {
  if (p_t < 0.0) throw DomainError("transmit power must be non-negative");
  return consts.e_c + consts.k1 * p_t;
}

double snr(const DerivedConstants& consts, double p_t, double d) {
  if (!(d > 0.0)) throw DomainError("distance must be positive");
  if (!(p_t > 0.0)) throw DomainError("transmit power must be positive");
  return consts.k2 * p_t * std::pow(d, -consts.alpha);
}

void require_usable_link(double p_l) {
  if (!(p_l >= kLinkProbabilityFloor)) {
    throw DegenerateLink("link probability " + std::to_string(p_l) +
                         " is below the 1e-12 floor");
  }
}

double mean_onehop_energy(const DerivedConstants& consts, double p_t,
                          double p_l) {
  if (p_l > 1.0) throw DomainError("link probability above 1");
  require_usable_link(p_l);
  return energy_per_bit(consts, p_t) / p_l;
}

double edrb(const DerivedConstants& consts, const ChannelSpec& channel,
            double p_t, double d, LinkMode mode) {
  const double gamma = snr(consts, p_t, d);
  const double p_l = link_probability(channel, consts.n_b, gamma, mode);
  return mean_onehop_energy(consts, p_t, p_l) / d;
}

double edrb(const DerivedConstants& consts, const ChannelSpec& channel,
            double p_t, double d) {
  return edrb(consts, channel, p_t, d, preferred_mode(channel));
}

}  // namespace edrb
