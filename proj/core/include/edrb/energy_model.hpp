#pragma once

#include <optional>

#include "edrb/channel.hpp"

namespace edrb {

// Link probabilities below this floor are treated as unusable links.
inline constexpr double kLinkProbabilityFloor = 1e-12;

/// Transceiver and propagation parameters, SI units throughout.
/// Default-constructed values are the reference transceiver
/// (CC2420-class radio at 2.4 GHz, 1 Mbit/s, 2560-bit packets).
struct RadioParameters {
  double p_start = 58.7e-3;    // W
  double t_start = 446e-6;     // s
  double p_tx_elec = 151e-3;   // W
  double alpha_amp = 174e-3;   // W
  double beta_amp = 5.0;       // amplifier proportional offset
  double p_rx_elec = 279e-3;   // W
  int n_b = 2560;              // bits per packet
  double rate = 1e6;           // bit/s
  double n0 = 3.981071705534973e-19;  // W/Hz (-154 dBm/Hz)
  double f_c = 2.4e9;          // Hz
  double g_tant = 1.0;
  double g_rant = 1.0;
  double alpha = 3.0;          // path-loss exponent
  double loss = 1.0;           // transceiver circuitry loss L
  double t_ack = 5e-3;         // s
  std::optional<double> bandwidth;  // Hz, defaults to `rate`

  double effective_bandwidth() const { return bandwidth.value_or(rate); }

  // Throws InvalidParameter naming the first violated invariant.
  void validate() const;
};

/// Constants the rest of the model is written in. `alpha` and `n_b` are
/// carried along because every downstream formula needs them.
struct DerivedConstants {
  double e_c = 0.0;  // J/bit, range-independent energy per bit
  double k1 = 0.0;   // J/bit/W, energy per bit per watt of transmit power
  double k2 = 0.0;   // m^alpha/W, SNR = k2 * p_t * d^-alpha
  double alpha = 3.0;
  int n_b = 1;
};

DerivedConstants derive_constants(const RadioParameters& params);

// e_c + k1 * p_t.
double energy_per_bit(const DerivedConstants& consts, double p_t);

// k2 * p_t * d^-alpha.
double snr(const DerivedConstants& consts, double p_t, double d);

// Expected per-bit energy for one successful hop under retransmission
// until success: energy_per_bit / p_l.
double mean_onehop_energy(const DerivedConstants& consts, double p_t, double p_l);

// Energy-distance ratio per bit, J/bit/m. The link probability is evaluated
// with `mode`, or the channel's preferred mode when omitted.
double edrb(const DerivedConstants& consts, const ChannelSpec& channel,
            double p_t, double d);
double edrb(const DerivedConstants& consts, const ChannelSpec& channel,
            double p_t, double d, LinkMode mode);

// Throws DegenerateLink when p_l is below kLinkProbabilityFloor.
void require_usable_link(double p_l);

}  // namespace edrb
