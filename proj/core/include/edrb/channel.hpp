#pragma once

#include <string>
#include <string_view>

namespace edrb {

enum class ChannelFamily { kAwgn, kRayleighFlat, kNakagamiBlock };

// Exact uses the Q-function BER (AWGN) or the fading-average quadrature
// (Nakagami block fading). Approx uses the exponential BER fit (AWGN) or the
// closed-form packet success fit (Nakagami, m = 1 and alpha_m = 1 only).
// Rayleigh flat fading has a single high-SNR model used by both modes.
enum class LinkMode { kExact, kApprox };

/// Coherent-detection BER coefficients: BER = alpha_m * Q(sqrt(beta_m * gamma)).
struct ModulationSpec {
  double alpha_m = 1.0;
  double beta_m = 2.0;
  std::string label = "bpsk";
};

ModulationSpec bpsk();
// Square/rectangular M-QAM; M must be a power of two, M >= 4.
ModulationSpec mqam(int order);
// Accepts "bpsk", "qpsk" (= mqam4) and "mqamM" / "qamM" (case-insensitive).
ModulationSpec modulation_from_label(std::string_view label);

struct ChannelSpec {
  ChannelFamily family = ChannelFamily::kAwgn;
  double m = 1.0;  // Nakagami shape, used by kNakagamiBlock only
  ModulationSpec modulation;

  static ChannelSpec awgn(ModulationSpec mod = bpsk());
  static ChannelSpec rayleigh(ModulationSpec mod = bpsk());
  static ChannelSpec nakagami(double m, ModulationSpec mod = bpsk());

  void validate() const;
  std::string name() const;  // "awgn" | "rayleigh" | "nakagami"
};

ChannelFamily channel_family_from_name(std::string_view name);

struct BerResult {
  double value = 0.0;
  // Set when gamma is outside the range the chosen model is valid for
  // (beta_m * gamma < 2 for the AWGN fit, mean gamma < 5 for Rayleigh).
  bool out_of_validity = false;
};

// Gaussian tail probability, 0.5 * erfc(x / sqrt(2)).
double q_function(double x);

// Per-bit error rate at SNR `gamma` (mean SNR for Rayleigh). Block fading has
// no per-bit error rate at packet level; asking for one throws DomainError.
BerResult ber(const ChannelSpec& channel, double gamma, LinkMode mode);

// Per-bit error rate of the AWGN model, used inside the block-fading average.
double awgn_ber(const ModulationSpec& mod, double gamma, LinkMode mode);

// Whether `mode == kApprox` is available for this channel.
bool has_approx(const ChannelSpec& channel);

// Approx where available, Exact otherwise. This is the model every closed
// form and optimizer in the library is consistent with.
LinkMode preferred_mode(const ChannelSpec& channel);

// Packet success probability p_l for an n_b-bit packet at (mean) SNR.
double link_probability(const ChannelSpec& channel, int n_b, double mean_gamma,
                        LinkMode mode);

// log(p_l); finite even when p_l underflows a double for AWGN/Rayleigh.
double log_link_probability(const ChannelSpec& channel, int n_b,
                            double mean_gamma, LinkMode mode);

// Exponent of the block-fading packet fit: p_l = exp(-c / (beta_m * gamma)),
// c = 4.25 log10(n_b) - 2.2.
double block_fading_fit_constant(int n_b);

}  // namespace edrb
