#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "edrb/energy_model.hpp"
#include "edrb/errors.hpp"
#include "edrb/units.hpp"
#include "oracle.hpp"

namespace {

using namespace edrb;

TEST(DeriveConstants, DefaultsMatchHandEvaluation) {
  const DerivedConstants c = derive_constants(RadioParameters{});
  const oracle::RadioDefaults t;
  EXPECT_NEAR(c.e_c, oracle::ec(t), 1e-12 * oracle::ec(t));
  EXPECT_NEAR(c.e_c, 1.804e-6, 0.001e-6);
  EXPECT_DOUBLE_EQ(c.k1, 5.0e-6);
  EXPECT_NEAR(c.k2, oracle::k2(t), 1e-9 * oracle::k2(t));
  EXPECT_NEAR(c.k2, 2.486e8, 0.01e8);
  EXPECT_EQ(c.n_b, 2560);
  EXPECT_EQ(c.alpha, 3.0);
}

TEST(DeriveConstants, BandwidthDefaultsToRate) {
  RadioParameters p;
  const double k2_default = derive_constants(p).k2;
  p.bandwidth = 2e6;
  EXPECT_NEAR(derive_constants(p).k2, 0.5 * k2_default, 1e-9 * k2_default);
}

TEST(DeriveConstants, BitIdenticalOnRepeat) {
  RadioParameters p;
  p.alpha = 3.7;
  p.n_b = 777;
  const DerivedConstants a = derive_constants(p);
  const DerivedConstants b = derive_constants(p);
  EXPECT_EQ(std::memcmp(&a, &b, sizeof a), 0);
}

TEST(DeriveConstants, RejectsInvalidParameters) {
  auto bad = [](auto mutate) {
    RadioParameters p;
    mutate(p);
    EXPECT_THROW(derive_constants(p), InvalidParameter);
  };
  bad([](RadioParameters& p) { p.p_start = 0.0; });
  bad([](RadioParameters& p) { p.t_start = -1.0; });
  bad([](RadioParameters& p) { p.beta_amp = 0.5; });
  bad([](RadioParameters& p) { p.alpha = 1.9; });
  bad([](RadioParameters& p) { p.loss = 0.9; });
  bad([](RadioParameters& p) { p.n_b = 0; });
  bad([](RadioParameters& p) { p.n0 = 0.0; });
  bad([](RadioParameters& p) { p.bandwidth = -5.0; });
}

TEST(EnergyPerBit, Examples) {
  DerivedConstants c;
  c.e_c = 1.804e-6;
  c.k1 = 5e-6;
  EXPECT_DOUBLE_EQ(energy_per_bit(c, 0.0), 1.804e-6);
  EXPECT_NEAR(energy_per_bit(derive_constants({}), 0.1804), 2.706e-6, 0.001e-6);
  c.e_c = 0.0;
  EXPECT_DOUBLE_EQ(energy_per_bit(c, 1.0), 5e-6);
  EXPECT_THROW(energy_per_bit(c, -1e-3), DomainError);
}

TEST(EnergyPerBit, AffineWithSlopeK1) {
  const DerivedConstants c = derive_constants({});
  for (double p : {0.01, 0.3, 2.0}) {
    EXPECT_NEAR(energy_per_bit(c, p + 0.5) - energy_per_bit(c, p), 0.5 * c.k1, 1e-18);
  }
}

TEST(Snr, Examples) {
  const DerivedConstants c = derive_constants({});
  const double g = snr(c, 0.1804, 172.31);
  EXPECT_NEAR(g, 8.77, 0.05);
  EXPECT_NEAR(linear_to_db(g), 9.4, 0.05);
  EXPECT_DOUBLE_EQ(snr(c, 0.2, 100.0), 2.0 * snr(c, 0.1, 100.0));
  DerivedConstants unit;
  unit.k2 = 1.0;
  EXPECT_DOUBLE_EQ(snr(unit, 1.0, 1.0), 1.0);
  EXPECT_THROW(snr(c, 0.1, 0.0), DomainError);
  EXPECT_THROW(snr(c, 0.1, -3.0), DomainError);
}

TEST(Snr, MonotoneInDistanceAndPower) {
  const DerivedConstants c = derive_constants({});
  double prev = snr(c, 0.1, 1.0);
  for (double d = 2.0; d < 1000.0; d *= 1.3) {
    const double g = snr(c, 0.1, d);
    EXPECT_LT(g, prev);
    prev = g;
  }
  EXPECT_GT(snr(c, 0.11, 50.0), snr(c, 0.1, 50.0));
}

TEST(MeanOnehopEnergy, Examples) {
  DerivedConstants c;
  c.e_c = 2.7e-6;
  c.k1 = 0.0;
  EXPECT_DOUBLE_EQ(mean_onehop_energy(c, 0.0, 1.0), 2.7e-6);
  EXPECT_DOUBLE_EQ(mean_onehop_energy(c, 0.0, 0.5), 5.4e-6);
  const DerivedConstants t = derive_constants({});
  EXPECT_NEAR(mean_onehop_energy(t, 0.18, 0.7165), energy_per_bit(t, 0.18) / 0.7165, 1e-20);
  EXPECT_THROW(mean_onehop_energy(c, 0.0, 0.0), DegenerateLink);
  EXPECT_THROW(mean_onehop_energy(c, 0.0, 1e-13), DegenerateLink);
}

TEST(Edrb, MatchesFormulaAtAwgnOptimum) {
  const DerivedConstants c = derive_constants({});
  const ChannelSpec ch = ChannelSpec::awgn();
  const double p = 0.1804;
  const double d = 172.31;
  const double g = snr(c, p, d);
  const double pl = oracle::pl_from_ber(oracle::ber_awgn_approx(1.0, 2.0, g), 2560);
  EXPECT_NEAR(edrb::edrb(c, ch, p, d), energy_per_bit(c, p) / (d * pl), 1e-12 * edrb::edrb(c, ch, p, d));
  EXPECT_NEAR(pl, 0.9655, 0.002);
}

TEST(Edrb, PerfectLinkIsEnergyOverDistance) {
  const DerivedConstants c = derive_constants({});
  // Very short hop: p_l rounds to 1 in double precision.
  const double d = 1.0;
  const double p = 1.0;
  EXPECT_DOUBLE_EQ(edrb::edrb(c, ChannelSpec::awgn(), p, d), energy_per_bit(c, p) / d);
}

TEST(Edrb, DecreasingInLinkProbability) {
  const DerivedConstants c = derive_constants({});
  const double eb = energy_per_bit(c, 0.2);
  double prev = std::numeric_limits<double>::infinity();
  for (double pl : {0.1, 0.3, 0.6, 0.9, 1.0}) {
    const double v = mean_onehop_energy(c, 0.2, pl) / 100.0;
    EXPECT_LT(v, prev);
    EXPECT_NEAR(v, eb / (100.0 * pl), 1e-20);
    prev = v;
  }
}

TEST(Units, Conversions) {
  EXPECT_DOUBLE_EQ(dbm_to_watt(30.0), 1.0);
  EXPECT_NEAR(watt_to_dbm(0.18041), 22.563, 1e-3);
  EXPECT_NEAR(db_to_linear(linear_to_db(8.77)), 8.77, 1e-12);
  EXPECT_NEAR(dbm_to_watt(-154.0), 3.981071705534973e-19, 1e-30);
}

}  // namespace
