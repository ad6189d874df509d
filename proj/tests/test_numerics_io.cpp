#include <gtest/gtest.h>

#include <clocale>
#include <cmath>
#include <sstream>

#include "edrb/csv.hpp"
#include "edrb/errors.hpp"
#include "edrb/numerics.hpp"
#include "edrb/params_io.hpp"
#include "edrb/units.hpp"

namespace {

using namespace edrb;

TEST(GoldenSection, FindsParabolaMinimum) {
  const auto r = golden_section_minimize([](double x) { return (x - 1.3) * (x - 1.3) + 2.0; }, -5.0, 5.0, 1e-10);
  EXPECT_NEAR(r.x, 1.3, 1e-7);
  EXPECT_NEAR(r.value, 2.0, 1e-15);
}

TEST(ScanThenGolden, EscapesLocalMinimum) {
  auto f = [](double x) { return std::cos(3 * x) + 0.1 * x * x; };
  const auto r = scan_then_golden(f, -4.0, 4.0, 81, 1e-10);
  EXPECT_NEAR(r.x, -1.0, 0.1);
  EXPECT_LE(r.value, f(1.0) + 1e-12);
  EXPECT_THROW(scan_then_golden([](double) { return NAN; }, 0.0, 1.0, 5, 1e-6), NonConvergence);
}

TEST(FindRoot, BracketsAndFailures) {
  EXPECT_NEAR(find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0), std::sqrt(2.0), 1e-12);
  EXPECT_THROW(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), BracketFailure);
}

TEST(ParamsJson, RoundTripAndDefaults) {
  RadioParameters p;
  p.alpha = 3.5;
  p.bandwidth = 2e6;
  const RadioParameters q = radio_parameters_from_json(radio_parameters_to_json(p));
  EXPECT_EQ(q.alpha, 3.5);
  EXPECT_EQ(q.bandwidth.value(), 2e6);
  EXPECT_EQ(q.n_b, 2560);
  const RadioParameters d = radio_parameters_from_json("{\"n_b\": 320}");
  EXPECT_EQ(d.n_b, 320);
  EXPECT_EQ(d.p_start, RadioParameters{}.p_start);
  EXPECT_FALSE(d.bandwidth.has_value());
}

TEST(ParamsJson, Errors) {
  EXPECT_THROW(radio_parameters_from_json("{\"nb\": 1}"), ParseError);
  EXPECT_THROW(radio_parameters_from_json("{\"n_b\": 2.5}"), ParseError);
  EXPECT_THROW(radio_parameters_from_json("{\"alpha\": \"3\"}"), ParseError);
  EXPECT_THROW(radio_parameters_from_json("[1, 2]"), ParseError);
  EXPECT_THROW(radio_parameters_from_json("{alpha: 3}"), ParseError);
}

TEST(Overrides, PrecedenceAndDbm) {
  RadioParameters p = radio_parameters_from_json("{\"alpha\": 4}");
  apply_overrides(p, {{"alpha", "3.2"}, {"p_start_dbm", "17.7"}, {"n0_dbm", "-150"}});
  EXPECT_EQ(p.alpha, 3.2);
  EXPECT_NEAR(p.p_start, dbm_to_watt(17.7), 1e-15);
  EXPECT_NEAR(p.n0, dbm_to_watt(-150.0), 1e-25);
  EXPECT_THROW(apply_overrides(p, {{"alpha_dbm", "3"}}), ParseError);
  EXPECT_THROW(apply_overrides(p, {{"alpha", "3x"}}), ParseError);
  EXPECT_THROW(apply_overrides(p, {{"gain", "1"}}), ParseError);
}

TEST(SimulationConfigJson, ParsesKeys) {
  const SimulationConfig c = simulation_config_from_json(R"({
    "kind": "tradeoff", "densities": [0.001, 0.01], "side": 500, "channel": "nakagami",
    "m": 2, "modulation": "bpsk", "mode": "montecarlo", "seed": 9, "repetitions": 7,
    "distance": 200, "max_hops": 3, "power_grid_dbm": [10, 20]})");
  EXPECT_EQ(c.kind, "tradeoff");
  EXPECT_EQ(c.tradeoff.densities.size(), 2u);
  EXPECT_EQ(c.tradeoff.side, 500.0);
  EXPECT_EQ(c.tradeoff.channel.m, 2.0);
  EXPECT_EQ(c.tradeoff.mode, EvalMode::kMonteCarlo);
  EXPECT_EQ(c.tradeoff.seed, 9u);
  EXPECT_EQ(c.tradeoff.repetitions, 7);
  EXPECT_EQ(c.tradeoff.power_grid_dbm, (std::vector<double>{10, 20}));

  const SimulationConfig f = simulation_config_from_json(R"({"policy": "fixed"})");
  EXPECT_EQ(f.edrb.policy.kind, PowerPolicy::Kind::kFixed);
  EXPECT_TRUE(f.edrb.fixed_at_optimum);
  EXPECT_EQ(f.edrb.mode, EvalMode::kMonteCarlo);
  EXPECT_EQ(f.tradeoff.mode, EvalMode::kAnalytic);

  EXPECT_THROW(simulation_config_from_json(R"({"densitys": 1})"), ParseError);
  EXPECT_THROW(simulation_config_from_json(R"({"policy": "greedy"})"), ParseError);
  EXPECT_THROW(simulation_config_from_json(R"({"seed": -1})"), ParseError);
}

TEST(Csv, FullPrecisionLocaleFree) {
  const char* old = std::setlocale(LC_NUMERIC, nullptr);
  std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
  std::setlocale(LC_NUMERIC, old);
}

TEST(Csv, WriterQuotesAndHeader) {
  std::ostringstream out;
  CsvWriter w(out, "edrb 1.0.0 seed=1", {"a", "b"});
  w.field(1.5).field("x,y");
  w.end_row();
  EXPECT_EQ(out.str(), "# edrb 1.0.0 seed=1\na,b\n1.5,\"x,y\"\n");
}

}  // namespace
