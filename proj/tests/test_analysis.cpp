#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "sqgol/classify.hpp"
#include "sqgol/cycle.hpp"
#include "sqgol/matching.hpp"
#include "sqgol/pattern.hpp"
#include "sqgol/seeding.hpp"
#include "sqgol/statistics.hpp"

using namespace sqgol;

namespace {

LivenessSeries series_of(const std::vector<double>& means) {
  LivenessSeries s;
  for (std::size_t g = 0; g < means.size(); ++g) s.append({g, means[g], 0.0});
  return s;
}

Universe<double> qutub_seed(double a) {
  return place_centered(Universe<double>(100, 100), qutub(a, a, a, a));
}

ClassifierLimits with_center() {
  ClassifierLimits l;
  l.symmetry_center = std::pair{50, 50};
  return l;
}

}  // namespace

TEST(MeanLiveness, Examples) {
  Universe<double> u(10, 10);
  EXPECT_EQ(mean_liveness(u), 0.0);
  for (double& a : u.mutable_amplitudes()) a = 1.0;
  EXPECT_EQ(mean_liveness(u), 1.0);
  auto cells = u.mutable_amplitudes();
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = i % 2 ? 0.6 : 0.8;
  EXPECT_NEAR(mean_liveness(u), 0.7, 1e-15);
}

TEST(MeanLiveness, AgreesWithLongDoubleSumWithinEightEpsilon) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto u = random_init<double>(SeedConfig{0.5, seed, 100, 100});
    long double sum = 0;
    for (double a : u.amplitudes()) sum += a;
    const double exact = static_cast<double>(sum / u.size());
    EXPECT_LE(std::abs(mean_liveness(u) - exact), 8 * std::numeric_limits<double>::epsilon());
  }
}

TEST(PairwiseSum, SmallBlocksAreSequential) {
  const std::vector<double> v = {1e16, 1.0, -1e16, 1.0};
  EXPECT_EQ(pairwise_sum<double>(v), ((1e16 + 1.0) + -1e16) + 1.0);
  EXPECT_EQ(pairwise_sum<double>(std::vector<double>{}), 0.0);
}

TEST(LivenessStd, Examples) {
  Universe<double> u(4, 4);
  EXPECT_EQ(liveness_std(u), 0.0);
  auto cells = u.mutable_amplitudes();
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = i % 2 ? 0.4 : 0.6;
  EXPECT_NEAR(liveness_std(u), 0.1, 1e-15);
}

TEST(SteadyState, ConstantSeries) {
  const auto s = steady_state_stats(series_of(std::vector<double>(600, 0.5)), 500);
  EXPECT_EQ(s.mean_of_means, 0.5);
  EXPECT_EQ(s.std_of_means, 0.0);
  EXPECT_EQ(s.sample_count, 100u);
  EXPECT_TRUE(std::isnan(s.anderson_darling));
}

TEST(SteadyState, AlternatingSeries) {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i % 2 ? 0.6 : 0.4;
  const auto s = steady_state_stats(series_of(v), 500);
  EXPECT_NEAR(s.mean_of_means, 0.5, 1e-15);
  EXPECT_NEAR(s.std_of_means, 0.1, 1e-15);
}

TEST(SteadyState, RequiresEnoughSamples) {
  EXPECT_THROW(steady_state_stats(series_of(std::vector<double>(530, 0.5)), 500), Error);
}

TEST(SteadyState, NormalityScoreSeparatesShapes) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal(0.348, 0.007);
  std::vector<double> gaussian(2000);
  std::vector<double> skewed(2000);
  for (auto& x : gaussian) x = normal(rng);
  std::exponential_distribution<double> expo(100.0);
  for (auto& x : skewed) x = expo(rng);
  EXPECT_LT(anderson_darling_normal(gaussian), 1.0);
  EXPECT_GT(anderson_darling_normal(skewed), 10.0);
}

TEST(Series, CsvRoundTripIsLossless) {
  auto u = random_init<double>(SeedConfig{0.3, 8, 30, 30});
  LivenessSeries s;
  for (std::size_t g = 0; g < 50; ++g) {
    s.record(g, u);
    u = step(u);
  }
  std::stringstream ss;
  s.write_csv(ss);
  EXPECT_EQ(LivenessSeries::read_csv(ss), s);
}

TEST(Series, RejectsOutOfOrderGenerations) {
  LivenessSeries s;
  EXPECT_THROW(s.append({1, 0.0, 0.0}), Error);
  s.append({0, 0.0, 0.0});
  EXPECT_THROW(s.append({0, 0.0, 0.0}), Error);
}

TEST(Series, MalformedCsvReportsLine) {
  std::stringstream ss("generation,mean_a,std_a\n0,0.5,0\n1,zero,0\n");
  try {
    LivenessSeries::read_csv(ss);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Cycle, StillLifeHasPeriodOne) {
  StateHistory<double> h;
  const auto u = place_centered(Universe<double>(10, 10), classical_pattern("block"));
  h.push(0, u);
  h.push(1, step(u));
  EXPECT_EQ(h.latest_period(), 1u);
}

TEST(Cycle, BlinkerHasPeriodTwo) {
  StateHistory<double> h;
  auto u = place_centered(Universe<double>(10, 10), classical_pattern("blinker"));
  for (std::size_t g = 0; g < 3; ++g) {
    h.push(g, u);
    u = step(u);
  }
  EXPECT_EQ(h.latest_period(), 2u);
}

TEST(Cycle, CloudDoesNotRecur) {
  StateHistory<double> h;
  auto u = random_init<double>(SeedConfig{0.2, 3, 100, 100});
  for (std::size_t g = 0; g < 1000; ++g) {
    h.push(g, u);
    ASSERT_FALSE(h.latest_period().has_value()) << g;
    u = step(u);
  }
}

TEST(Cycle, DetectCycleOnExplicitHistory) {
  using Entry = StateHistory<double>::Entry;
  auto u = place_centered(Universe<double>(10, 10), classical_pattern("blinker"));
  std::vector<Entry> history;
  for (std::size_t g = 0; g < 5; ++g) {
    history.push_back(Entry{g, fingerprint(u), u});
    u = step(u);
  }
  EXPECT_EQ(detect_cycle<double>(history), 2u);
  history.pop_back();
  history.push_back(Entry{4, fingerprint(Universe<double>(10, 10)), Universe<double>(10, 10)});
  EXPECT_FALSE(detect_cycle<double>(history).has_value());
}

TEST(Symmetry, SymmetricQutubHasNoDefect) {
  EXPECT_EQ(symmetry_defect(qutub_seed(0.58), 50, 50), 0.0);
}

TEST(Symmetry, PerturbationMagnitudeIsReported) {
  auto u = qutub_seed(0.58);
  u.set(60, 47, CellState<double>::from_liveness(0.125));
  EXPECT_EQ(symmetry_defect(u, 50, 50), 0.125);
}

TEST(Classify, EmptyUniverseIsExtinctAtZero) {
  const auto c = classify_outcome(Universe<double>(20, 20), ClassifierLimits{});
  ASSERT_TRUE(c.outcome.is<Extinct>());
  EXPECT_EQ(std::get<Extinct>(c.outcome.resolution).generation, 0u);
  EXPECT_EQ(c.outcome.label(), "extinct");
  EXPECT_EQ(c.series.size(), 1u);
}

TEST(Classify, HalfQutubIsExactStillLife) {
  const auto c = classify_outcome(qutub_seed(0.5), ClassifierLimits{});
  ASSERT_TRUE(c.outcome.is<StillLife>());
  EXPECT_TRUE(std::get<StillLife>(c.outcome.resolution).exact);
  EXPECT_EQ(c.generations_run, 1u);
}

TEST(Classify, BlinkerIsPeriodTwoOscillator) {
  const auto u = place_centered(Universe<double>(20, 20), classical_pattern("blinker"));
  const auto c = classify_outcome(u, ClassifierLimits{});
  EXPECT_EQ(c.outcome.label(), "oscillator");
  EXPECT_EQ(c.outcome.period(), 2u);
}

TEST(Classify, RandomSeedsBecomeCloud) {
  for (double f : {0.2, 0.8}) {
    const auto c = classify_outcome(random_init<double>(SeedConfig{f, 1, 100, 100}), ClassifierLimits{});
    ASSERT_TRUE(c.outcome.is<Cloud>()) << c.outcome.label();
    EXPECT_NEAR(std::get<Cloud>(c.outcome.resolution).steady_mean, 0.348, 0.01);
  }
}

TEST(Classify, QutubTrio) {
  const auto c57 = classify_outcome(qutub_seed(0.57), with_center());
  EXPECT_EQ(c57.outcome.label(), "extinct");

  const auto c58 = classify_outcome(qutub_seed(0.58), with_center());
  EXPECT_EQ(c58.outcome.label(), "cloud");
  EXPECT_TRUE(c58.first_asymmetric_generation.has_value());

  const auto c59 = classify_outcome(qutub_seed(0.59), with_center());
  EXPECT_EQ(c59.outcome.label(), "still_life");
  EXPECT_EQ(census(match_patterns(c59.final_state, standard_library(), 0.01)), "qutub×4;tub×1");
}

TEST(Classify, SortedSummationKeepsQutubSymmetric) {
  ClassifierLimits l = with_center();
  l.summation = Summation::kSorted;
  l.max_generations = 600;
  const auto c = classify_outcome(qutub_seed(0.58), l);
  EXPECT_FALSE(c.first_asymmetric_generation.has_value());
  EXPECT_EQ(c.max_symmetry_defect, 0.0);
}

TEST(Classify, TransientPlateauIsRecorded) {
  // Ten states that differ only below the quiescence tolerance (never an
  // exact repeat), then a jump, then extinction.
  OutcomeTracker<double> t(ClassifierLimits{});
  const auto a = place_centered(Universe<double>(10, 10), Pattern("dot", 1, 1, {{0, 0, 0.3, false}}));
  auto b = a;
  b.set(0, 0, CellState<double>::from_liveness(0.2));
  for (std::size_t g = 0; g < 10; ++g) {
    auto u = a;
    u.set(9, 9, CellState<double>::from_liveness(1e-12 * static_cast<double>(g + 1)));
    ASSERT_FALSE(t.observe(g, u).has_value());
  }
  ASSERT_FALSE(t.observe(10, b).has_value());
  const auto out = t.observe(11, Universe<double>(10, 10));
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(out->label(), "transient_extinct");
  ASSERT_TRUE(out->transient.has_value());
  EXPECT_GT(out->transient->stable_generations, kTransientThreshold);
}

TEST(Classify, UnresolvedWhenLimitHit) {
  ClassifierLimits l;
  l.max_generations = 10;
  const auto c = classify_outcome(random_init<double>(SeedConfig{0.5, 1, 50, 50}), l);
  EXPECT_EQ(c.outcome.label(), "unresolved");
  EXPECT_EQ(c.generations_run, 10u);
}

TEST(Classify, LimitsValidate) {
  ClassifierLimits l;
  l.cloud_band_low = 0.5;
  l.cloud_band_high = 0.4;
  EXPECT_THROW(l.validate(), Error);
}
