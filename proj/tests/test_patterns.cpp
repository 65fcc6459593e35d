#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "sqgol/engine.hpp"
#include "sqgol/matching.hpp"
#include "sqgol/pattern.hpp"
#include "sqgol/seeding.hpp"
#include "sqgol/still_life.hpp"

using namespace sqgol;

namespace {

std::size_t nonzero(const Universe<double>& u) {
  std::size_t n = 0;
  for (double a : u.amplitudes()) n += a != 0.0;
  return n;
}

}  // namespace

TEST(RandomInit, ZeroFractionIsDead) {
  EXPECT_TRUE(random_init<double>(SeedConfig{0.0, 5, 30, 30}).all_dead());
}

TEST(RandomInit, FullFractionSeedsEveryCell) {
  const auto u = random_init<double>(SeedConfig{1.0, 5, 30, 30});
  for (double a : u.amplitudes()) {
    EXPECT_GT(a, 0.0);
    EXPECT_LT(a, 1.0);
  }
}

TEST(RandomInit, SeededCountWithinFiveSigma) {
  const double sigma = std::sqrt(10000 * 0.2 * 0.8);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto u = random_init<double>(SeedConfig{0.2, seed, 100, 100});
    EXPECT_LE(std::abs(static_cast<double>(nonzero(u)) - 2000.0), 5 * sigma) << seed;
  }
}

TEST(RandomInit, ReproducibleAndSeedSensitive) {
  const SeedConfig a{0.4, 17, 25, 25};
  SeedConfig b = a;
  b.rng_seed = 18;
  EXPECT_EQ(random_init<double>(a), random_init<double>(a));
  EXPECT_NE(random_init<double>(a), random_init<double>(b));
}

TEST(RandomInit, FloatIsRoundedDouble) {
  const SeedConfig cfg{0.5, 3, 20, 20};
  EXPECT_EQ(random_init<float>(cfg), convert<float>(random_init<double>(cfg)));
}

TEST(RandomInit, RejectsBadConfig) {
  EXPECT_THROW(random_init<double>(SeedConfig{1.5, 1, 10, 10}), Error);
  EXPECT_THROW(random_init<double>(SeedConfig{0.5, 1, 2, 10}), Error);
}

TEST(Qutub, HalfCornersAreStill) {
  EXPECT_TRUE(is_still_life<double>(qutub(0.5, 0.5, 0.5, 0.5)));
  EXPECT_TRUE(is_still_life<float>(qutub(0.5, 0.5, 0.5, 0.5)));
}

TEST(Qutub, HeavyCornersAreNotStill) {
  EXPECT_FALSE(is_still_life<double>(qutub(0.6, 0.6, 0.6, 0.6)));
}

TEST(Qutub, AlternatingCornersSummingToOneAreStill) {
  // Corners are NW, NE, SW, SE: 0.3 and 0.7 alternate around the ring.
  EXPECT_TRUE(is_still_life<double>(qutub(0.3, 0.7, 0.7, 0.3)));
}

TEST(Qutub, OneHeavyEdgeBreaksStillness) {
  // NE + SE = 1.4 even though NW + NE = SW + SE = 1.
  EXPECT_FALSE(is_still_life<double>(qutub(0.3, 0.7, 0.3, 0.7)));
}

TEST(Qutub, StencilShape) {
  const Pattern q = qutub(0.1, 0.2, 0.3, 0.4);
  EXPECT_EQ(q.cells().size(), 8u);
  const auto u = place(Universe<double>(100, 100), q, 49, 49);
  EXPECT_EQ(nonzero(u), 8u);
  EXPECT_EQ(u.alive(49, 49), 0.1);
  EXPECT_EQ(u.alive(51, 49), 0.2);
  EXPECT_EQ(u.alive(49, 51), 0.3);
  EXPECT_EQ(u.alive(51, 51), 0.4);
  EXPECT_EQ(u.alive(50, 50), 0.0);
  EXPECT_EQ(u.alive(50, 49), 1.0);
}

TEST(Qutub, CenteredPlacementPutsCenterMidGrid) {
  const auto u = place_centered(Universe<double>(100, 100), qutub(0.2, 0.2, 0.2, 0.2));
  EXPECT_EQ(u.alive(50, 50), 0.0);
  EXPECT_EQ(u.alive(49, 49), 0.2);
  EXPECT_EQ(u.alive(51, 51), 0.2);
}

TEST(Qutub, RejectsOutOfRangeCorners) {
  EXPECT_THROW(qutub(1.2, 0.5, 0.5, 0.5), Error);
}

TEST(Classical, BlockAndTubAreStill) {
  EXPECT_TRUE(is_still_life<double>(classical_pattern("block")));
  EXPECT_TRUE(is_still_life<double>(classical_pattern("tub")));
}

TEST(Classical, BlinkerIsPeriodTwo) {
  const Pattern b = classical_pattern("blinker");
  EXPECT_FALSE(is_still_life<double>(b));
  const auto u = place_centered(Universe<double>(9, 9), b);
  EXPECT_NE(step(u), u);
  EXPECT_EQ(step(step(u)), u);
}

TEST(Classical, UnknownNameThrows) {
  EXPECT_THROW(classical_pattern("glider-gun"), Error);
}

TEST(Place, EmptyPatternLeavesUniverse) {
  const auto u = random_init<double>(SeedConfig{0.3, 4, 12, 12});
  EXPECT_EQ(place(u, Pattern("empty", 1, 1, {}), 3, 3), u);
}

TEST(Place, WrapsAcrossSeam) {
  const auto u = place(Universe<double>(100, 100), qutub(0.5, 0.5, 0.5, 0.5), 99, 99);
  EXPECT_EQ(nonzero(u), 8u);
  EXPECT_EQ(u.alive(99, 99), 0.5);
  EXPECT_EQ(u.alive(1, 1), 0.5);
  EXPECT_EQ(u.alive(0, 0), 0.0);
}

TEST(Place, RejectsFreeCellsAndOversizedPatterns) {
  EXPECT_THROW(place(Universe<double>(10, 10), qutub_template(), 0, 0), Error);
  EXPECT_THROW(place(Universe<double>(2, 2), classical_pattern("tub"), 0, 0), Error);
}

TEST(StillLife, SingleSemiLiveCellDies) {
  EXPECT_FALSE(is_still_life<double>(Pattern("dot", 1, 1, {{0, 0, 0.5, false}})));
}

TEST(StillLife, RejectsNarrowPadding) {
  EXPECT_THROW(is_still_life<double>(classical_pattern("block"), 1), Error);
}

TEST(StabilityRegion, QutubTemplateFollowsPairRule) {
  const auto region = stability_region<double>(qutub_template(), 0.25);
  ASSERT_EQ(region.size(), 5u * 5 * 5 * 5);
  for (const auto& s : region) {
    const auto h = [&](std::size_t i) { return static_cast<int>(std::lround(s.values[i] * 100)); };
    // Free slots are in stencil order: NW, NE, SW, SE.
    EXPECT_EQ(s.stable, oracle::qutub_stable(h(0), h(1), h(2), h(3)))
        << s.values[0] << ' ' << s.values[1] << ' ' << s.values[2] << ' ' << s.values[3];
  }
}

TEST(StabilityRegion, SingleFreeCellStableOnlyWhenDead) {
  const auto region = stability_region<double>(Pattern("dot", 1, 1, {{0, 0, 0.0, true}}), 0.1);
  ASSERT_EQ(region.size(), 11u);
  for (const auto& s : region) EXPECT_EQ(s.stable, s.values[0] == 0.0) << s.values[0];
}

TEST(StabilityRegion, FreeBlockStableWhenFullyLive) {
  const auto region = stability_region<double>(classical_pattern("block").all_free(), 0.5);
  ASSERT_EQ(region.size(), 81u);
  for (const auto& s : region) {
    EXPECT_EQ(s.stable, is_still_life<double>(classical_pattern("block").all_free().with_free_values(s.values)));
    if (s.values == std::vector<double>{1, 1, 1, 1}) EXPECT_TRUE(s.stable);
  }
}

TEST(StabilityRegion, IndependentOfWorkerCount) {
  EXPECT_EQ(stability_region<double>(qutub_template(), 0.25, 3, 1, 1),
            stability_region<double>(qutub_template(), 0.25, 3, 1, 3));
}

TEST(StabilityRegion, RejectsBadStep) {
  EXPECT_THROW(stability_region<double>(qutub_template(), 0.0), Error);
  EXPECT_THROW(stability_region<double>(qutub_template(), 0.7), Error);
  EXPECT_THROW(stability_region<double>(classical_pattern("tub"), 0.25), Error);
}

TEST(Match, EmptyUniverseHasNoMatches) {
  EXPECT_TRUE(match_patterns(Universe<double>(20, 20), standard_library()).empty());
}

TEST(Match, SingleTubFoundOnce) {
  const auto u = place(Universe<double>(20, 20), classical_pattern("tub"), 6, 9);
  const auto m = match_patterns(u, standard_library());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].name, "tub");
  EXPECT_EQ(m[0].x, 6);
  EXPECT_EQ(m[0].y, 9);
  EXPECT_EQ(census(m), "tub×1");
}

TEST(Match, QutubMatchesTemplateWithCornerValues) {
  const auto u = place(Universe<double>(20, 20), qutub(0.3, 0.7, 0.3, 0.7), 4, 4);
  const auto m = match_patterns(u, standard_library());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].name, "qutub");
  EXPECT_EQ(m[0].free_values, (std::vector<double>{0.3, 0.7, 0.3, 0.7}));
}

TEST(Match, BothBlinkerPhasesMatch) {
  auto u = place(Universe<double>(12, 12), classical_pattern("blinker"), 3, 3);
  EXPECT_EQ(census(match_patterns(u, standard_library())), "blinker×1");
  EXPECT_EQ(census(match_patterns(step(u), standard_library())), "blinker×1");
}

TEST(Match, ToleranceAbsorbsFaintHalo) {
  auto u = place(Universe<double>(20, 20), classical_pattern("tub"), 6, 6);
  u.set(7, 7, CellState<double>::from_liveness(0.004));
  EXPECT_TRUE(match_patterns(u, standard_library(), 0.0).empty());
  EXPECT_EQ(census(match_patterns(u, standard_library(), 0.01)), "tub×1");
}

TEST(Match, CensusOrdersByCountThenName) {
  std::vector<PatternMatch> m = {{"tub", 0, 0, {}}, {"qutub", 1, 0, {}}, {"qutub", 2, 0, {}},
                                 {"block", 3, 0, {}}};
  EXPECT_EQ(census(m), "qutub×2;block×1;tub×1");
}

TEST(Pattern, Orientations) {
  EXPECT_EQ(classical_pattern("blinker").orientations().size(), 2u);
  EXPECT_EQ(classical_pattern("block").orientations().size(), 1u);
  EXPECT_EQ(qutub(0.1, 0.2, 0.3, 0.4).orientations().size(), 8u);
}

TEST(Pattern, RejectsDuplicateAndOutOfExtentCells) {
  EXPECT_THROW(Pattern("x", 2, 2, {{0, 0, 1.0, false}, {0, 0, 0.5, false}}), Error);
  EXPECT_THROW(Pattern("x", 2, 2, {{2, 0, 1.0, false}}), Error);
  EXPECT_THROW(Pattern("bad name", 2, 2, {}), Error);
}

TEST(PatternFile, RoundTrip) {
  for (const Pattern& p : standard_library()) EXPECT_EQ(parse_pattern(format_pattern(p)), p);
  const Pattern q = qutub(0.1, 1.0 / 3.0, 0.57, 0.58);
  EXPECT_EQ(parse_pattern(format_pattern(q)), q);
}

TEST(PatternFile, ErrorsCarryLineNumbers) {
  try {
    parse_pattern("# comment\nqutub 3 3\n0 0 0.5\n1 0 oops\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}
