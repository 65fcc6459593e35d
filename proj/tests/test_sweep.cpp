#include <gtest/gtest.h>

#include <sstream>

#include "sqgol/sweep.hpp"

using namespace sqgol;

namespace {

SweepSpec single_point(double a14, double a23) {
  SweepSpec s;
  s.a14 = {a14, a14, 0.01};
  s.a23 = {a23, a23, 0.01};
  return s;
}

SweepSpec small_grid() {
  SweepSpec s;
  s.a14 = {0.5, 0.6, 0.05};
  s.a23 = {0.5, 0.6, 0.05};
  s.width = s.height = 40;
  s.limits.max_generations = 400;
  return s;
}

}  // namespace

TEST(Lattice, CountsIncludeBothEndpoints) {
  EXPECT_EQ((LatticeRange{0.5, 1.0, 0.01}.count()), 51u);
  EXPECT_EQ((LatticeRange{0.50, 0.51, 0.001}.count()), 11u);
  EXPECT_EQ((LatticeRange{0.500, 0.501, 0.0001}.count()), 11u);
  EXPECT_EQ((LatticeRange{0.5, 0.5, 0.01}.count()), 1u);
  EXPECT_EQ((LatticeRange{0.0, 1.0, 0.3}.count()), 4u);
}

TEST(Lattice, ValuesAreComputedNotAccumulated) {
  const LatticeRange r{0.5, 1.0, 0.01};
  for (std::size_t i = 0; i < r.count(); ++i) {
    EXPECT_EQ(r.value<double>(i), 0.5 + static_cast<double>(i) * 0.01);
    EXPECT_EQ(r.value<float>(i), 0.5f + static_cast<float>(i) * 0.01f);
  }
}

TEST(Lattice, RejectsInvalidRanges) {
  EXPECT_THROW((LatticeRange{0.6, 0.5, 0.01}.validate()), Error);
  EXPECT_THROW((LatticeRange{0.5, 1.1, 0.01}.validate()), Error);
  EXPECT_THROW((LatticeRange{0.5, 0.6, 0.0}.validate()), Error);
}

TEST(Zoom, Ranges) {
  EXPECT_EQ(zoom_range(ZoomLevel::kFine).count() * zoom_range(ZoomLevel::kFine).count(), 121u);
  EXPECT_EQ(zoom_range(ZoomLevel::kCoarse).count(), 51u);
  EXPECT_EQ(parse_zoom_level("finest"), ZoomLevel::kFinest);
  EXPECT_THROW(parse_zoom_level("ultra"), Error);
}

TEST(Sweep, HalfPointIsStillLife) {
  const auto r = qutub_sweep(single_point(0.5, 0.5));
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].outcome, "still_life");
  EXPECT_EQ(r.records[0].patterns, "qutub×1");
  EXPECT_EQ(format_class_census(r.class_census()), "still_life:1");
}

TEST(Sweep, PointFiftyNineHasTubAndFourQutubs) {
  const auto r = qutub_sweep(single_point(0.59, 0.59));
  EXPECT_EQ(r.records[0].outcome, "still_life");
  EXPECT_EQ(r.records[0].patterns, "qutub×4;tub×1");
}

TEST(Sweep, HalfCornerIsStillLifeAtEveryZoomAndPrecision) {
  for (ZoomLevel level : {ZoomLevel::kCoarse, ZoomLevel::kFine, ZoomLevel::kFinest}) {
    for (Precision p : {Precision::kSingle, Precision::kDouble}) {
      SweepSpec s;
      s.a14 = s.a23 = zoom_range(level);
      s.precision = p;
      EXPECT_EQ(p == Precision::kSingle ? sweep_point<float>(s, 0, 0).outcome
                                        : sweep_point<double>(s, 0, 0).outcome,
                "still_life")
          << to_string(level) << ' ' << to_string(p);
    }
  }
}

TEST(Sweep, CompleteAndIndexedByLattice) {
  const auto spec = small_grid();
  const auto r = qutub_sweep(spec);
  ASSERT_EQ(r.records.size(), 9u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(r.at(i, j).a14, spec.a14.value<double>(i));
      EXPECT_EQ(r.at(i, j).a23, spec.a23.value<double>(j));
      EXPECT_FALSE(r.at(i, j).outcome.empty());
    }
  }
}

TEST(Sweep, ParallelEqualsSequential) {
  auto spec = small_grid();
  spec.workers = 1;
  const auto seq = qutub_sweep(spec);
  spec.workers = 4;
  const auto par = qutub_sweep(spec);
  EXPECT_EQ(seq.records, par.records);
  EXPECT_EQ(seq.outcomes, par.outcomes);
}

TEST(Sweep, Reproducible) {
  EXPECT_EQ(qutub_sweep(small_grid()).records, qutub_sweep(small_grid()).records);
}

TEST(Sweep, RejectsBadSpec) {
  auto s = small_grid();
  s.width = 2;
  EXPECT_THROW(qutub_sweep(s), Error);
}

TEST(SweepCsv, RoundTripIsLossless) {
  const auto r = qutub_sweep(small_grid());
  std::stringstream ss;
  write_sweep_csv(ss, r);
  EXPECT_EQ(read_sweep_csv(ss), r.records);
}

TEST(SweepCsv, HeaderAndRowCount) {
  const auto r = qutub_sweep(small_grid());
  std::stringstream ss;
  write_sweep_csv(ss, r);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "a14,a23,outcome,period,stable_gens,final_mean_a,generations,patterns");
  std::size_t rows = 0;
  while (std::getline(ss, line)) ++rows;
  EXPECT_EQ(rows, 9u);
}

TEST(SweepCsv, MalformedRowReportsLine) {
  std::stringstream ss(
      "a14,a23,outcome,period,stable_gens,final_mean_a,generations,patterns\n"
      "0.5,0.5,still_life,1,0,0.0006,1,qutub×1\n"
      "0.5,0.5,still_life,1\n");
  try {
    read_sweep_csv(ss);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(PhaseDiagram, OnePixelPerPointWithLowCornerBottomLeft) {
  SweepResult r;
  r.a14_count = 2;
  r.a23_count = 3;
  r.records.resize(6);
  for (auto& rec : r.records) rec.outcome = "cloud";
  r.records[0].outcome = "still_life";  // i14 = 0, i23 = 0
  r.records[2].outcome = "extinct";     // i14 = 0, i23 = 2
  std::stringstream ss;
  write_phase_diagram(ss, r);
  const std::string img = ss.str();
  const std::string header = "P6\n2 3\n255\n";
  ASSERT_EQ(img.size(), header.size() + 18);
  EXPECT_EQ(img.substr(0, header.size()), header);
  const auto px = [&](int col, int row) {
    const auto o = header.size() + static_cast<std::size_t>(row * 2 + col) * 3;
    return Rgb{static_cast<unsigned char>(img[o]), static_cast<unsigned char>(img[o + 1]),
               static_cast<unsigned char>(img[o + 2])};
  };
  const auto same = [](Rgb a, Rgb b) { return a.r == b.r && a.g == b.g && a.b == b.b; };
  EXPECT_TRUE(same(px(0, 2), outcome_color("still_life")));
  EXPECT_TRUE(same(px(0, 0), outcome_color("extinct")));
  EXPECT_TRUE(same(px(1, 1), outcome_color("cloud")));
}

TEST(PhaseDiagram, ColorsAreDistinct) {
  const char* labels[] = {"extinct", "still_life", "oscillator", "cloud", "transient_extinct",
                          "transient_cloud", "transient_still", "unresolved"};
  for (const char* a : labels) {
    for (const char* b : labels) {
      if (std::string_view(a) == b) continue;
      const Rgb x = outcome_color(a);
      const Rgb y = outcome_color(b);
      EXPECT_FALSE(x.r == y.r && x.g == y.g && x.b == y.b) << a << " vs " << b;
    }
  }
}

TEST(PrecisionCompare, HalfPointAgrees) {
  const auto cmp = precision_compare(single_point(0.5, 0.5));
  EXPECT_EQ(cmp.points, 1u);
  EXPECT_EQ(cmp.agreement_fraction, 1.0);
  EXPECT_TRUE(cmp.disagreements.empty());
  EXPECT_EQ(cmp.single_result.records[0].outcome, "still_life");
}
