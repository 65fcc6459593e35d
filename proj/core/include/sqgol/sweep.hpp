#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sqgol/classify.hpp"

namespace sqgol {

/// Inclusive lattice lo, lo + step, ..., hi. The i-th value is computed as
/// T(lo) + T(i) * T(step) in the sweep's precision, never by accumulation.
struct LatticeRange {
  double lo = 0.5;
  double hi = 1.0;
  double step = 0.01;

  /// Number of lattice values (both endpoints included when step divides the
  /// span up to 1e-9 relative slack). Throws for an invalid range.
  std::size_t count() const;

  template <Scalar T>
  T value(std::size_t i) const noexcept {
    return static_cast<T>(lo) + static_cast<T>(i) * static_cast<T>(step);
  }

  void validate() const;
};

struct SweepSpec {
  LatticeRange a14;  // a1 = a4 (NW and SE corners)
  LatticeRange a23;  // a2 = a3 (NE and SW corners)
  int width = 100;
  int height = 100;
  ClassifierLimits limits;
  Precision precision = Precision::kDouble;
  /// Matching tolerance for the pattern census of settled states.
  double census_tolerance = 0.01;
  std::size_t workers = 0;  // 0 = default_worker_count()

  void validate() const;
};

/// One lattice point in serializable form (one sweep CSV row).
struct SweepRecord {
  double a14 = 0.0;
  double a23 = 0.0;
  std::string outcome;  // Outcome::label()
  std::size_t period = 0;
  std::size_t stable_gens = 0;
  double final_mean_a = 0.0;
  std::size_t generations = 0;
  std::string patterns;  // census(), empty unless the state settled

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct SweepResult {
  SweepSpec spec;
  std::size_t a14_count = 0;
  std::size_t a23_count = 0;
  /// Row-major by a14 index, then a23 index: index = i14 * a23_count + i23.
  std::vector<SweepRecord> records;
  std::vector<Outcome> outcomes;

  const SweepRecord& at(std::size_t i14, std::size_t i23) const {
    return records.at(i14 * a23_count + i23);
  }

  /// Count of each outcome label.
  std::map<std::string, std::size_t> class_census() const;
};

/// "label:count" entries joined by ", ", in label order.
std::string format_class_census(const std::map<std::string, std::size_t>& census);

/// Classifies a centered qutub(a14, a23, a23, a14) seed at every lattice
/// point. Points run concurrently; each writes its own pre-sized slot.
SweepResult qutub_sweep(const SweepSpec& spec);

/// Runs one lattice point in precision T (exposed for tests and the CLI).
template <Scalar T>
SweepRecord sweep_point(const SweepSpec& spec, std::size_t i14, std::size_t i23,
                        Outcome* outcome = nullptr);

enum class ZoomLevel { kCoarse, kFine, kFinest };

ZoomLevel parse_zoom_level(std::string_view text);
std::string_view to_string(ZoomLevel level);

/// coarse: 0.5..1.0 step 0.01; fine: 0.50..0.51 step 0.001;
/// finest: 0.500..0.501 step 0.0001 (same range on both axes).
LatticeRange zoom_range(ZoomLevel level);

/// qutub_sweep over zoom_range(level) on both axes; other settings from `base`.
SweepResult zoom_sweep(ZoomLevel level, const SweepSpec& base = {});

struct PrecisionDisagreement {
  std::size_t i14 = 0;
  std::size_t i23 = 0;
  double a14 = 0.0;  // double-precision lattice value
  double a23 = 0.0;
  std::string double_outcome;
  std::string single_outcome;
};

struct PrecisionComparison {
  SweepResult double_result;
  SweepResult single_result;
  std::size_t points = 0;
  std::size_t agreements = 0;
  double agreement_fraction = 0.0;
  std::vector<PrecisionDisagreement> disagreements;
};

/// Runs the sweep once per precision mode and compares outcome labels point
/// by point (the spec's precision field is ignored).
PrecisionComparison precision_compare(const SweepSpec& spec);

/// Sweep CSV: header "a14,a23,outcome,period,stable_gens,final_mean_a,generations,patterns",
/// reals with 17 significant digits.
void write_sweep_csv(std::ostream& os, const SweepResult& result);
std::vector<SweepRecord> read_sweep_csv(std::istream& is, const std::string& source = "<sweep>");

struct Rgb {
  unsigned char r = 0, g = 0, b = 0;
};

/// Fixed color per outcome label:
///   extinct black, still_life blue, oscillator green, cloud light gray,
///   transient_extinct purple, transient_cloud orange, transient_still
///   light blue, unresolved red.
Rgb outcome_color(std::string_view label);

/// Binary PPM (P6), one pixel per lattice point: column = a14 index
/// (increasing to the right), row = a23 index (increasing upward, so the
/// (lo, lo) corner is bottom-left).
void write_phase_diagram(std::ostream& os, const SweepResult& result);

}  // namespace sqgol
