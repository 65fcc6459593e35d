#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "sqgol/cycle.hpp"
#include "sqgol/engine.hpp"
#include "sqgol/statistics.hpp"

namespace sqgol {

/// Largest |a(p) - a(R p)| over all cells, where R is the 90-degree toroidal
/// rotation about (cx, cy). 0 means exact four-fold symmetry. Throws for a
/// non-square universe.
template <Scalar T>
double symmetry_defect(const Universe<T>& u, int cx, int cy);

// Outcome variants. `exact` distinguishes bitwise recurrence from settling
// within the quiescence tolerance.
struct Extinct {
  std::size_t generation = 0;
  bool exact = true;
  friend bool operator==(const Extinct&, const Extinct&) = default;
};
struct StillLife {
  std::size_t settling_generation = 0;
  bool exact = true;
  friend bool operator==(const StillLife&, const StillLife&) = default;
};
struct Oscillator {
  std::size_t period = 2;
  std::size_t settling_generation = 0;
  bool exact = true;
  friend bool operator==(const Oscillator&, const Oscillator&) = default;
};
struct Cloud {
  double steady_mean = 0.0;  // mean <a> over the trailing cloud window
  std::size_t generation = 0;
  friend bool operator==(const Cloud&, const Cloud&) = default;
};
struct Unresolved {
  std::size_t generations_run = 0;
  friend bool operator==(const Unresolved&, const Unresolved&) = default;
};

using Resolution = std::variant<Extinct, StillLife, Oscillator, Cloud, Unresolved>;

/// A quiescent phase longer than kTransientThreshold generations that later
/// broke up.
struct Transient {
  std::size_t stable_generations = 0;
  std::size_t first_generation = 0;
  friend bool operator==(const Transient&, const Transient&) = default;
};

inline constexpr std::size_t kTransientThreshold = 4;

/// Classified fate of an evolution: a terminal resolution, optionally wrapped
/// as the successor of a transient form.
struct Outcome {
  Resolution resolution;
  std::optional<Transient> transient;

  template <class V>
  bool is() const noexcept { return std::holds_alternative<V>(resolution); }

  /// Sweep CSV label: extinct, still_life, oscillator, cloud, unresolved, or
  /// transient_extinct / transient_cloud / transient_still. Transients ending
  /// as oscillator or unresolved keep the plain label.
  std::string label() const;

  /// Oscillator/still-life period, 0 otherwise.
  std::size_t period() const noexcept;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct ClassifierLimits {
  std::size_t max_generations = 2000;
  std::size_t cloud_window = 200;
  double cloud_band_low = 0.348 - 0.05;
  double cloud_band_high = 0.348 + 0.05;
  /// Consecutive quiescent generations needed to settle without exact recurrence.
  std::size_t settle_window = 50;
  /// Per-cell |delta a| bound for quiescence; <= 0 selects sqrt(eps(T)).
  double settle_tolerance = 0.0;
  Summation summation = Summation::kRowMajor;
  /// When set, the symmetry defect about this center is tracked each generation.
  std::optional<std::pair<int, int>> symmetry_center;

  /// Throws sqgol::Error for non-positive limits or an empty band.
  void validate() const;

  template <Scalar T>
  double tolerance_for() const noexcept;
};

template <Scalar T>
struct Classification {
  Outcome outcome;
  LivenessSeries series;
  Universe<T> final_state;
  std::size_t generations_run = 0;
  /// First generation with a nonzero symmetry defect (when tracked).
  std::optional<std::size_t> first_asymmetric_generation;
  double max_symmetry_defect = 0.0;
};

/// Incremental classifier: feed it every generation in order (starting with
/// the initial state as generation 0). Detection order per generation:
/// all-dead -> Extinct; exact recurrence -> StillLife (p = 1) or Oscillator;
/// quiescence for settle_window generations -> StillLife / Oscillator(2) /
/// Extinct; mean <a> inside the cloud band for cloud_window generations ->
/// Cloud.
template <Scalar T>
class OutcomeTracker {
 public:
  explicit OutcomeTracker(ClassifierLimits limits);

  /// Returns the outcome once resolved; later calls return the same value.
  std::optional<Outcome> observe(std::size_t generation, const Universe<T>& u);

  /// Outcome if resolved, otherwise Unresolved{generations}.
  Outcome finish(std::size_t generations) const;

  const LivenessSeries& series() const noexcept { return series_; }
  const std::optional<Outcome>& resolved() const noexcept { return resolved_; }
  std::optional<std::size_t> first_asymmetric_generation() const noexcept { return first_asym_; }
  double max_symmetry_defect() const noexcept { return max_defect_; }

 private:
  std::optional<Outcome> resolve(Resolution r);

  ClassifierLimits limits_;
  T tolerance_;
  StateHistory<T> history_;
  LivenessSeries series_;
  std::optional<Outcome> resolved_;

  std::size_t quiet1_ = 0;  // consecutive generations with |u_g - u_{g-1}| <= tol
  std::size_t quiet2_ = 0;  // same against g-2
  std::deque<double> band_means_;
  std::optional<Transient> transient_;

  std::optional<std::size_t> first_asym_;
  double max_defect_ = 0.0;
};

/// Evolves u0 under `limits` until the outcome resolves or max_generations
/// steps have run.
template <Scalar T>
Classification<T> classify_outcome(const Universe<T>& u0, const ClassifierLimits& limits = {});

}  // namespace sqgol
