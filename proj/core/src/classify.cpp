#include "sqgol/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sqgol {

template <Scalar T>
double symmetry_defect(const Universe<T>& u, int cx, int cy) {
  if (u.width() != u.height()) throw Error("symmetry defect requires a square universe");
  T worst = T(0);
  for (int y = 0; y < u.height(); ++y) {
    for (int x = 0; x < u.width(); ++x) {
      const long long dx = x - cx;
      const long long dy = y - cy;
      const T d = std::abs(u.alive(x, y) - u.alive(cx + dy, cy - dx));
      worst = std::max(worst, d);
    }
  }
  return static_cast<double>(worst);
}

template double symmetry_defect<float>(const Universe<float>&, int, int);
template double symmetry_defect<double>(const Universe<double>&, int, int);

std::string Outcome::label() const {
  const bool t = transient.has_value();
  return std::visit(
      [t](const auto& r) -> std::string {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, Extinct>) return t ? "transient_extinct" : "extinct";
        if constexpr (std::is_same_v<R, StillLife>) return t ? "transient_still" : "still_life";
        if constexpr (std::is_same_v<R, Cloud>) return t ? "transient_cloud" : "cloud";
        if constexpr (std::is_same_v<R, Oscillator>) return "oscillator";
        if constexpr (std::is_same_v<R, Unresolved>) return "unresolved";
      },
      resolution);
}

std::size_t Outcome::period() const noexcept {
  if (const auto* o = std::get_if<Oscillator>(&resolution)) return o->period;
  if (is<StillLife>()) return 1;
  return 0;
}

void ClassifierLimits::validate() const {
  if (max_generations == 0) throw Error("max_generations must be positive");
  if (cloud_window == 0) throw Error("cloud_window must be positive");
  if (settle_window == 0) throw Error("settle_window must be positive");
  if (!(cloud_band_low < cloud_band_high)) throw Error("cloud band must satisfy low < high");
  if (!std::isfinite(settle_tolerance)) throw Error("settle_tolerance must be finite");
}

template <Scalar T>
double ClassifierLimits::tolerance_for() const noexcept {
  return settle_tolerance > 0.0 ? settle_tolerance
                                : std::sqrt(static_cast<double>(std::numeric_limits<T>::epsilon()));
}

template double ClassifierLimits::tolerance_for<float>() const noexcept;
template double ClassifierLimits::tolerance_for<double>() const noexcept;

namespace {

template <Scalar T>
bool within(const Universe<T>& a, const Universe<T>& b, T tol) noexcept {
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > tol) return false;
  }
  return true;
}

template <Scalar T>
bool all_below(const Universe<T>& u, T tol) noexcept {
  for (T a : u.amplitudes()) {
    if (a > tol) return false;
  }
  return true;
}

}  // namespace

template <Scalar T>
OutcomeTracker<T>::OutcomeTracker(ClassifierLimits limits)
    : limits_(std::move(limits)), tolerance_(static_cast<T>(limits_.tolerance_for<T>())) {
  limits_.validate();
}

template <Scalar T>
std::optional<Outcome> OutcomeTracker<T>::resolve(Resolution r) {
  resolved_ = Outcome{std::move(r), transient_};
  return resolved_;
}

template <Scalar T>
std::optional<Outcome> OutcomeTracker<T>::observe(std::size_t generation, const Universe<T>& u) {
  if (resolved_) return resolved_;
  series_.record(generation, u);

  if (limits_.symmetry_center) {
    const double d = symmetry_defect(u, limits_.symmetry_center->first, limits_.symmetry_center->second);
    if (d > 0.0 && !first_asym_) first_asym_ = generation;
    max_defect_ = std::max(max_defect_, d);
  }

  if (u.all_dead()) return resolve(Extinct{generation, true});

  history_.push(generation, u);
  if (const auto p = history_.latest_period()) {
    if (*p == 1) return resolve(StillLife{generation - 1, true});
    return resolve(Oscillator{*p, generation - *p, true});
  }

  if (const Universe<T>* prev = history_.state_before(1)) {
    if (within(u, *prev, tolerance_)) {
      ++quiet1_;
    } else {
      if (quiet1_ > kTransientThreshold &&
          (!transient_ || quiet1_ > transient_->stable_generations)) {
        transient_ = Transient{quiet1_, generation - 1 - quiet1_};
      }
      quiet1_ = 0;
    }
  }
  if (const Universe<T>* prev2 = history_.state_before(2)) {
    quiet2_ = within(u, *prev2, tolerance_) ? quiet2_ + 1 : 0;
  }
  if (quiet1_ >= limits_.settle_window) {
    const std::size_t since = generation - quiet1_;
    if (all_below(u, tolerance_)) return resolve(Extinct{since, false});
    return resolve(StillLife{since, false});
  }
  if (quiet2_ >= limits_.settle_window) {
    return resolve(Oscillator{2, generation - quiet2_, false});
  }

  const double mean = series_.back().mean_a;
  if (mean >= limits_.cloud_band_low && mean <= limits_.cloud_band_high) {
    band_means_.push_back(mean);
    if (band_means_.size() > limits_.cloud_window) {
      band_means_.pop_front();
    }
    if (band_means_.size() >= limits_.cloud_window) {
      double sum = 0.0;
      for (double m : band_means_) sum += m;
      return resolve(Cloud{sum / static_cast<double>(band_means_.size()), generation});
    }
  } else {
    band_means_.clear();
  }
  return std::nullopt;
}

template <Scalar T>
Outcome OutcomeTracker<T>::finish(std::size_t generations) const {
  if (resolved_) return *resolved_;
  return Outcome{Unresolved{generations}, transient_};
}

template <Scalar T>
Classification<T> classify_outcome(const Universe<T>& u0, const ClassifierLimits& limits) {
  OutcomeTracker<T> tracker(limits);
  Classification<T> out;
  Universe<T> cur = u0;
  Universe<T> next;
  std::size_t g = 0;
  tracker.observe(0, cur);
  while (!tracker.resolved() && g < limits.max_generations) {
    step_into(cur, next, limits.summation);
    std::swap(cur, next);
    ++g;
    tracker.observe(g, cur);
  }
  out.outcome = tracker.finish(g);
  out.series = tracker.series();
  out.final_state = std::move(cur);
  out.generations_run = g;
  out.first_asymmetric_generation = tracker.first_asymmetric_generation();
  out.max_symmetry_defect = tracker.max_symmetry_defect();
  return out;
}

template class OutcomeTracker<float>;
template class OutcomeTracker<double>;
template Classification<float> classify_outcome<float>(const Universe<float>&,
                                                       const ClassifierLimits&);
template Classification<double> classify_outcome<double>(const Universe<double>&,
                                                         const ClassifierLimits&);

}  // namespace sqgol
