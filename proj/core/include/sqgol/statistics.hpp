#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sqgol/universe.hpp"

namespace sqgol {

/// Pairwise sum in T: ranges of up to 8 values are summed left to right,
/// longer ranges are split at n/2 and the two halves added.
template <Scalar T>
T pairwise_sum(std::span<const T> values) noexcept;

/// Mean alive amplitude <a>, pairwise-summed over the row-major array in the
/// universe's precision and divided by the cell count.
template <Scalar T>
double mean_liveness(const Universe<T>& u) noexcept;

/// Population standard deviation of a over cells (two-pass, pairwise sums).
template <Scalar T>
double liveness_std(const Universe<T>& u);

struct LivenessRecord {
  std::size_t generation = 0;
  double mean_a = 0.0;
  double std_a = 0.0;

  friend bool operator==(const LivenessRecord&, const LivenessRecord&) = default;
};

/// Per-generation liveness summary. Generations must be appended in strictly
/// increasing order starting at 0.
class LivenessSeries {
 public:
  void append(LivenessRecord r);

  template <Scalar T>
  void record(std::size_t generation, const Universe<T>& u) {
    append({generation, mean_liveness(u), liveness_std(u)});
  }

  const std::vector<LivenessRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  const LivenessRecord& back() const { return records_.back(); }

  /// CSV with header "generation,mean_a,std_a" and 17 significant digits.
  void write_csv(std::ostream& os) const;
  static LivenessSeries read_csv(std::istream& is, const std::string& source = "<series>");

  friend bool operator==(const LivenessSeries&, const LivenessSeries&) = default;

 private:
  std::vector<LivenessRecord> records_;
};

struct SteadyStateStats {
  std::size_t burn_in = 0;
  double mean_of_means = 0.0;
  double std_of_means = 0.0;  // population standard deviation
  std::size_t sample_count = 0;
  /// Anderson-Darling A*^2 for normality with estimated mean and variance
  /// (Stephens' small-sample correction). NaN when the samples are constant.
  /// Reported only; values above ~0.752 reject normality at 5%.
  double anderson_darling = 0.0;
};

/// Statistics of mean_a over records with generation >= burn_in. Throws
/// sqgol::Error unless the series has more than burn_in + 30 records.
SteadyStateStats steady_state_stats(const LivenessSeries& series, std::size_t burn_in = 500);

/// Anderson-Darling A*^2 of `samples` against a normal with the samples' own
/// mean and population-corrected variance.
double anderson_darling_normal(std::span<const double> samples);

}  // namespace sqgol
