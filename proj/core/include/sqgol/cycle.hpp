#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "sqgol/universe.hpp"

namespace sqgol {

/// Bounded history of past generations for exact recurrence detection.
///
/// Retains the most recent `dense` states plus every `dense`-th earlier
/// generation (at most `max_sparse` of those). Each entry keeps the state
/// itself, so a fingerprint match is always confirmed by a full bitwise
/// comparison.
template <Scalar T>
class StateHistory {
 public:
  struct Entry {
    std::size_t generation = 0;
    std::uint64_t fingerprint = 0;
    Universe<T> state;
  };

  explicit StateHistory(std::size_t dense = 64, std::size_t max_sparse = 256);

  /// Generations must be pushed in increasing order.
  void push(std::size_t generation, const Universe<T>& u);

  /// Smallest p >= 1 such that the latest state equals the retained state p
  /// generations earlier. For a recurrence only visible through a sparse
  /// checkpoint this is a multiple of the true period.
  std::optional<std::size_t> latest_period() const;

  /// The retained state exactly `back` generations before the latest one,
  /// if it is in the dense window.
  const Universe<T>* state_before(std::size_t back) const;

  std::size_t size() const noexcept { return dense_.size() + sparse_.size(); }

 private:
  std::size_t dense_capacity_;
  std::size_t max_sparse_;
  std::deque<Entry> dense_;   // oldest first
  std::deque<Entry> sparse_;  // oldest first
};

/// Period of the last entry of `history` (ordered oldest to newest), using
/// fingerprints to find candidates and bitwise comparison to confirm them.
/// Returns nullopt when the last state does not recur.
template <Scalar T>
std::optional<std::size_t> detect_cycle(const std::vector<typename StateHistory<T>::Entry>& history);

}  // namespace sqgol
