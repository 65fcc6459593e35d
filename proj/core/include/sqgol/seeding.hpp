#pragma once

#include <cstdint>

#include "sqgol/universe.hpp"

namespace sqgol {

struct SeedConfig {
  double fraction = 0.2;  // probability that a cell is seeded
  std::uint64_t rng_seed = 1;
  int width = 100;
  int height = 100;

  /// Throws sqgol::Error unless 0 <= fraction <= 1 and both sides are >= 3.
  void validate() const;
};

/// Random fraction-f initialization.
///
/// Generator: std::mt19937_64 seeded with `rng_seed`. Cells are visited in
/// row-major order; each draws one 64-bit word u for the Bernoulli decision
/// (seeded iff u * 2^-64 < fraction, using the top 53 bits) and, if seeded, one
/// more word for the amplitude a = (word >> 11) * 2^-53, uniform on [0,1).
/// Unseeded cells are dead. The amplitude is drawn in double and rounded to T.
template <Scalar T>
Universe<T> random_init(const SeedConfig& cfg);

/// Uniform double on [0,1) from the top 53 bits of a 64-bit word.
constexpr double unit_interval(std::uint64_t word) noexcept {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace sqgol
