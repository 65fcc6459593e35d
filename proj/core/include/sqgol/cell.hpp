#pragma once

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>
#include <type_traits>

#include "sqgol/error.hpp"

namespace sqgol {

/// Amplitude scalar: binary32 or binary64. Every run uses exactly one.
template <class T>
concept Scalar = std::same_as<T, float> || std::same_as<T, double>;

enum class Precision { kSingle, kDouble };

template <Scalar T>
constexpr Precision precision_of() {
  return std::is_same_v<T, float> ? Precision::kSingle : Precision::kDouble;
}

std::string_view to_string(Precision p);
Precision parse_precision(std::string_view text);

/// One cell: a|1> + b|0> with a, b >= 0. Only the alive amplitude is stored;
/// the dead amplitude is derived as sqrt(1 - a^2).
template <Scalar T>
class CellState {
 public:
  constexpr CellState() = default;

  /// Throws sqgol::Error unless 0 <= a <= 1.
  static CellState from_liveness(T a) {
    if (!std::isfinite(a) || a < T(0) || a > T(1)) {
      throw Error("cell amplitude out of [0,1]: " + std::to_string(a));
    }
    return CellState(a);
  }

  static constexpr CellState dead() { return CellState(T(0)); }
  static constexpr CellState live() { return CellState(T(1)); }

  constexpr T alive() const noexcept { return a_; }
  T dead_amplitude() const noexcept { return dead_amplitude_of(a_); }

  static T dead_amplitude_of(T a) noexcept {
    const T rest = (T(1) - a) * (T(1) + a);
    return rest > T(0) ? std::sqrt(rest) : T(0);
  }

  friend constexpr bool operator==(CellState, CellState) = default;

 private:
  constexpr explicit CellState(T a) : a_(a) {}

  T a_ = T(0);
};

}  // namespace sqgol
