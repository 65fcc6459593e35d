#pragma once

#include <cstddef>
#include <functional>

#include "sqgol/cell.hpp"
#include "sqgol/universe.hpp"

namespace sqgol {

/// Non-negative weights of the death, survival and birth operators in the
/// generation operator G = c_D*D + c_S*S + c_B*B.
template <Scalar T>
struct GCoefficients {
  T death = T(0);
  T survival = T(0);
  T birth = T(0);

  /// Throws sqgol::Error if the weights are negative, non-finite, all zero,
  /// or if all three are nonzero.
  static GCoefficients make(T death, T survival, T birth);

  bool pure_death() const noexcept { return survival == T(0) && birth == T(0); }
  bool pure_survival() const noexcept { return death == T(0) && birth == T(0); }
  bool pure_birth() const noexcept { return death == T(0) && survival == T(0); }

  friend bool operator==(const GCoefficients&, const GCoefficients&) = default;
};

/// How the eight Moore-neighbor amplitudes are accumulated into A.
enum class Summation {
  /// Row-major over the 3x3 block, skipping the center:
  /// NW, N, NE, W, E, SW, S, SE, left to right. This is the public contract;
  /// it is not rotation-invariant, so it reproduces symmetry-breaking drift.
  kRowMajor,
  /// The eight addends are sorted ascending before the same left-to-right
  /// accumulation, so rotated or reflected neighborhoods give equal sums.
  kSorted,
};

std::string_view to_string(Summation s);
Summation parse_summation(std::string_view text);

/// Piecewise mixture weights for neighborhood liveness A, evaluated as the
/// ordered cascade A <= 1; A <= 2; A <= 3; A < 4; otherwise.
/// Throws for negative or non-finite A.
template <Scalar T>
GCoefficients<T> g_coefficients(T liveness);

/// Applies the weighted operator mixture to one cell and renormalizes.
/// Pure survival returns the input bit-for-bit; pure death returns 0 and pure
/// birth returns 1.
template <Scalar T>
CellState<T> apply_g(const GCoefficients<T>& g, CellState<T> cell);

/// Sum of the eight toroidal Moore neighbors of (x, y), excluding (x, y).
template <Scalar T>
T neighborhood_liveness(const Universe<T>& u, long long x, long long y,
                        Summation order = Summation::kRowMajor);

/// One synchronous generation. `out` is resized as needed and must not alias `in`.
template <Scalar T>
void step_into(const Universe<T>& in, Universe<T>& out, Summation order = Summation::kRowMajor);

template <Scalar T>
Universe<T> step(const Universe<T>& u, Summation order = Summation::kRowMajor) {
  Universe<T> out;
  step_into(u, out, order);
  return out;
}

/// Called after each generation with its 1-based index.
template <Scalar T>
using Observer = std::function<void(std::size_t generation, const Universe<T>&)>;

/// Applies `generations` steps, calling `observer` (if set) after each one.
/// Exceptions thrown by the observer propagate.
template <Scalar T>
Universe<T> run(Universe<T> u, std::size_t generations, const Observer<T>& observer = {},
                Summation order = Summation::kRowMajor);

}  // namespace sqgol
