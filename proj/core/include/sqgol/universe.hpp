#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sqgol/cell.hpp"

namespace sqgol {

/// Fixed-size 2D torus of cells, stored row-major as alive amplitudes.
template <Scalar T>
class Universe {
 public:
  using scalar_type = T;

  Universe() = default;

  /// All-dead universe. Throws unless both dimensions are positive.
  Universe(int width, int height) : width_(width), height_(height) {
    if (width <= 0 || height <= 0) {
      throw Error("universe dimensions must be positive");
    }
    cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), T(0));
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return cells_.size(); }

  int wrap_x(long long x) const noexcept { return static_cast<int>(wrap(x, width_)); }
  int wrap_y(long long y) const noexcept { return static_cast<int>(wrap(y, height_)); }

  std::size_t index(long long x, long long y) const noexcept {
    return static_cast<std::size_t>(wrap_y(y)) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(wrap_x(x));
  }

  T alive(long long x, long long y) const noexcept { return cells_[index(x, y)]; }
  CellState<T> cell(long long x, long long y) const { return CellState<T>::from_liveness(alive(x, y)); }
  void set(long long x, long long y, CellState<T> c) noexcept { cells_[index(x, y)] = c.alive(); }

  std::span<const T> amplitudes() const noexcept { return cells_; }

  /// Raw row-major storage for the engine and loaders; callers keep every
  /// value inside [0,1].
  std::span<T> mutable_amplitudes() noexcept { return cells_; }

  bool all_dead() const noexcept {
    for (T a : cells_) {
      if (a != T(0)) return false;
    }
    return true;
  }

  /// Bitwise comparison of dimensions and amplitudes.
  bool identical(const Universe& other) const noexcept;

  friend bool operator==(const Universe& lhs, const Universe& rhs) { return lhs.identical(rhs); }

 private:
  static long long wrap(long long v, int n) noexcept {
    long long r = v % n;
    return r < 0 ? r + n : r;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> cells_;
};

/// 64-bit FNV-1a over dimensions and the raw amplitude bytes.
template <Scalar T>
std::uint64_t fingerprint(const Universe<T>& u) noexcept;

/// Rotates the whole torus by 90 degrees counter-clockwise about (cx, cy):
/// the cell at offset (dx, dy) moves to offset (dy, -dx). Requires a square grid.
template <Scalar T>
Universe<T> rotate90(const Universe<T>& u, int cx, int cy);

/// Cyclic shift by (dx, dy).
template <Scalar T>
Universe<T> translate(const Universe<T>& u, int dx, int dy);

/// Converts amplitudes to another width (round to nearest).
template <Scalar To, Scalar From>
Universe<To> convert(const Universe<From>& u) {
  Universe<To> out(u.width(), u.height());
  auto dst = out.mutable_amplitudes();
  auto src = u.amplitudes();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = static_cast<To>(src[i]);
  return out;
}

extern template class Universe<float>;
extern template class Universe<double>;

}  // namespace sqgol
