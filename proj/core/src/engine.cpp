#include "sqgol/engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace sqgol {

std::string_view to_string(Precision p) {
  return p == Precision::kSingle ? "single" : "double";
}

Precision parse_precision(std::string_view text) {
  if (text == "single" || text == "float" || text == "binary32") return Precision::kSingle;
  if (text == "double" || text == "binary64") return Precision::kDouble;
  throw Error("unknown precision '" + std::string(text) + "' (expected single|double)");
}

std::string_view to_string(Summation s) {
  return s == Summation::kRowMajor ? "row_major" : "sorted";
}

Summation parse_summation(std::string_view text) {
  if (text == "row_major" || text == "row-major" || text == "default") return Summation::kRowMajor;
  if (text == "sorted" || text == "order_invariant" || text == "order-invariant") {
    return Summation::kSorted;
  }
  throw Error("unknown summation mode '" + std::string(text) + "' (expected row_major|sorted)");
}

template <Scalar T>
GCoefficients<T> GCoefficients<T>::make(T death, T survival, T birth) {
  for (T w : {death, survival, birth}) {
    if (!std::isfinite(w) || w < T(0)) throw Error("operator weights must be finite and >= 0");
  }
  const int nonzero = (death != T(0)) + (survival != T(0)) + (birth != T(0));
  if (nonzero == 0) throw Error("at least one operator weight must be positive");
  if (nonzero == 3) throw Error("at most two operator weights may be nonzero");
  GCoefficients g;
  g.death = death;
  g.survival = survival;
  g.birth = birth;
  return g;
}

namespace {

template <Scalar T>
constexpr T kSqrt2Plus1 = std::numbers::sqrt2_v<T> + T(1);

// Unchecked cascade shared by the public entry point and the step kernel.
template <Scalar T>
inline GCoefficients<T> coefficients_for(T A) noexcept {
  GCoefficients<T> g;
  if (A <= T(1)) {
    g.death = T(1);
  } else if (A <= T(2)) {
    g.death = kSqrt2Plus1<T> * (T(2) - A);
    g.survival = A - T(1);
  } else if (A <= T(3)) {
    g.survival = kSqrt2Plus1<T> * (T(3) - A);
    g.birth = A - T(2);
  } else if (A < T(4)) {
    g.death = A - T(3);
    g.birth = kSqrt2Plus1<T> * (T(4) - A);
  } else {
    g.death = T(1);
  }
  return g;
}

template <Scalar T>
inline T apply_g_raw(const GCoefficients<T>& g, T a) noexcept {
  if (g.pure_survival()) return a;
  if (g.pure_death()) return T(0);
  if (g.pure_birth()) return T(1);

  const T b = CellState<T>::dead_amplitude_of(a);
  const T s = a + b;
  const T next_a = g.survival * a + g.birth * s;
  const T next_b = g.survival * b + g.death * s;
  const T norm = std::sqrt(next_a * next_a + next_b * next_b);
  SQGOL_INVARIANT(norm > T(0) && std::isfinite(norm), "zero-norm operator result");

  T r = next_a / norm;
  if (r > T(1)) {
    SQGOL_INVARIANT(r - T(1) <= T(4) * std::numeric_limits<T>::epsilon(),
                    "normalized amplitude exceeds 1 by more than 4 ulp");
    r = T(1);
  }
  return r;
}

template <Scalar T>
inline T sum_row_major(T nw, T n, T ne, T w, T e, T sw, T s, T se) noexcept {
  T acc = nw;
  acc += n;
  acc += ne;
  acc += w;
  acc += e;
  acc += sw;
  acc += s;
  acc += se;
  return acc;
}

template <Scalar T>
inline T sum_sorted(T nw, T n, T ne, T w, T e, T sw, T s, T se) noexcept {
  std::array<T, 8> v{nw, n, ne, w, e, sw, s, se};
  // insertion sort; eight elements
  for (std::size_t i = 1; i < v.size(); ++i) {
    T key = v[i];
    std::size_t j = i;
    for (; j > 0 && v[j - 1] > key; --j) v[j] = v[j - 1];
    v[j] = key;
  }
  T acc = v[0];
  for (std::size_t i = 1; i < v.size(); ++i) acc += v[i];
  return acc;
}

template <Scalar T, Summation Order>
inline T moore_sum(const T* up, const T* mid, const T* down, int xm, int x, int xp) noexcept {
  if constexpr (Order == Summation::kRowMajor) {
    return sum_row_major(up[xm], up[x], up[xp], mid[xm], mid[xp], down[xm], down[x], down[xp]);
  } else {
    return sum_sorted(up[xm], up[x], up[xp], mid[xm], mid[xp], down[xm], down[x], down[xp]);
  }
}

template <Scalar T, Summation Order>
void step_kernel(const Universe<T>& in, Universe<T>& out) {
  const int w = in.width();
  const int h = in.height();
  const auto src = in.amplitudes();
  auto dst = out.mutable_amplitudes();

  // Occupancy masks: a cell whose 3x3 block is entirely dead has A = 0 and
  // stays dead, so rows/columns with no live neighbors are skipped.
  std::vector<unsigned char> row_any(static_cast<std::size_t>(h), 0);
  std::vector<unsigned char> col_any(static_cast<std::size_t>(w), 0);
  for (int y = 0; y < h; ++y) {
    const T* row = src.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      if (row[x] != T(0)) {
        row_any[y] = 1;
        col_any[x] = 1;
      }
    }
  }
  std::vector<unsigned char> col_near(static_cast<std::size_t>(w), 0);
  for (int x = 0; x < w; ++x) {
    col_near[x] = col_any[(x + w - 1) % w] | col_any[x] | col_any[(x + 1) % w];
  }

  for (int y = 0; y < h; ++y) {
    const int ym = (y + h - 1) % h;
    const int yp = (y + 1) % h;
    T* out_row = dst.data() + static_cast<std::size_t>(y) * w;
    if (!(row_any[ym] | row_any[y] | row_any[yp])) {
      std::fill(out_row, out_row + w, T(0));
      continue;
    }
    const T* up = src.data() + static_cast<std::size_t>(ym) * w;
    const T* mid = src.data() + static_cast<std::size_t>(y) * w;
    const T* down = src.data() + static_cast<std::size_t>(yp) * w;
    for (int x = 0; x < w; ++x) {
      if (!col_near[x]) {
        out_row[x] = T(0);
        continue;
      }
      const int xm = x == 0 ? w - 1 : x - 1;
      const int xp = x == w - 1 ? 0 : x + 1;
      const T A = moore_sum<T, Order>(up, mid, down, xm, x, xp);
      out_row[x] = apply_g_raw(coefficients_for(A), mid[x]);
    }
  }
}

}  // namespace

template <Scalar T>
GCoefficients<T> g_coefficients(T liveness) {
  if (!std::isfinite(liveness) || liveness < T(0)) {
    throw Error("neighborhood liveness must be finite and >= 0");
  }
  return coefficients_for(liveness);
}

template <Scalar T>
CellState<T> apply_g(const GCoefficients<T>& g, CellState<T> cell) {
  return CellState<T>::from_liveness(apply_g_raw(g, cell.alive()));
}

template <Scalar T>
T neighborhood_liveness(const Universe<T>& u, long long x, long long y, Summation order) {
  const T nw = u.alive(x - 1, y - 1), n = u.alive(x, y - 1), ne = u.alive(x + 1, y - 1);
  const T w = u.alive(x - 1, y), e = u.alive(x + 1, y);
  const T sw = u.alive(x - 1, y + 1), s = u.alive(x, y + 1), se = u.alive(x + 1, y + 1);
  return order == Summation::kRowMajor ? sum_row_major(nw, n, ne, w, e, sw, s, se)
                                       : sum_sorted(nw, n, ne, w, e, sw, s, se);
}

template <Scalar T>
void step_into(const Universe<T>& in, Universe<T>& out, Summation order) {
  SQGOL_INVARIANT(&in != &out, "step_into requires distinct buffers");
  if (out.width() != in.width() || out.height() != in.height()) {
    out = Universe<T>(in.width(), in.height());
  }
  if (order == Summation::kRowMajor) {
    step_kernel<T, Summation::kRowMajor>(in, out);
  } else {
    step_kernel<T, Summation::kSorted>(in, out);
  }
}

template <Scalar T>
Universe<T> run(Universe<T> u, std::size_t generations, const Observer<T>& observer,
                Summation order) {
  Universe<T> next;
  for (std::size_t g = 1; g <= generations; ++g) {
    step_into(u, next, order);
    std::swap(u, next);
    if (observer) observer(g, u);
  }
  return u;
}

#define SQGOL_INSTANTIATE(T)                                                              \
  template struct GCoefficients<T>;                                                       \
  template GCoefficients<T> g_coefficients<T>(T);                                         \
  template CellState<T> apply_g<T>(const GCoefficients<T>&, CellState<T>);                \
  template T neighborhood_liveness<T>(const Universe<T>&, long long, long long, Summation); \
  template void step_into<T>(const Universe<T>&, Universe<T>&, Summation);                \
  template Universe<T> run<T>(Universe<T>, std::size_t, const Observer<T>&, Summation);

SQGOL_INSTANTIATE(float)
SQGOL_INSTANTIATE(double)

}  // namespace sqgol
