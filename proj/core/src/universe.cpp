#include "sqgol/universe.hpp"

#include <cstring>

namespace sqgol {

template <Scalar T>
bool Universe<T>::identical(const Universe& other) const noexcept {
  return width_ == other.width_ && height_ == other.height_ &&
         std::memcmp(cells_.data(), other.cells_.data(), cells_.size() * sizeof(T)) == 0;
}

template <Scalar T>
std::uint64_t fingerprint(const Universe<T>& u) noexcept {
  constexpr std::uint64_t kPrime = 0x100000001b3ULL;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= kPrime;
    }
  };
  const std::int32_t dims[2] = {u.width(), u.height()};
  mix(dims, sizeof dims);
  const auto cells = u.amplitudes();
  mix(cells.data(), cells.size_bytes());
  return h;
}

template <Scalar T>
Universe<T> rotate90(const Universe<T>& u, int cx, int cy) {
  if (u.width() != u.height()) throw Error("rotation requires a square universe");
  Universe<T> out(u.width(), u.height());
  auto dst = out.mutable_amplitudes();
  for (int y = 0; y < u.height(); ++y) {
    for (int x = 0; x < u.width(); ++x) {
      const long long dx = x - cx;
      const long long dy = y - cy;
      dst[out.index(cx + dy, cy - dx)] = u.alive(x, y);
    }
  }
  return out;
}

template <Scalar T>
Universe<T> translate(const Universe<T>& u, int dx, int dy) {
  Universe<T> out(u.width(), u.height());
  auto dst = out.mutable_amplitudes();
  for (int y = 0; y < u.height(); ++y) {
    for (int x = 0; x < u.width(); ++x) {
      dst[out.index(static_cast<long long>(x) + dx, static_cast<long long>(y) + dy)] =
          u.alive(x, y);
    }
  }
  return out;
}

template class Universe<float>;
template class Universe<double>;
template std::uint64_t fingerprint<float>(const Universe<float>&) noexcept;
template std::uint64_t fingerprint<double>(const Universe<double>&) noexcept;
template Universe<float> rotate90<float>(const Universe<float>&, int, int);
template Universe<double> rotate90<double>(const Universe<double>&, int, int);
template Universe<float> translate<float>(const Universe<float>&, int, int);
template Universe<double> translate<double>(const Universe<double>&, int, int);

}  // namespace sqgol
