#include "sqgol/seeding.hpp"

#include <random>

namespace sqgol {

void SeedConfig::validate() const {
  if (!(fraction >= 0.0 && fraction <= 1.0)) throw Error("seed fraction f must lie in [0,1]");
  if (width < 3 || height < 3) throw Error("seeded universe must be at least 3x3");
}

template <Scalar T>
Universe<T> random_init(const SeedConfig& cfg) {
  cfg.validate();
  Universe<T> u(cfg.width, cfg.height);
  std::mt19937_64 rng(cfg.rng_seed);
  for (T& a : u.mutable_amplitudes()) {
    if (unit_interval(rng()) < cfg.fraction) {
      a = static_cast<T>(unit_interval(rng()));
    }
  }
  return u;
}

template Universe<float> random_init<float>(const SeedConfig&);
template Universe<double> random_init<double>(const SeedConfig&);

}  // namespace sqgol
