#include "sqgol/cycle.hpp"

namespace sqgol {

template <Scalar T>
StateHistory<T>::StateHistory(std::size_t dense, std::size_t max_sparse)
    : dense_capacity_(dense == 0 ? 1 : dense), max_sparse_(max_sparse) {}

template <Scalar T>
void StateHistory<T>::push(std::size_t generation, const Universe<T>& u) {
  if (!dense_.empty() && generation <= dense_.back().generation) {
    throw Error("state history generations must increase");
  }
  dense_.push_back({generation, fingerprint(u), u});
  if (dense_.size() > dense_capacity_) {
    Entry oldest = std::move(dense_.front());
    dense_.pop_front();
    if (oldest.generation % dense_capacity_ == 0 && max_sparse_ > 0) {
      sparse_.push_back(std::move(oldest));
      if (sparse_.size() > max_sparse_) sparse_.pop_front();
    }
  }
}

template <Scalar T>
std::optional<std::size_t> StateHistory<T>::latest_period() const {
  if (dense_.size() < 2) return std::nullopt;
  const Entry& latest = dense_.back();
  auto matches = [&](const Entry& e) {
    return e.fingerprint == latest.fingerprint && e.state.identical(latest.state);
  };
  for (std::size_t i = dense_.size() - 1; i-- > 0;) {
    if (matches(dense_[i])) return latest.generation - dense_[i].generation;
  }
  for (std::size_t i = sparse_.size(); i-- > 0;) {
    if (matches(sparse_[i])) return latest.generation - sparse_[i].generation;
  }
  return std::nullopt;
}

template <Scalar T>
const Universe<T>* StateHistory<T>::state_before(std::size_t back) const {
  if (back >= dense_.size()) return nullptr;
  const Entry& e = dense_[dense_.size() - 1 - back];
  if (e.generation + back != dense_.back().generation) return nullptr;
  return &e.state;
}

template <Scalar T>
std::optional<std::size_t> detect_cycle(
    const std::vector<typename StateHistory<T>::Entry>& history) {
  if (history.size() < 2) return std::nullopt;
  const auto& latest = history.back();
  for (std::size_t i = history.size() - 1; i-- > 0;) {
    const auto& e = history[i];
    if (e.generation >= latest.generation) throw Error("history must be ordered by generation");
    if (e.fingerprint == latest.fingerprint && e.state.identical(latest.state)) {
      return latest.generation - e.generation;
    }
  }
  return std::nullopt;
}

template class StateHistory<float>;
template class StateHistory<double>;
template std::optional<std::size_t> detect_cycle<float>(
    const std::vector<StateHistory<float>::Entry>&);
template std::optional<std::size_t> detect_cycle<double>(
    const std::vector<StateHistory<double>::Entry>&);

}  // namespace sqgol
