#include "risqaoa/metrics.hpp"

#include <complex>
#include <stdexcept>

namespace risq {

double approximation_ratio(double expectation, double c_min, double c_max) {
  if (!(c_max > c_min)) {
    throw std::domain_error("approximation ratio undefined for a flat spectrum (c_max <= c_min)");
  }
  return (c_max - expectation) / (c_max - c_min);
}

double overlap(const QaoaState& state, std::span<const BasisIndex> optimal_set) {
  if (optimal_set.empty()) throw std::invalid_argument("optimal set is empty");
  double total = 0.0;
  for (BasisIndex idx : optimal_set) {
    if (idx >= state.dimension()) throw std::invalid_argument("optimal index outside the state");
    total += std::norm(state.amplitudes[idx]);
  }
  return total;
}

}  // namespace risq
