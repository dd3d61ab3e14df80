#pragma once

#include <span>

#include "risqaoa/ising.hpp"
#include "risqaoa/state.hpp"

namespace risq {

struct MetricSample {
  double approx_ratio = 0.0;
  double overlap = 0.0;
};

// (c_max - <H>) / (c_max - c_min): 1 at the ground energy, 0 at the top of the
// spectrum. Throws std::domain_error when c_max <= c_min.
double approximation_ratio(double expectation, double c_min, double c_max);

// Probability mass on the optimal basis states, sum_mu |<z*_mu|psi>|^2.
// Throws std::invalid_argument for an empty set or an index outside the state.
double overlap(const QaoaState& state, std::span<const BasisIndex> optimal_set);

}  // namespace risq
