#pragma once

#include <cstddef>
#include <vector>

#include "risqaoa/ising.hpp"

namespace risq {

enum class EnumerationStrategy {
  kGrayCode,  // single-bit-flip incremental updates, range partitioned
  kDirect,    // evaluate_cost on every configuration
};

struct OracleOptions {
  std::size_t max_qubits = kDefaultMaxQubits;
  EnumerationStrategy strategy = EnumerationStrategy::kGrayCode;
  // Degeneracy tolerance relative to the spectral width c_max - c_min.
  double relative_tolerance = 1e-9;
};

// Exhaustive minimization of evaluate_cost. c_min / c_max and every member of
// optimal_set are exact evaluate_cost values regardless of strategy.
struct OracleResult {
  std::size_t n = 0;
  double c_min = 0.0;
  double c_max = 0.0;
  std::vector<BasisIndex> optimal_set;  // ascending
  double tolerance = 0.0;               // absolute: relative_tolerance * (c_max - c_min)

  std::size_t degeneracy() const { return optimal_set.size(); }
  bool is_optimal(BasisIndex index) const;
};

// Throws CapacityError when n exceeds options.max_qubits.
OracleResult exhaustive_search(const IsingInstance& instance, const OracleOptions& options = {});

// Incrementally updated cost of every configuration, in basis-index order,
// as computed by the Gray-code walk. Audit helper for n <= 20.
std::vector<double> gray_code_costs(const IsingInstance& instance);

}  // namespace risq
