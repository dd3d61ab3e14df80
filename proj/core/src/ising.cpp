#include "risqaoa/ising.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "risqaoa/errors.hpp"

namespace risq {

SpinConfig spins_from_index(BasisIndex index, std::size_t n) {
  SpinConfig s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = ((index >> i) & 1U) ? -1 : 1;
  return s;
}

BasisIndex index_from_spins(std::span<const std::int8_t> spins) {
  if (spins.size() > 63) throw CapacityError("spin configuration longer than 63 elements");
  BasisIndex idx = 0;
  for (std::size_t i = 0; i < spins.size(); ++i) {
    if (spins[i] != 1 && spins[i] != -1) throw std::invalid_argument("spins must be +1 or -1");
    if (spins[i] == -1) idx |= BasisIndex{1} << i;
  }
  return idx;
}

std::string bitstring_from_index(BasisIndex index, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((index >> i) & 1U) s[i] = '1';
  }
  return s;
}

BasisIndex index_from_bitstring(std::string_view bits) {
  if (bits.size() > 63) throw CapacityError("bitstring longer than 63 elements");
  BasisIndex idx = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      idx |= BasisIndex{1} << i;
    } else if (bits[i] != '0') {
      throw ValidationError("bitstring may contain only '0' and '1'", "bits");
    }
  }
  return idx;
}

double evaluate_cost(const IsingInstance& instance, std::span<const std::int8_t> spins) {
  if (spins.size() != instance.n) throw std::invalid_argument("spin configuration length mismatch");
  double s = 0.0;
  for (const auto& e : instance.edges) {
    const double t = 2.0 * e.weight;
    s += (spins[e.i] == spins[e.j]) ? t : -t;
  }
  for (std::size_t i = 0; i < instance.n; ++i) {
    if (instance.h[i] != 0.0) s += spins[i] > 0 ? instance.h[i] : -instance.h[i];
  }
  return s;
}

double evaluate_cost(const IsingInstance& instance, BasisIndex index) {
  double s = 0.0;
  for (const auto& e : instance.edges) {
    const double t = 2.0 * e.weight;
    s += (((index >> e.i) ^ (index >> e.j)) & 1U) ? -t : t;
  }
  for (std::size_t i = 0; i < instance.n; ++i) {
    if (instance.h[i] != 0.0) s += ((index >> i) & 1U) ? -instance.h[i] : instance.h[i];
  }
  return s;
}

CostDiagonal build_cost_diagonal(const IsingInstance& instance, std::size_t max_qubits) {
  if (instance.n > max_qubits) {
    throw CapacityError("cost diagonal needs 2^" + std::to_string(instance.n) +
                        " entries; qubit budget is " + std::to_string(max_qubits));
  }
  CostDiagonal diag;
  diag.n = instance.n;
  const std::size_t dim = std::size_t{1} << instance.n;
  diag.values.assign(dim, 0.0);

  // Edge-outer loop within cache-sized blocks: every entry sees the same
  // sequence of additions as evaluate_cost, so results match it exactly.
  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (dim + kBlock - 1) / kBlock;
  double* out = diag.values.data();
  const auto& edges = instance.edges;
  const auto& h = instance.h;
  const std::size_t n = instance.n;

#pragma omp parallel for schedule(static)
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t lo = b * kBlock;
    const std::size_t hi = std::min(dim, lo + kBlock);
    for (const auto& e : edges) {
      const double t = 2.0 * e.weight;
      for (std::size_t idx = lo; idx < hi; ++idx) {
        out[idx] += (((idx >> e.i) ^ (idx >> e.j)) & 1U) ? -t : t;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (h[i] == 0.0) continue;
      for (std::size_t idx = lo; idx < hi; ++idx) {
        out[idx] += ((idx >> i) & 1U) ? -h[i] : h[i];
      }
    }
  }
  return diag;
}

double cost_scale(const IsingInstance& instance) {
  double s = 0.0;
  for (const auto& e : instance.edges) s += 2.0 * std::abs(e.weight);
  for (double v : instance.h) s += std::abs(v);
  return s;
}

}  // namespace risq
