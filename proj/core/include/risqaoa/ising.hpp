#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "risqaoa/coupling.hpp"

namespace risq {

inline constexpr std::size_t kDefaultMaxQubits = 25;

// Basis index of a configuration: bit i of the index is the bit of element i
// (element 0 is the least-significant bit). Bit b maps to spin x = 1 - 2b and
// to reflection phase b * pi: bit 0 <-> spin +1 <-> 0 rad, bit 1 <-> -1 <-> pi.
using BasisIndex = std::uint64_t;

using SpinConfig = std::vector<std::int8_t>;

SpinConfig spins_from_index(BasisIndex index, std::size_t n);
BasisIndex index_from_spins(std::span<const std::int8_t> spins);

// Printed form: character i is the bit of element i, so element 0 is leftmost.
std::string bitstring_from_index(BasisIndex index, std::size_t n);
BasisIndex index_from_bitstring(std::string_view bits);

inline BasisIndex complement(BasisIndex index, std::size_t n) {
  return index ^ ((BasisIndex{1} << n) - 1);
}

// sum_{i<j} 2 J_ij x_i x_j + sum_i h_i x_i, accumulated in ascending edge
// order then ascending bias order. constant_offset is not included.
double evaluate_cost(const IsingInstance& instance, std::span<const std::int8_t> spins);
double evaluate_cost(const IsingInstance& instance, BasisIndex index);

// Spectrum of the diagonal cost Hamiltonian, values[idx] = evaluate_cost(idx)
// bit-for-bit.
struct CostDiagonal {
  std::size_t n = 0;
  std::vector<double> values;

  std::size_t dimension() const { return values.size(); }
};

// Throws CapacityError when n exceeds max_qubits.
CostDiagonal build_cost_diagonal(const IsingInstance& instance,
                                 std::size_t max_qubits = kDefaultMaxQubits);

// Sum of 2|J_ij| over edges plus sum of |h_i|: bounds |cost| for every config.
double cost_scale(const IsingInstance& instance);

}  // namespace risq
