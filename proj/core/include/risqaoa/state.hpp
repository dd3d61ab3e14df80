#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace risq {

using Amplitude = std::complex<double>;

// Full 2^n state vector, basis index convention as in ising.hpp.
struct QaoaState {
  std::size_t n = 0;
  std::vector<Amplitude> amplitudes;

  std::size_t dimension() const { return amplitudes.size(); }
};

// |+>^n
QaoaState uniform_state(std::size_t n);

double norm_squared(std::span<const Amplitude> psi);

// In-place kernels. Reductions are accumulated over fixed index chunks and
// combined in chunk order, so results do not depend on the thread count.
namespace kernels {

// psi[idx] *= exp(-i gamma diag[idx])
void apply_cost_phase(std::span<Amplitude> psi, std::span<const double> diag, double gamma);

// exp(-i beta X) on every qubit.
void apply_mixer(std::span<Amplitude> psi, std::size_t n, double beta);

// sum_idx |psi|^2 diag
double diagonal_expectation(std::span<const Amplitude> psi, std::span<const double> diag);

// <lhs| sum_q X_q |rhs>
Amplitude mixer_matrix_element(std::span<const Amplitude> lhs, std::span<const Amplitude> rhs,
                               std::size_t n);

// Returns <lhs| D |rhs>, then applies exp(+i gamma D) to both vectors.
Amplitude diagonal_element_and_unphase(std::span<Amplitude> lhs, std::span<Amplitude> rhs,
                                       std::span<const double> diag, double gamma);

// Fused forms used by the simulator. Each touches memory in two tiled passes
// (low qubits in contiguous blocks, high qubits in gathered tiles) instead of
// one pass per qubit; they agree with the per-qubit kernels above to rounding.

// out[idx] = exp(-i gamma diag[idx])
void cost_phases(std::span<const double> diag, double gamma, std::span<Amplitude> out);

// exp(-i beta H_M) exp(-i gamma D) applied in place.
void apply_layer(std::span<Amplitude> psi, std::size_t n, std::span<const double> diag,
                 double gamma, double beta);
// Same, with the phase factors precomputed by cost_phases.
void apply_layer(std::span<Amplitude> psi, std::size_t n, std::span<const Amplitude> phases,
                 double beta);

struct AdjointLayerTerms {
  Amplitude mixer;     // <lambda| H_M |psi> before un-mixing
  Amplitude diagonal;  // <lambda| D |psi> after un-mixing
};

// Reverse step of one layer: measures the two matrix elements the gradient
// needs and rewinds both vectors through the layer,
// lambda, psi <- exp(+i gamma D) exp(+i beta H_M) (lambda, psi).
AdjointLayerTerms adjoint_layer(std::span<Amplitude> lambda, std::span<Amplitude> psi,
                                std::size_t n, std::span<const double> diag, double gamma,
                                double beta);
// Same, un-phasing with conj(phases) from cost_phases.
AdjointLayerTerms adjoint_layer(std::span<Amplitude> lambda, std::span<Amplitude> psi,
                                std::size_t n, std::span<const double> diag,
                                std::span<const Amplitude> phases, double beta);

}  // namespace kernels
}  // namespace risq
