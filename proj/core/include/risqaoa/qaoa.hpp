#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "risqaoa/ising.hpp"
#include "risqaoa/oracle.hpp"
#include "risqaoa/state.hpp"

namespace risq {

// Layer l applies exp(-i gamma_l H_C) then exp(-i beta_l H_M), H_M = sum_q X_q.
struct QaoaParams {
  std::vector<double> gamma;
  std::vector<double> beta;

  std::size_t depth() const { return gamma.size(); }
};

// Throws std::invalid_argument unless gamma and beta have the same length >= 1.
void validate(const QaoaParams& params);

// Adam on <H_C> with multi-start ramp initialization
//   gamma_l = gamma_max * l / p + N(0, sigma^2)
//   beta_l  = beta_max * (1 - l / p) + N(0, sigma^2),   l = 1..p.
struct OptimizerConfig {
  std::size_t depth = 6;
  std::size_t steps = 500;
  double learning_rate = 0.05;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;
  std::size_t restarts = 5;
  double init_noise_sigma = 0.1;
  double gamma_max = 1.0;
  double beta_max = 1.0;
  std::uint64_t seed = 0;
};

void validate(const OptimizerConfig& cfg);

struct TraceRecord {
  std::size_t restart = 0;
  std::size_t step = 0;
  double expectation = 0.0;
  std::optional<double> approx_ratio;
  std::optional<double> overlap;
};

struct ConvergenceTrace {
  std::vector<TraceRecord> records;

  // Records of one restart, in step order.
  std::vector<TraceRecord> restart(std::size_t index) const;
};

// CSV with header restart,step,expectation,approx_ratio,overlap. Metric
// columns are empty when no oracle result was supplied.
void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace);

// Applies one layer in place.
void apply_layer(QaoaState& state, const CostDiagonal& diag, double gamma, double beta);

QaoaState apply_circuit(const CostDiagonal& diag, const QaoaParams& params);

double expectation(const QaoaState& state, const CostDiagonal& diag);

struct Gradient {
  double value = 0.0;  // <H_C> at the given parameters
  std::vector<double> d_gamma;
  std::vector<double> d_beta;
};

// Exact gradient by adjoint differentiation: one forward sweep, then one
// reverse sweep that un-applies each layer to the state and the adjoint
// vector. `on_forward`, when set, sees the final state before the reverse sweep.
Gradient gradient(const CostDiagonal& diag, const QaoaParams& params,
                  const std::function<void(const QaoaState&)>& on_forward = {});

// Ramp initialization for one restart; the stream depends only on
// (cfg.seed, restart).
QaoaParams initial_params(const OptimizerConfig& cfg, std::size_t restart);

struct OptimizeResult {
  QaoaParams best_params;
  std::size_t best_restart = 0;
  QaoaState final_state;
  double final_expectation = 0.0;
  std::vector<double> restart_final_expectations;
  ConvergenceTrace trace;
  std::size_t iterations = 0;     // gradient evaluations over all restarts
  double training_seconds = 0.0;  // wall clock
};

// Runs cfg.restarts Adam trajectories and keeps the one with the lowest final
// <H_C> (ties: lowest restart index). With an oracle result the trace also
// carries approximation ratio and optimal-subspace overlap per step.
OptimizeResult optimize(const CostDiagonal& diag, const OracleResult* oracle,
                        const OptimizerConfig& cfg);

// argmax |amp|^2, ties to the lowest basis index.
std::pair<BasisIndex, double> most_probable_bitstring(const QaoaState& state);

// Shot sampling of the exact distribution. Used only as a test oracle; the
// pipeline reads probabilities directly.
std::vector<BasisIndex> sample_bitstrings(const QaoaState& state, std::size_t shots,
                                          std::uint64_t seed);

}  // namespace risq
