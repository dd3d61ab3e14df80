#include "risqaoa/pipeline.hpp"

#include <chrono>

#include <omp.h>

#include "risqaoa/metrics.hpp"

namespace risq {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

QaoaSummary summarize(OptimizeResult&& opt, const OracleResult* oracle) {
  QaoaSummary s;
  s.best_params = std::move(opt.best_params);
  s.best_restart = opt.best_restart;
  s.final_expectation = opt.final_expectation;
  s.restart_final_expectations = std::move(opt.restart_final_expectations);
  s.trace = std::move(opt.trace);
  s.iterations = opt.iterations;
  const auto [bits, prob] = most_probable_bitstring(opt.final_state);
  s.bitstring = bits;
  s.probability = prob;
  if (oracle != nullptr) {
    s.oracle_optimal = oracle->is_optimal(bits);
    if (oracle->c_max > oracle->c_min) {
      s.final_approx_ratio = approximation_ratio(opt.final_expectation, oracle->c_min, oracle->c_max);
    }
    s.final_overlap = overlap(opt.final_state, oracle->optimal_set);
  }
  return s;
}

}  // namespace

void set_thread_budget(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

RunResult run_pipeline(const RunConfig& cfg, const RunOptions& options) {
  validate(cfg);
  RunResult result;
  result.config = cfg;
  result.timing.threads = omp_get_max_threads();

  const auto t0 = Clock::now();
  const ArrayGeometry geom = build_geometry(cfg.scenario);
  result.instance = normalize(build_model(geom, cfg.model).instance);
  result.hamiltonian = to_minimization(result.instance);

  std::optional<CostDiagonal> diag;
  if (options.run_qaoa) diag = build_cost_diagonal(result.hamiltonian, cfg.max_qubits);
  if (options.run_oracle) {
    OracleOptions oo;
    oo.max_qubits = cfg.max_qubits;
    result.oracle = exhaustive_search(result.hamiltonian, oo);
  }
  result.timing.overhead_seconds = seconds_since(t0);

  if (options.run_qaoa) {
    const OracleResult* oracle = result.oracle ? &*result.oracle : nullptr;
    OptimizeResult opt = optimize(*diag, oracle, cfg.qaoa);
    diag.reset();
    result.timing.training_seconds = opt.training_seconds;
    if (opt.iterations > 0) {
      result.timing.per_iteration_seconds = opt.training_seconds / static_cast<double>(opt.iterations);
    }
    result.qaoa = summarize(std::move(opt), oracle);
  }

  const auto t1 = Clock::now();
  const double alpha = cfg.validation_alpha();
  const auto& pattern_opts = cfg.validator.pattern;
  auto validate_bits = [&](BasisIndex bits, bool keep) {
    RadiationPattern pattern = compute_pattern(geom, bits, alpha, pattern_opts);
    PointingReport rep;
    rep.target = cfg.scenario.target;
    rep.actual = find_peak(pattern);
    rep.epsilon_deg = pointing_error(rep.target, rep.actual);
    if (keep && options.keep_pattern) result.pattern = std::move(pattern);
    return rep;
  };
  if (result.qaoa) result.qaoa_pointing = validate_bits(result.qaoa->bitstring, true);
  if (result.oracle && !result.oracle->optimal_set.empty()) {
    result.oracle_pointing = validate_bits(result.oracle->optimal_set.front(), !result.qaoa);
  }
  result.timing.validation_seconds = seconds_since(t1);
  return result;
}

std::vector<RunResult> compare_models(const RunConfig& cfg, const RunOptions& options) {
  std::vector<RunResult> out;
  for (int id = 1; id <= 4; ++id) {
    RunConfig c = cfg;
    c.model.model = coupling_model_from_int(id);
    RunOptions o = options;
    o.keep_pattern = false;
    out.push_back(run_pipeline(c, o));
  }
  return out;
}

std::vector<SweepEntry> sweep_alpha(const RunConfig& cfg, const std::vector<double>& alphas,
                                    const RunOptions& options) {
  std::vector<SweepEntry> out;
  for (double a : alphas) {
    RunConfig c = cfg;
    c.model.alpha = a;
    RunOptions o = options;
    o.keep_pattern = false;
    out.push_back({a, run_pipeline(c, o)});
  }
  return out;
}

}  // namespace risq
