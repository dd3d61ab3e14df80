#include "risqaoa/qaoa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "risqaoa/errors.hpp"
#include "risqaoa/metrics.hpp"

namespace risq {
namespace {

constexpr std::size_t kPhaseCacheBytes = std::size_t{256} << 20;

void check_diag(const QaoaState& state, const CostDiagonal& diag) {
  if (state.dimension() != diag.dimension() || state.n != diag.n) {
    throw std::invalid_argument("state and cost diagonal describe different qubit counts");
  }
}

std::mt19937_64 restart_engine(std::uint64_t seed, std::size_t restart) {
  const auto r = static_cast<std::uint64_t>(restart);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r >> 32)};
  return std::mt19937_64(seq);
}

struct Adam {
  explicit Adam(std::size_t size, const OptimizerConfig& cfg)
      : cfg(cfg), m(size, 0.0), v(size, 0.0) {}

  void step(std::vector<double>& theta, const std::vector<double>& grad) {
    ++t;
    const double c1 = 1.0 - std::pow(cfg.adam_beta1, static_cast<double>(t));
    const double c2 = 1.0 - std::pow(cfg.adam_beta2, static_cast<double>(t));
    for (std::size_t i = 0; i < theta.size(); ++i) {
      m[i] = cfg.adam_beta1 * m[i] + (1.0 - cfg.adam_beta1) * grad[i];
      v[i] = cfg.adam_beta2 * v[i] + (1.0 - cfg.adam_beta2) * grad[i] * grad[i];
      theta[i] -= cfg.learning_rate * (m[i] / c1) / (std::sqrt(v[i] / c2) + cfg.adam_epsilon);
    }
  }

  const OptimizerConfig& cfg;
  std::vector<double> m;
  std::vector<double> v;
  std::size_t t = 0;
};

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

void validate(const QaoaParams& params) {
  if (params.gamma.empty() || params.gamma.size() != params.beta.size()) {
    throw std::invalid_argument("gamma and beta must both have length p >= 1");
  }
}

void validate(const OptimizerConfig& cfg) {
  if (cfg.depth < 1) throw ValidationError("must be at least 1", "qaoa.depth");
  if (!(cfg.learning_rate > 0.0)) throw ValidationError("must be positive", "qaoa.learning_rate");
  if (cfg.restarts < 1) throw ValidationError("must be at least 1", "qaoa.restarts");
  if (!(cfg.adam_beta1 >= 0.0 && cfg.adam_beta1 < 1.0)) {
    throw ValidationError("must lie in [0, 1)", "qaoa.adam_beta1");
  }
  if (!(cfg.adam_beta2 >= 0.0 && cfg.adam_beta2 < 1.0)) {
    throw ValidationError("must lie in [0, 1)", "qaoa.adam_beta2");
  }
  if (!(cfg.adam_epsilon > 0.0)) throw ValidationError("must be positive", "qaoa.adam_epsilon");
  if (!(cfg.init_noise_sigma >= 0.0)) {
    throw ValidationError("must be non-negative", "qaoa.init_noise_sigma");
  }
}

std::vector<TraceRecord> ConvergenceTrace::restart(std::size_t index) const {
  std::vector<TraceRecord> out;
  for (const auto& r : records) {
    if (r.restart == index) out.push_back(r);
  }
  return out;
}

void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace) {
  out << "restart,step,expectation,approx_ratio,overlap\n";
  for (const auto& r : trace.records) {
    out << r.restart << ',' << r.step << ',' << format_double(r.expectation) << ',';
    if (r.approx_ratio) out << format_double(*r.approx_ratio);
    out << ',';
    if (r.overlap) out << format_double(*r.overlap);
    out << '\n';
  }
}

void apply_layer(QaoaState& state, const CostDiagonal& diag, double gamma, double beta) {
  check_diag(state, diag);
  kernels::apply_layer(state.amplitudes, state.n, diag.values, gamma, beta);
}

QaoaState apply_circuit(const CostDiagonal& diag, const QaoaParams& params) {
  validate(params);
  QaoaState state = uniform_state(diag.n);
  for (std::size_t l = 0; l < params.depth(); ++l) {
    apply_layer(state, diag, params.gamma[l], params.beta[l]);
  }
  return state;
}

double expectation(const QaoaState& state, const CostDiagonal& diag) {
  check_diag(state, diag);
  return kernels::diagonal_expectation(state.amplitudes, diag.values);
}

Gradient gradient(const CostDiagonal& diag, const QaoaParams& params,
                  const std::function<void(const QaoaState&)>& on_forward) {
  validate(params);
  const std::size_t p = params.depth();
  const std::size_t dim = diag.dimension();

  // Phase factors are reused by the backward pass when they fit the cache.
  const bool cache = p * dim * sizeof(Amplitude) <= kPhaseCacheBytes;
  std::vector<std::vector<Amplitude>> phases(cache ? p : 0);
  QaoaState psi = uniform_state(diag.n);
  for (std::size_t l = 0; l < p; ++l) {
    if (cache) {
      phases[l].resize(dim);
      kernels::cost_phases(diag.values, params.gamma[l], phases[l]);
      kernels::apply_layer(psi.amplitudes, psi.n, phases[l], params.beta[l]);
    } else {
      kernels::apply_layer(psi.amplitudes, psi.n, diag.values, params.gamma[l], params.beta[l]);
    }
  }
  Gradient g;
  g.value = kernels::diagonal_expectation(psi.amplitudes, diag.values);
  if (on_forward) on_forward(psi);

  // lambda = H_C psi, carried backwards through the adjoint of each layer.
  std::vector<Amplitude> lambda(dim);
  for (std::size_t i = 0; i < dim; ++i) lambda[i] = diag.values[i] * psi.amplitudes[i];

  g.d_gamma.assign(p, 0.0);
  g.d_beta.assign(p, 0.0);
  for (std::size_t l = p; l-- > 0;) {
    // d/d beta_l: 2 Re <lambda| -i H_M |psi_l> = 2 Im <lambda|H_M|psi_l>
    // d/d gamma_l: 2 Im <lambda|H_C|phase-layer output>
    const auto terms =
        cache ? kernels::adjoint_layer(lambda, psi.amplitudes, psi.n, diag.values, phases[l],
                                       params.beta[l])
              : kernels::adjoint_layer(lambda, psi.amplitudes, psi.n, diag.values,
                                       params.gamma[l], params.beta[l]);
    g.d_beta[l] = 2.0 * terms.mixer.imag();
    g.d_gamma[l] = 2.0 * terms.diagonal.imag();
  }
  return g;
}

QaoaParams initial_params(const OptimizerConfig& cfg, std::size_t restart) {
  auto engine = restart_engine(cfg.seed, restart);
  std::normal_distribution<double> noise(0.0, 1.0);
  QaoaParams params;
  const double p = static_cast<double>(cfg.depth);
  for (std::size_t l = 1; l <= cfg.depth; ++l) {
    const double frac = static_cast<double>(l) / p;
    params.gamma.push_back(cfg.gamma_max * frac + cfg.init_noise_sigma * noise(engine));
    params.beta.push_back(cfg.beta_max * (1.0 - frac) + cfg.init_noise_sigma * noise(engine));
  }
  return params;
}

OptimizeResult optimize(const CostDiagonal& diag, const OracleResult* oracle,
                        const OptimizerConfig& cfg) {
  validate(cfg);
  const bool with_metrics = oracle != nullptr && oracle->c_max > oracle->c_min;
  if (oracle != nullptr && oracle->n != diag.n) {
    throw std::invalid_argument("oracle result and cost diagonal describe different instances");
  }

  OptimizeResult result;
  const auto start = std::chrono::steady_clock::now();
  const std::size_t p = cfg.depth;

  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    QaoaParams params = initial_params(cfg, r);
    std::vector<double> theta(2 * p);
    Adam adam(2 * p, cfg);

    for (std::size_t step = 0; step < cfg.steps; ++step) {
      TraceRecord rec;
      rec.restart = r;
      rec.step = step;
      const Gradient g = gradient(diag, params, [&](const QaoaState& s) {
        if (with_metrics) rec.overlap = overlap(s, oracle->optimal_set);
      });
      rec.expectation = g.value;
      if (with_metrics) rec.approx_ratio = approximation_ratio(g.value, oracle->c_min, oracle->c_max);
      result.trace.records.push_back(rec);
      ++result.iterations;

      std::copy(params.gamma.begin(), params.gamma.end(), theta.begin());
      std::copy(params.beta.begin(), params.beta.end(), theta.begin() + static_cast<long>(p));
      std::vector<double> grad(2 * p);
      std::copy(g.d_gamma.begin(), g.d_gamma.end(), grad.begin());
      std::copy(g.d_beta.begin(), g.d_beta.end(), grad.begin() + static_cast<long>(p));
      adam.step(theta, grad);
      std::copy(theta.begin(), theta.begin() + static_cast<long>(p), params.gamma.begin());
      std::copy(theta.begin() + static_cast<long>(p), theta.end(), params.beta.begin());
    }

    QaoaState state = apply_circuit(diag, params);
    const double value = expectation(state, diag);
    result.restart_final_expectations.push_back(value);
    if (r == 0 || value < result.final_expectation) {
      result.best_restart = r;
      result.best_params = params;
      result.final_state = std::move(state);
      result.final_expectation = value;
    }
  }

  result.training_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::pair<BasisIndex, double> most_probable_bitstring(const QaoaState& state) {
  BasisIndex best = 0;
  double best_p = -1.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const double prob = std::norm(state.amplitudes[i]);
    if (prob > best_p) {
      best_p = prob;
      best = i;
    }
  }
  return {best, best_p};
}

std::vector<BasisIndex> sample_bitstrings(const QaoaState& state, std::size_t shots,
                                          std::uint64_t seed) {
  std::vector<double> cumulative(state.dimension());
  double acc = 0.0;
  for (std::size_t i = 0; i < cumulative.size(); ++i) {
    acc += std::norm(state.amplitudes[i]);
    cumulative[i] = acc;
  }
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> u(0.0, acc);
  std::vector<BasisIndex> out(shots);
  for (auto& s : out) {
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u(engine));
    s = static_cast<BasisIndex>(std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                                         static_cast<std::ptrdiff_t>(cumulative.size()) - 1));
  }
  return out;
}

}  // namespace risq
