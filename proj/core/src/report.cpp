#include <algorithm>

#include <json.hpp>

#include "risqaoa/pipeline.hpp"

namespace risq {
namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kOptimalSetLimit = 64;

json conventions() {
  return {
      {"bitstring", "character i is element i (element 0 leftmost); bit 0 -> reflection phase 0 rad "
                    "(spin +1), bit 1 -> pi rad (spin -1)"},
      {"element_index", "row-major: i = row * cols + col, x = row * spacing, y = col * spacing"},
      {"basis_index", "binary digit i of the state index is element i (element 0 least significant)"},
      {"objective", "sum_{i<j} 2 J_ij x_i x_j over the normalized couplings, to be maximized"},
      {"hamiltonian", "H_C = -objective; the optimizer and approximation ratio use H_C"},
  };
}

json direction(Direction d) { return {{"theta_deg", d.theta_deg}, {"phi_deg", d.phi_deg}}; }

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json scenario_json(const ScenarioConfig& s) {
  return {{"frequency_hz", s.frequency_hz},
          {"element_spacing_m", s.element_spacing_m},
          {"rows", s.rows},
          {"cols", s.cols},
          {"incident", direction(s.incident)},
          {"target", direction(s.target)}};
}

json model_json(const RunResult& r) {
  const auto& m = r.config.model;
  const auto geom = build_geometry(r.config.scenario);
  json j = {{"id", static_cast<int>(m.model)},
            {"name", to_string(m.model)},
            {"alpha", m.alpha},
            {"cutoff_m", m.effective_cutoff(geom)},
            {"inverse_distance_scale", m.effective_inverse_distance_scale(geom)},
            {"edge_count", r.instance.edge_count()},
            {"normalization_sum", optional_number(r.instance.normalization_sum)},
            {"constant_offset", r.instance.constant_offset}};
  return j;
}

json optimizer_json(const OptimizerConfig& q, std::size_t max_qubits) {
  return {{"depth", q.depth},
          {"steps", q.steps},
          {"learning_rate", q.learning_rate},
          {"adam_beta1", q.adam_beta1},
          {"adam_beta2", q.adam_beta2},
          {"adam_epsilon", q.adam_epsilon},
          {"restarts", q.restarts},
          {"init_noise_sigma", q.init_noise_sigma},
          {"gamma_max", q.gamma_max},
          {"beta_max", q.beta_max},
          {"seed", q.seed},
          {"max_qubits", max_qubits}};
}

json validator_json(const RunConfig& c) {
  return {{"alpha", c.validation_alpha()},
          {"theta_step_deg", c.validator.pattern.grid.theta_step_deg},
          {"phi_step_deg", c.validator.pattern.grid.phi_step_deg},
          {"element_exponent", c.validator.pattern.element_exponent}};
}

json oracle_json(const OracleResult& o) {
  json set = json::array();
  const std::size_t shown = std::min(o.optimal_set.size(), kOptimalSetLimit);
  for (std::size_t i = 0; i < shown; ++i) set.push_back(bitstring_from_index(o.optimal_set[i], o.n));
  return {{"objective_best", -o.c_min},
          {"objective_worst", -o.c_max},
          {"degeneracy", o.degeneracy()},
          {"degeneracy_tolerance", o.tolerance},
          {"optimal_set", set},
          {"optimal_set_truncated", o.optimal_set.size() > kOptimalSetLimit}};
}

json qaoa_json(const QaoaSummary& q, std::size_t n) {
  json restarts = json::array();
  for (double e : q.restart_final_expectations) restarts.push_back(-e);
  return {{"best_restart", q.best_restart},
          {"gamma", q.best_params.gamma},
          {"beta", q.best_params.beta},
          {"objective_expectation", -q.final_expectation},
          {"restart_objective_expectations", restarts},
          {"bitstring", bitstring_from_index(q.bitstring, n)},
          {"probability", q.probability},
          {"oracle_optimal", q.oracle_optimal ? json(*q.oracle_optimal) : json(nullptr)},
          {"final_approx_ratio", optional_number(q.final_approx_ratio)},
          {"final_overlap", optional_number(q.final_overlap)},
          {"iterations", q.iterations}};
}

json pointing_json(const PointingReport& p, BasisIndex bits, std::size_t n) {
  return {{"bitstring", bitstring_from_index(bits, n)},
          {"actual", direction(p.actual)},
          {"epsilon_deg", p.epsilon_deg}};
}

json timing_json(const RunTiming& t) {
  return {{"overhead_seconds", t.overhead_seconds},
          {"overhead_label", "instance construction + cost diagonal + exhaustive search"},
          {"training_seconds", t.training_seconds},
          {"per_iteration_seconds", t.per_iteration_seconds},
          {"validation_seconds", t.validation_seconds},
          {"threads", t.threads}};
}

json validation_json(const RunResult& r) {
  json v = json::object();
  const std::size_t n = r.instance.n;
  if (r.qaoa && r.qaoa_pointing) v["qaoa"] = pointing_json(*r.qaoa_pointing, r.qaoa->bitstring, n);
  if (r.oracle && r.oracle_pointing && !r.oracle->optimal_set.empty()) {
    v["oracle"] = pointing_json(*r.oracle_pointing, r.oracle->optimal_set.front(), n);
  }
  return v;
}

json run_json(const RunResult& r) {
  json j;
  j["format"] = "risqaoa-run-report/1";
  j["conventions"] = conventions();
  j["scenario"] = scenario_json(r.config.scenario);
  j["model"] = model_json(r);
  j["optimizer"] = optimizer_json(r.config.qaoa, r.config.max_qubits);
  j["validator"] = validator_json(r.config);
  j["oracle"] = r.oracle ? oracle_json(*r.oracle) : json(nullptr);
  j["qaoa"] = r.qaoa ? qaoa_json(*r.qaoa, r.instance.n) : json(nullptr);
  j["validation"] = validation_json(r);
  j["timing"] = timing_json(r.timing);
  return j;
}

json summary_row(const RunResult& r) {
  const std::size_t n = r.instance.n;
  json row = {{"model", static_cast<int>(r.config.model.model)},
              {"name", to_string(r.config.model.model)},
              {"alpha", r.config.model.alpha},
              {"validation_alpha", r.config.validation_alpha()},
              {"edge_count", r.instance.edge_count()}};
  if (r.oracle) {
    row["degeneracy"] = r.oracle->degeneracy();
    row["oracle_bitstring"] = r.oracle->optimal_set.empty()
                                  ? json(nullptr)
                                  : json(bitstring_from_index(r.oracle->optimal_set.front(), n));
  }
  row["oracle_epsilon_deg"] = r.oracle_pointing ? json(r.oracle_pointing->epsilon_deg) : json(nullptr);
  if (r.qaoa) {
    row["qaoa_bitstring"] = bitstring_from_index(r.qaoa->bitstring, n);
    row["qaoa_probability"] = r.qaoa->probability;
    row["qaoa_epsilon_deg"] = r.qaoa_pointing ? json(r.qaoa_pointing->epsilon_deg) : json(nullptr);
    row["final_approx_ratio"] = optional_number(r.qaoa->final_approx_ratio);
    row["final_overlap"] = optional_number(r.qaoa->final_overlap);
    row["oracle_match"] = r.qaoa->oracle_optimal ? json(*r.qaoa->oracle_optimal) : json(nullptr);
  }
  row["timing"] = timing_json(r.timing);
  return row;
}

void strip(json& j) {
  if (j.is_object()) {
    j.erase("timing");
    for (auto& [key, value] : j.items()) strip(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip(value);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string render_run_report(const RunResult& result) { return dump(run_json(result)); }

std::string render_comparison(const std::vector<RunResult>& results) {
  json j;
  j["format"] = "risqaoa-comparison/1";
  j["conventions"] = conventions();
  if (!results.empty()) {
    j["scenario"] = scenario_json(results.front().config.scenario);
    j["optimizer"] = optimizer_json(results.front().config.qaoa, results.front().config.max_qubits);
  }
  j["models"] = json::array();
  for (const auto& r : results) j["models"].push_back(summary_row(r));
  return dump(j);
}

std::string render_sweep(const std::vector<SweepEntry>& entries) {
  json j;
  j["format"] = "risqaoa-sweep/1";
  j["conventions"] = conventions();
  if (!entries.empty()) {
    const auto& first = entries.front().result;
    j["scenario"] = scenario_json(first.config.scenario);
    j["optimizer"] = optimizer_json(first.config.qaoa, first.config.max_qubits);
  }
  j["entries"] = json::array();
  for (const auto& e : entries) j["entries"].push_back(summary_row(e.result));
  return dump(j);
}

std::string canonicalize_report(const std::string& json_text) {
  return dump(json::parse(json_text));
}

std::string strip_wall_clock(const std::string& json_text) {
  json j = json::parse(json_text);
  strip(j);
  return dump(j);
}

}  // namespace risq
