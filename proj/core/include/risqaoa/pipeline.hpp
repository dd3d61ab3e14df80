#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "risqaoa/config.hpp"
#include "risqaoa/coupling.hpp"
#include "risqaoa/ising.hpp"
#include "risqaoa/oracle.hpp"
#include "risqaoa/qaoa.hpp"
#include "risqaoa/validator.hpp"

namespace risq {

struct RunOptions {
  bool run_oracle = true;
  bool run_qaoa = true;
  bool keep_pattern = true;  // store the validated pattern for export
};

// What survives of a QAOA run once the 2^n state is released.
struct QaoaSummary {
  QaoaParams best_params;
  std::size_t best_restart = 0;
  double final_expectation = 0.0;  // <H_C>, minimize convention
  std::vector<double> restart_final_expectations;
  ConvergenceTrace trace;
  BasisIndex bitstring = 0;
  double probability = 0.0;
  std::optional<bool> oracle_optimal;
  std::optional<double> final_approx_ratio;
  std::optional<double> final_overlap;
  std::size_t iterations = 0;
};

// Wall-clock fields; excluded from determinism comparisons.
struct RunTiming {
  double overhead_seconds = 0.0;  // instance construction + cost diagonal + oracle
  double training_seconds = 0.0;
  double per_iteration_seconds = 0.0;
  double validation_seconds = 0.0;
  int threads = 1;
};

struct RunResult {
  RunConfig config;
  IsingInstance instance;     // normalized, maximize convention
  IsingInstance hamiltonian;  // -instance, what the solvers minimize
  std::optional<OracleResult> oracle;
  std::optional<QaoaSummary> qaoa;
  std::optional<PointingReport> qaoa_pointing;
  std::optional<PointingReport> oracle_pointing;  // lowest-index optimal bitstring
  std::optional<RadiationPattern> pattern;        // QAOA bitstring, else oracle bitstring
  RunTiming timing;
};

// geometry -> model -> normalize -> oracle -> QAOA -> validation.
RunResult run_pipeline(const RunConfig& cfg, const RunOptions& options = {});

// One run per coupling model on the same scenario and seed.
std::vector<RunResult> compare_models(const RunConfig& cfg, const RunOptions& options = {});

struct SweepEntry {
  double alpha = 0.0;
  RunResult result;
};

// Re-runs the pipeline for each coupling strength; validation follows the
// swept value unless the config pins validator.alpha.
std::vector<SweepEntry> sweep_alpha(const RunConfig& cfg, const std::vector<double>& alphas,
                                    const RunOptions& options = {});

// Caps the worker threads used by the data-parallel kernels. Results do not
// depend on this setting.
void set_thread_budget(int threads);

// Report documents (pretty JSON, trailing newline).
std::string render_run_report(const RunResult& result);
std::string render_comparison(const std::vector<RunResult>& results);
std::string render_sweep(const std::vector<SweepEntry>& entries);

// Parses and re-serializes; applying it to its own output is a no-op.
std::string canonicalize_report(const std::string& json_text);
// Drops every "timing" object so two runs can be compared byte for byte.
std::string strip_wall_clock(const std::string& json_text);

// Writes report.json, trace.csv, pattern.csv, pattern.pgm and
// hamiltonian_edges.txt (whichever apply) under out_dir.
void write_run_artifacts(const std::filesystem::path& out_dir, const RunResult& result);
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace risq
