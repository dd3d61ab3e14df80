// risqaoa: build RIS beam-steering Ising instances, solve them with simulated
// QAOA, and validate the resulting phase configurations in the far field.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "risqaoa/config.hpp"
#include "risqaoa/errors.hpp"
#include "risqaoa/pipeline.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitCapacityError = 3;

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  int threads = 0;
  bool no_oracle = false;
};

risq::RunConfig load(const std::string& path, const GlobalFlags& flags) {
  risq::RunConfig cfg = path.empty() ? risq::RunConfig{} : risq::load_config(path);
  if (flags.seed) cfg.qaoa.seed = *flags.seed;
  risq::validate(cfg);
  return cfg;
}

std::string fmt_opt(const std::optional<double>& v, int precision = 4) {
  if (!v) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, *v);
  return buf;
}

void print_summary(const risq::RunResult& r) {
  const std::size_t n = r.instance.n;
  std::cout << "model " << static_cast<int>(r.config.model.model) << " ("
            << risq::to_string(r.config.model.model) << "), " << n << " elements, "
            << r.instance.edge_count() << " edges\n";
  if (r.oracle) {
    std::cout << "oracle: best objective " << -r.oracle->c_min << ", degeneracy "
              << r.oracle->degeneracy() << '\n';
  }
  if (r.qaoa) {
    std::cout << "qaoa: " << risq::bitstring_from_index(r.qaoa->bitstring, n) << " p="
              << r.qaoa->probability << " AR=" << fmt_opt(r.qaoa->final_approx_ratio)
              << " overlap=" << fmt_opt(r.qaoa->final_overlap);
    if (r.qaoa->oracle_optimal) std::cout << (*r.qaoa->oracle_optimal ? " (optimal)" : " (suboptimal)");
    std::cout << '\n';
  }
  if (r.qaoa_pointing) std::cout << "epsilon (qaoa):   " << r.qaoa_pointing->epsilon_deg << " deg\n";
  if (r.oracle_pointing) std::cout << "epsilon (oracle): " << r.oracle_pointing->epsilon_deg << " deg\n";
}

void print_table(const std::vector<const risq::RunResult*>& rows, bool show_alpha) {
  std::printf("%-6s %-20s %6s %7s %9s %9s %8s %8s %6s\n", show_alpha ? "alpha" : "model", "name",
              "edges", "match", "eps_qaoa", "eps_orcl", "AR", "overlap", "D");
  for (const auto* r : rows) {
    const auto& q = r->qaoa;
    std::string first = show_alpha ? fmt_opt(r->config.model.alpha, 2)
                                   : std::to_string(static_cast<int>(r->config.model.model));
    std::printf("%-6s %-20s %6zu %7s %9s %9s %8s %8s %6s\n", first.c_str(),
                risq::to_string(r->config.model.model).c_str(), r->instance.edge_count(),
                q && q->oracle_optimal ? (*q->oracle_optimal ? "yes" : "no") : "-",
                fmt_opt(r->qaoa_pointing ? std::optional(r->qaoa_pointing->epsilon_deg) : std::nullopt, 2).c_str(),
                fmt_opt(r->oracle_pointing ? std::optional(r->oracle_pointing->epsilon_deg) : std::nullopt, 2).c_str(),
                fmt_opt(q ? q->final_approx_ratio : std::nullopt).c_str(),
                fmt_opt(q ? q->final_overlap : std::nullopt).c_str(),
                r->oracle ? std::to_string(r->oracle->degeneracy()).c_str() : "-");
  }
}

std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw risq::ValidationError("expected a comma-separated list of numbers", "--alphas");
    }
  }
  if (out.empty()) throw risq::ValidationError("at least one value required", "--alphas");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RIS beam steering with physics-informed QAOA"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  GlobalFlags flags;
  bool print_defaults = false;
  app.add_flag("--print-defaults", print_defaults, "Print the default configuration and exit");
  app.add_option("--seed", flags.seed, "Override qaoa.seed");
  app.add_option("--out-dir", flags.out_dir, "Directory for reports and exports")->capture_default_str();
  app.add_option("--threads", flags.threads, "Worker threads for data-parallel kernels (0 = runtime default)");
  app.add_flag("--no-oracle", flags.no_oracle, "Skip the exhaustive-search baseline");

  std::string config_path;
  auto* run = app.add_subcommand("run", "Full workflow for the configured model");
  run->add_option("config", config_path, "Configuration file")->check(CLI::ExistingFile);

  auto* compare = app.add_subcommand("compare", "Run all four coupling models on one scenario");
  compare->add_option("config", config_path, "Configuration file")->check(CLI::ExistingFile);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search only");
  oracle->add_option("config", config_path, "Configuration file")->check(CLI::ExistingFile);

  std::string bits;
  auto* pattern = app.add_subcommand("pattern", "Validate one bitstring in the far field");
  pattern->add_option("config", config_path, "Configuration file")->check(CLI::ExistingFile);
  pattern->add_option("--bits", bits, "Bitstring, character i = element i")->required();

  std::string alphas_text = "0.1,0.2,0.3,0.5";
  bool oracle_only = false;
  auto* sweep = app.add_subcommand("sweep", "Sweep the coupling strength alpha");
  sweep->add_option("config", config_path, "Configuration file")->check(CLI::ExistingFile);
  sweep->add_option("--alphas", alphas_text, "Comma-separated alpha values")->capture_default_str();
  sweep->add_flag("--oracle-only", oracle_only, "Validate oracle-optimal bitstrings without running QAOA");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (print_defaults) {
      std::cout << risq::render_config(risq::RunConfig{});
      return 0;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return kExitConfigError;
    }
    risq::set_thread_budget(flags.threads);
    const std::filesystem::path out_dir = flags.out_dir;
    risq::RunOptions options;
    options.run_oracle = !flags.no_oracle;

    if (run->parsed()) {
      const auto result = risq::run_pipeline(load(config_path, flags), options);
      risq::write_run_artifacts(out_dir, result);
      print_summary(result);
    } else if (oracle->parsed()) {
      options.run_oracle = true;
      options.run_qaoa = false;
      const auto result = risq::run_pipeline(load(config_path, flags), options);
      risq::write_run_artifacts(out_dir, result);
      print_summary(result);
    } else if (compare->parsed()) {
      const auto results = risq::compare_models(load(config_path, flags), options);
      risq::write_text_file(out_dir / "comparison.json", risq::render_comparison(results));
      std::vector<const risq::RunResult*> rows;
      for (const auto& r : results) rows.push_back(&r);
      print_table(rows, false);
    } else if (sweep->parsed()) {
      if (oracle_only) {
        options.run_oracle = true;
        options.run_qaoa = false;
      }
      const auto entries = risq::sweep_alpha(load(config_path, flags), parse_alphas(alphas_text), options);
      risq::write_text_file(out_dir / "sweep.json", risq::render_sweep(entries));
      std::vector<const risq::RunResult*> rows;
      for (const auto& e : entries) rows.push_back(&e.result);
      print_table(rows, true);
    } else if (pattern->parsed()) {
      const auto cfg = load(config_path, flags);
      const auto geom = risq::build_geometry(cfg.scenario);
      if (bits.size() != geom.size()) {
        throw risq::ValidationError("bitstring length must equal rows * cols = " +
                                        std::to_string(geom.size()),
                                    "--bits");
      }
      const auto index = risq::index_from_bitstring(bits);
      const auto pat = risq::compute_pattern(geom, index, cfg.validation_alpha(), cfg.validator.pattern);
      const auto peak = risq::find_peak(pat);
      const double eps = risq::pointing_error(cfg.scenario.target, peak);
      std::ostringstream csv, pgm;
      risq::write_pattern_csv(csv, pat);
      risq::write_pattern_pgm(pgm, pat);
      risq::write_text_file(out_dir / "pattern.csv", csv.str());
      risq::write_text_file(out_dir / "pattern.pgm", pgm.str());
      std::cout << "peak theta " << peak.theta_deg << " deg, phi " << peak.phi_deg
                << " deg; epsilon " << eps << " deg\n";
    }
  } catch (const risq::ValidationError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const risq::DegenerateInstanceError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const risq::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacityError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
