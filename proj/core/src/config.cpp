#include "risqaoa/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <system_error>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "risqaoa/errors.hpp"

namespace risq {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& raw, const std::string& field) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ValidationError("expected a number, got '" + s + "'", field);
  }
  return v;
}

std::uint64_t parse_uint(const std::string& raw, const std::string& field) {
  const std::string s = trim(raw);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ValidationError("expected a non-negative integer, got '" + s + "'", field);
  }
  return v;
}

std::optional<double> parse_optional(const std::string& raw, const std::string& field) {
  const std::string s = trim(raw);
  if (s == "auto") return std::nullopt;
  return parse_double(s, field);
}

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : "auto"; }

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"scenario.frequency_hz", [](RunConfig& c, const std::string& v, const std::string& f) { c.scenario.frequency_hz = parse_double(v, f); }},
      {"scenario.element_spacing_m", [](RunConfig& c, const std::string& v, const std::string& f) { c.scenario.element_spacing_m = parse_double(v, f); }},
      {"scenario.rows", [](RunConfig& c, const std::string& v, const std::string& f) { c.scenario.rows = parse_uint(v, f); }},
      {"scenario.cols", [](RunConfig& c, const std::string& v, const std::string& f) { c.scenario.cols = parse_uint(v, f); }},
      {"scenario.incident_theta_deg", [](RunConfig& c, const std::string& v, const std::string& f) { c.scenario.incident.theta_deg = parse_double(v, f); }},
      {"scenario.incident_phi_deg", [](RunConfig& c, const std::string& v, const std::string& f) { c.scenario.incident.phi_deg = parse_double(v, f); }},
      {"scenario.target_theta_deg", [](RunConfig& c, const std::string& v, const std::string& f) { c.scenario.target.theta_deg = parse_double(v, f); }},
      {"scenario.target_phi_deg", [](RunConfig& c, const std::string& v, const std::string& f) { c.scenario.target.phi_deg = parse_double(v, f); }},
      {"model.id", [](RunConfig& c, const std::string& v, const std::string& f) {
         const auto id = parse_uint(v, f);
         c.model.model = coupling_model_from_int(id > 4 ? 0 : static_cast<int>(id));
       }},
      {"model.alpha", [](RunConfig& c, const std::string& v, const std::string& f) { c.model.alpha = parse_double(v, f); }},
      {"model.cutoff_m", [](RunConfig& c, const std::string& v, const std::string& f) { c.model.cutoff_m = parse_optional(v, f); }},
      {"model.inverse_distance_scale", [](RunConfig& c, const std::string& v, const std::string& f) { c.model.inverse_distance_scale = parse_optional(v, f); }},
      {"qaoa.depth", [](RunConfig& c, const std::string& v, const std::string& f) { c.qaoa.depth = parse_uint(v, f); }},
      {"qaoa.steps", [](RunConfig& c, const std::string& v, const std::string& f) { c.qaoa.steps = parse_uint(v, f); }},
      {"qaoa.learning_rate", [](RunConfig& c, const std::string& v, const std::string& f) { c.qaoa.learning_rate = parse_double(v, f); }},
      {"qaoa.adam_beta1", [](RunConfig& c, const std::string& v, const std::string& f) { c.qaoa.adam_beta1 = parse_double(v, f); }},
      {"qaoa.adam_beta2", [](RunConfig& c, const std::string& v, const std::string& f) { c.qaoa.adam_beta2 = parse_double(v, f); }},
      {"qaoa.adam_epsilon", [](RunConfig& c, const std::string& v, const std::string& f) { c.qaoa.adam_epsilon = parse_double(v, f); }},
      {"qaoa.restarts", [](RunConfig& c, const std::string& v, const std::string& f) { c.qaoa.restarts = parse_uint(v, f); }},
      {"qaoa.init_noise_sigma", [](RunConfig& c, const std::string& v, const std::string& f) { c.qaoa.init_noise_sigma = parse_double(v, f); }},
      {"qaoa.gamma_max", [](RunConfig& c, const std::string& v, const std::string& f) { c.qaoa.gamma_max = parse_double(v, f); }},
      {"qaoa.beta_max", [](RunConfig& c, const std::string& v, const std::string& f) { c.qaoa.beta_max = parse_double(v, f); }},
      {"qaoa.seed", [](RunConfig& c, const std::string& v, const std::string& f) { c.qaoa.seed = parse_uint(v, f); }},
      {"qaoa.max_qubits", [](RunConfig& c, const std::string& v, const std::string& f) { c.max_qubits = parse_uint(v, f); }},
      {"validator.alpha", [](RunConfig& c, const std::string& v, const std::string& f) { c.validator.alpha = parse_optional(v, f); }},
      {"validator.theta_step_deg", [](RunConfig& c, const std::string& v, const std::string& f) { c.validator.pattern.grid.theta_step_deg = parse_double(v, f); }},
      {"validator.phi_step_deg", [](RunConfig& c, const std::string& v, const std::string& f) { c.validator.pattern.grid.phi_step_deg = parse_double(v, f); }},
      {"validator.element_exponent", [](RunConfig& c, const std::string& v, const std::string& f) { c.validator.pattern.element_exponent = parse_double(v, f); }},
  };
  return table;
}

}  // namespace

template <class T>
void validate_section(const T& part, const std::string& section) {
  try {
    validate(part);
  } catch (const ValidationError& e) {
    if (e.field().empty() || e.field().find('.') != std::string::npos) throw;
    const std::string prefix = e.field() + ": ";
    std::string message = e.what();
    if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
    throw ValidationError(message, section + "." + e.field());
  }
}

void validate(const RunConfig& cfg) {
  validate_section(cfg.scenario, "scenario");
  validate_section(cfg.model, "model");
  validate_section(cfg.qaoa, "qaoa");
  if (cfg.max_qubits < 1) throw ValidationError("must be at least 1", "qaoa.max_qubits");
  if (cfg.validator.alpha && !(*cfg.validator.alpha >= 0.0)) {
    throw ValidationError("must be non-negative", "validator.alpha");
  }
  if (!(cfg.validator.pattern.grid.theta_step_deg > 0.0)) {
    throw ValidationError("must be positive", "validator.theta_step_deg");
  }
  if (!(cfg.validator.pattern.grid.phi_step_deg > 0.0)) {
    throw ValidationError("must be positive", "validator.phi_step_deg");
  }
  if (!(cfg.validator.pattern.element_exponent >= 0.0)) {
    throw ValidationError("must be non-negative", "validator.element_exponent");
  }
}

RunConfig parse_config(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ValidationError(std::string("malformed config: ") + e.message() + " (line " +
                              std::to_string(e.line()) + ")",
                          "config");
  }

  RunConfig cfg;
  const auto& table = setters();
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ValidationError("key outside of a section", section);
    }
    for (const auto& [key, value] : body) {
      const std::string field = section + "." + key;
      const auto it = table.find(field);
      if (it == table.end()) throw ValidationError("unknown configuration key", field);
      it->second(cfg, value.data(), field);
    }
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path.string() + "'", "config");
  return parse_config(in);
}

std::string render_config(const RunConfig& cfg) {
  std::ostringstream os;
  os << "[scenario]\n"
     << "frequency_hz = " << fmt(cfg.scenario.frequency_hz) << '\n'
     << "element_spacing_m = " << fmt(cfg.scenario.element_spacing_m) << '\n'
     << "rows = " << cfg.scenario.rows << '\n'
     << "cols = " << cfg.scenario.cols << '\n'
     << "incident_theta_deg = " << fmt(cfg.scenario.incident.theta_deg) << '\n'
     << "incident_phi_deg = " << fmt(cfg.scenario.incident.phi_deg) << '\n'
     << "target_theta_deg = " << fmt(cfg.scenario.target.theta_deg) << '\n'
     << "target_phi_deg = " << fmt(cfg.scenario.target.phi_deg) << '\n'
     << "\n[model]\n"
     << "; 1 ideal-phase, 2 inverse-distance, 3 spherical-wave, 4 coupled-far-field\n"
     << "id = " << static_cast<int>(cfg.model.model) << '\n'
     << "alpha = " << fmt(cfg.model.alpha) << '\n'
     << "; auto = " << fmt(kDefaultCutoffFactor) << " * element_spacing_m\n"
     << "cutoff_m = " << fmt(cfg.model.cutoff_m) << '\n'
     << "; auto = free-space wavenumber k\n"
     << "inverse_distance_scale = " << fmt(cfg.model.inverse_distance_scale) << '\n'
     << "\n[qaoa]\n"
     << "depth = " << cfg.qaoa.depth << '\n'
     << "steps = " << cfg.qaoa.steps << '\n'
     << "learning_rate = " << fmt(cfg.qaoa.learning_rate) << '\n'
     << "adam_beta1 = " << fmt(cfg.qaoa.adam_beta1) << '\n'
     << "adam_beta2 = " << fmt(cfg.qaoa.adam_beta2) << '\n'
     << "adam_epsilon = " << fmt(cfg.qaoa.adam_epsilon) << '\n'
     << "restarts = " << cfg.qaoa.restarts << '\n'
     << "init_noise_sigma = " << fmt(cfg.qaoa.init_noise_sigma) << '\n'
     << "gamma_max = " << fmt(cfg.qaoa.gamma_max) << '\n'
     << "beta_max = " << fmt(cfg.qaoa.beta_max) << '\n'
     << "seed = " << cfg.qaoa.seed << '\n'
     << "max_qubits = " << cfg.max_qubits << '\n'
     << "\n[validator]\n"
     << "; auto = model alpha\n"
     << "alpha = " << fmt(cfg.validator.alpha) << '\n'
     << "theta_step_deg = " << fmt(cfg.validator.pattern.grid.theta_step_deg) << '\n'
     << "phi_step_deg = " << fmt(cfg.validator.pattern.grid.phi_step_deg) << '\n'
     << "element_exponent = " << fmt(cfg.validator.pattern.element_exponent) << '\n';
  return os.str();
}

}  // namespace risq
