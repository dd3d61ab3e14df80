#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "risqaoa/coupling.hpp"
#include "risqaoa/geometry.hpp"
#include "risqaoa/ising.hpp"
#include "risqaoa/qaoa.hpp"
#include "risqaoa/validator.hpp"

namespace risq {

struct ValidatorConfig {
  std::optional<double> alpha;  // defaults to the model's coupling strength
  PatternOptions pattern;
};

// Everything one pipeline run depends on. Together with qaoa.seed it fully
// determines every number in the run report.
struct RunConfig {
  ScenarioConfig scenario;
  CouplingModelSpec model;
  OptimizerConfig qaoa;
  std::size_t max_qubits = kDefaultMaxQubits;
  ValidatorConfig validator;

  double validation_alpha() const { return validator.alpha.value_or(model.alpha); }
};

void validate(const RunConfig& cfg);

// INI-style document with sections [scenario], [model], [qaoa], [validator].
// Missing keys keep their defaults; unknown sections or keys and malformed
// values raise ValidationError naming "section.key".
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);

// Full document with every key, suitable as a starting config.
std::string render_config(const RunConfig& cfg);

}  // namespace risq
