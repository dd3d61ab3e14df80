#pragma once

#include <cstddef>
#include <random>

#include "risqaoa/coupling.hpp"
#include "risqaoa/geometry.hpp"
#include "risqaoa/ising.hpp"

namespace risq::testing {

// Reference scenario scaled to a rows x cols grid.
inline ScenarioConfig scenario(std::size_t rows, std::size_t cols) {
  ScenarioConfig cfg;
  cfg.rows = rows;
  cfg.cols = cols;
  return cfg;
}

inline CouplingModelSpec model_spec(int id) {
  CouplingModelSpec spec;
  spec.model = coupling_model_from_int(id);
  return spec;
}

// Normalized minimization Hamiltonian, as the pipeline builds it.
inline IsingInstance hamiltonian(std::size_t rows, std::size_t cols, int model_id) {
  const auto geom = build_geometry(scenario(rows, cols));
  return to_minimization(normalize(build_model(geom, model_spec(model_id)).instance));
}

// Dense Gaussian couplings, zero diagonal.
inline IsingInstance random_instance(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < J.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < J.cols(); ++j) J(i, j) = J(j, i) = g(rng);
  }
  return make_instance(J);
}

}  // namespace risq::testing
