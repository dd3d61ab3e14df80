#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "risqaoa/geometry.hpp"

namespace risq {

// The four interaction models, ordered by electromagnetic fidelity.
enum class CouplingModel : int {
  kIdealPhase = 1,         // cos(dphi), dense
  kInverseDistance = 2,    // cos(dphi) + s / d inside the cutoff
  kSphericalWave = 3,      // cos(dphi) + alpha cos(k d) / d inside the cutoff
  kCoupledFarField = 4,    // Re(B_i conj(B_j)), dense
};

std::string to_string(CouplingModel model);
CouplingModel coupling_model_from_int(int id);

inline constexpr double kDefaultCouplingStrength = 0.2;
// Strictly between the nearest-neighbour pitch and the diagonal (sqrt 2 pitch),
// so the cutoff keeps exactly the 4-neighbour lattice.
inline constexpr double kDefaultCutoffFactor = 1.2;

struct CouplingModelSpec {
  CouplingModel model = CouplingModel::kIdealPhase;
  std::optional<double> cutoff_m;                // default kDefaultCutoffFactor * pitch
  double alpha = kDefaultCouplingStrength;       // models 3 and 4
  std::optional<double> inverse_distance_scale;  // model 2, default: wavenumber k

  double effective_cutoff(const ArrayGeometry& geom) const;
  double effective_inverse_distance_scale(const ArrayGeometry& geom) const;
};

void validate(const CouplingModelSpec& spec);

enum class Sense { kMaximize, kMinimize };

struct Coupling {
  std::uint32_t i = 0;
  std::uint32_t j = 0;  // i < j
  double weight = 0.0;
};

// Pairwise spin objective  sum_{i<j} 2 J_ij x_i x_j + sum_i h_i x_i + offset,
// x in {-1, +1}. J is symmetric with a zero diagonal; `edges` lists the
// nonzero upper-triangle entries in ascending (i, j) order and is kept in
// sync with J by make_instance / normalize / to_minimization.
struct IsingInstance {
  std::size_t n = 0;
  Eigen::MatrixXd J;
  std::vector<double> h;
  std::vector<Coupling> edges;
  Sense sense = Sense::kMaximize;
  std::optional<CouplingModel> model;
  // Sum_{i<j} |J_ij| divided out by normalize(); empty until then.
  std::optional<double> normalization_sum;
  // Bitstring-independent constant dropped from the diagonal. For the coupled
  // far-field model this is sum_i |B_i|^2, so objective + offset = |E|^2.
  double constant_offset = 0.0;

  std::size_t edge_count() const { return edges.size(); }
};

// Symmetrizes nothing: J must already be symmetric. The diagonal is zeroed.
IsingInstance make_instance(Eigen::MatrixXd J, std::vector<double> h = {});

struct BeamVector {
  Eigen::VectorXcd B;
  Eigen::MatrixXcd coupling;  // complex C, C_ii = 1
};

struct ModelBuild {
  IsingInstance instance;
  std::optional<BeamVector> beam;  // model 4 only
};

IsingInstance build_model1(const ArrayGeometry& geom);
IsingInstance build_model2(const ArrayGeometry& geom, const CouplingModelSpec& spec);
IsingInstance build_model3(const ArrayGeometry& geom, const CouplingModelSpec& spec);
ModelBuild build_model4(const ArrayGeometry& geom, const CouplingModelSpec& spec);
ModelBuild build_model(const ArrayGeometry& geom, const CouplingModelSpec& spec);

// J / sum_{i<j}|J_ij|. Throws DegenerateInstanceError when every coupling is zero.
IsingInstance normalize(const IsingInstance& instance);

// Negates every coefficient so that minimizing the result maximizes the input.
IsingInstance to_minimization(const IsingInstance& instance);

// Text edge list: "n <count>" then "i j J_ij" per edge with 17 significant digits.
void write_edge_list(std::ostream& out, const IsingInstance& instance);
IsingInstance read_edge_list(std::istream& in);

}  // namespace risq
