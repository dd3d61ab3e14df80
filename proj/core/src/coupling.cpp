#include "risqaoa/coupling.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "risqaoa/errors.hpp"

namespace risq {
namespace {

using Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

void rebuild_edges(IsingInstance& inst) {
  inst.edges.clear();
  for (std::size_t i = 0; i < inst.n; ++i) {
    for (std::size_t j = i + 1; j < inst.n; ++j) {
      const double w = inst.J(idx(i), idx(j));
      if (w != 0.0) {
        inst.edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), w});
      }
    }
  }
}

// Shared body of the two cutoff models: cos(dphi) + extra(d) for d < cutoff.
template <class Extra>
IsingInstance build_cutoff_model(const ArrayGeometry& geom, double cutoff, Extra extra) {
  const std::size_t n = geom.size();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = geom.distance(idx(i), idx(j));
      if (d < cutoff) {
        J(idx(i), idx(j)) = J(idx(j), idx(i)) =
            std::cos(geom.ideal_phase[i] - geom.ideal_phase[j]) + extra(d);
      }
    }
  }
  return make_instance(std::move(J));
}

}  // namespace

std::string to_string(CouplingModel model) {
  switch (model) {
    case CouplingModel::kIdealPhase: return "ideal-phase";
    case CouplingModel::kInverseDistance: return "inverse-distance";
    case CouplingModel::kSphericalWave: return "spherical-wave";
    case CouplingModel::kCoupledFarField: return "coupled-far-field";
  }
  return "unknown";
}

CouplingModel coupling_model_from_int(int id) {
  if (id < 1 || id > 4) {
    throw ValidationError("model id must be 1, 2, 3 or 4, got " + std::to_string(id), "model.id");
  }
  return static_cast<CouplingModel>(id);
}

double CouplingModelSpec::effective_cutoff(const ArrayGeometry& geom) const {
  return cutoff_m.value_or(kDefaultCutoffFactor * geom.scenario.element_spacing_m);
}

double CouplingModelSpec::effective_inverse_distance_scale(const ArrayGeometry& geom) const {
  return inverse_distance_scale.value_or(geom.wavenumber);
}

void validate(const CouplingModelSpec& spec) {
  if (spec.cutoff_m && !(*spec.cutoff_m > 0.0)) {
    throw ValidationError("cutoff distance must be positive", "model.cutoff_m");
  }
  if (!(spec.alpha >= 0.0) || !std::isfinite(spec.alpha)) {
    throw ValidationError("coupling strength must be non-negative", "model.alpha");
  }
  if (spec.inverse_distance_scale && !std::isfinite(*spec.inverse_distance_scale)) {
    throw ValidationError("must be finite", "model.inverse_distance_scale");
  }
}

IsingInstance make_instance(Eigen::MatrixXd J, std::vector<double> h) {
  if (J.rows() != J.cols()) throw std::invalid_argument("coupling matrix must be square");
  IsingInstance inst;
  inst.n = static_cast<std::size_t>(J.rows());
  J.diagonal().setZero();
  inst.J = std::move(J);
  if (h.empty()) h.assign(inst.n, 0.0);
  if (h.size() != inst.n) throw std::invalid_argument("bias length must match coupling matrix");
  inst.h = std::move(h);
  rebuild_edges(inst);
  return inst;
}

IsingInstance build_model1(const ArrayGeometry& geom) {
  const std::size_t n = geom.size();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      J(idx(i), idx(j)) = J(idx(j), idx(i)) = std::cos(geom.ideal_phase[i] - geom.ideal_phase[j]);
    }
  }
  auto inst = make_instance(std::move(J));
  inst.model = CouplingModel::kIdealPhase;
  return inst;
}

IsingInstance build_model2(const ArrayGeometry& geom, const CouplingModelSpec& spec) {
  validate(spec);
  const double scale = spec.effective_inverse_distance_scale(geom);
  auto inst = build_cutoff_model(geom, spec.effective_cutoff(geom),
                                 [scale](double d) { return scale / d; });
  inst.model = CouplingModel::kInverseDistance;
  return inst;
}

IsingInstance build_model3(const ArrayGeometry& geom, const CouplingModelSpec& spec) {
  validate(spec);
  const double k = geom.wavenumber;
  const double alpha = spec.alpha;
  auto inst = build_cutoff_model(geom, spec.effective_cutoff(geom),
                                 [k, alpha](double d) { return alpha * std::cos(k * d) / d; });
  inst.model = CouplingModel::kSphericalWave;
  return inst;
}

ModelBuild build_model4(const ArrayGeometry& geom, const CouplingModelSpec& spec) {
  validate(spec);
  using cd = std::complex<double>;
  const std::size_t n = geom.size();
  const double k = geom.wavenumber;

  BeamVector beam;
  beam.coupling = Eigen::MatrixXcd::Identity(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = geom.distance(idx(i), idx(j));
      const cd c = spec.alpha * std::exp(cd(0.0, -k * d)) / d;
      beam.coupling(idx(i), idx(j)) = c;
      beam.coupling(idx(j), idx(i)) = c;
    }
  }

  // B_j = conj(V_in,j) * sum_i C_ij V_out,i
  Eigen::VectorXcd v_out(idx(n));
  for (std::size_t i = 0; i < n; ++i) v_out(idx(i)) = std::exp(cd(0.0, geom.phase_out[i]));
  beam.B = beam.coupling.transpose() * v_out;
  for (std::size_t j = 0; j < n; ++j) beam.B(idx(j)) *= std::exp(cd(0.0, -geom.phase_in[j]));

  Eigen::MatrixXd J = (beam.B * beam.B.adjoint()).real();
  const double offset = J.diagonal().sum();

  ModelBuild out;
  out.instance = make_instance(std::move(J));
  out.instance.model = CouplingModel::kCoupledFarField;
  out.instance.constant_offset = offset;
  out.beam = std::move(beam);
  return out;
}

ModelBuild build_model(const ArrayGeometry& geom, const CouplingModelSpec& spec) {
  switch (spec.model) {
    case CouplingModel::kIdealPhase: return {build_model1(geom), std::nullopt};
    case CouplingModel::kInverseDistance: return {build_model2(geom, spec), std::nullopt};
    case CouplingModel::kSphericalWave: return {build_model3(geom, spec), std::nullopt};
    case CouplingModel::kCoupledFarField: return build_model4(geom, spec);
  }
  throw ValidationError("unknown coupling model", "model.id");
}

IsingInstance normalize(const IsingInstance& instance) {
  double total = 0.0;
  for (const auto& e : instance.edges) total += std::abs(e.weight);
  if (total == 0.0) throw DegenerateInstanceError("degenerate instance: all couplings are zero");

  IsingInstance out = instance;
  out.J /= total;
  for (auto& v : out.h) v /= total;
  for (auto& e : out.edges) e.weight = out.J(idx(e.i), idx(e.j));
  out.constant_offset /= total;
  out.normalization_sum = total;
  return out;
}

IsingInstance to_minimization(const IsingInstance& instance) {
  IsingInstance out = instance;
  out.J = -out.J;
  for (auto& v : out.h) v = -v;
  for (auto& e : out.edges) e.weight = -e.weight;
  out.constant_offset = -out.constant_offset;
  out.sense = instance.sense == Sense::kMaximize ? Sense::kMinimize : Sense::kMaximize;
  return out;
}

void write_edge_list(std::ostream& out, const IsingInstance& instance) {
  out << "n " << instance.n << '\n';
  std::ostringstream line;
  line << std::setprecision(17);
  for (const auto& e : instance.edges) {
    line.str({});
    line << e.i << ' ' << e.j << ' ' << e.weight << '\n';
    out << line.str();
  }
}

IsingInstance read_edge_list(std::istream& in) {
  std::string tag;
  long long n = -1;
  if (!(in >> tag >> n) || tag != "n" || n < 0) {
    throw ValidationError("edge list must start with 'n <count>'", "edge_list");
  }
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  long long i = 0, j = 0;
  double w = 0.0;
  while (in >> i >> j >> w) {
    if (i < 0 || j < 0 || i >= n || j >= n || i >= j) {
      throw ValidationError("edge indices must satisfy 0 <= i < j < n", "edge_list");
    }
    J(i, j) = J(j, i) = w;
  }
  if (!in.eof()) throw ValidationError("malformed edge line", "edge_list");
  return make_instance(std::move(J));
}

}  // namespace risq
