#include "risqaoa/validator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "risqaoa/errors.hpp"

namespace risq {
namespace {

using cd = std::complex<double>;
using Eigen::Index;

std::vector<double> grid_axis(double step, double stop, bool inclusive) {
  std::vector<double> axis;
  // Index-based so accumulated rounding never adds or drops an end point.
  const auto count = static_cast<std::size_t>(std::floor(stop / step + 1e-9));
  for (std::size_t i = 0; i <= count; ++i) {
    const double v = static_cast<double>(i) * step;
    if (inclusive ? v <= stop + 1e-9 : v < stop - 1e-9) axis.push_back(std::min(v, stop));
  }
  return axis;
}

}  // namespace

Eigen::MatrixXd validation_coupling(const ArrayGeometry& geom, double alpha) {
  const auto n = static_cast<Index>(geom.size());
  Eigen::MatrixXd C = Eigen::MatrixXd::Identity(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double d = geom.distance(i, j);
      C(i, j) = C(j, i) = alpha * std::cos(geom.wavenumber * d) / d;
    }
  }
  return C;
}

ExcitationSet build_excitations(const ArrayGeometry& geom, BasisIndex bits, double alpha) {
  const std::size_t n = geom.size();
  ExcitationSet ex;
  ex.v_ideal.resize(static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double ris_phase = ((bits >> i) & 1U) ? kPi : 0.0;
    ex.v_ideal(static_cast<Index>(i)) = std::exp(cd(0.0, ris_phase - geom.phase_in[i]));
  }
  ex.coupling = validation_coupling(geom, alpha);
  ex.v_actual = ex.coupling.cast<cd>() * ex.v_ideal;
  return ex;
}

cd array_factor(const ArrayGeometry& geom, const Eigen::VectorXcd& excitations, Direction dir) {
  if (static_cast<std::size_t>(excitations.size()) != geom.size()) {
    throw std::invalid_argument("excitation vector length must equal the element count");
  }
  cd af{};
  for (std::size_t i = 0; i < geom.size(); ++i) {
    const double phase = projected_phase(geom.wavenumber, geom.x[i], geom.y[i], dir);
    af += excitations(static_cast<Index>(i)) * cd(std::cos(phase), std::sin(phase));
  }
  return af;
}

RadiationPattern compute_pattern(const ArrayGeometry& geom, const Eigen::VectorXcd& excitations,
                                 const PatternOptions& options) {
  const auto& grid = options.grid;
  if (!(grid.theta_step_deg > 0.0) || !(grid.phi_step_deg > 0.0)) {
    throw ValidationError("angular grid steps must be positive", "validator.grid");
  }
  RadiationPattern pat;
  pat.theta_deg = grid_axis(grid.theta_step_deg, 90.0, true);
  pat.phi_deg = grid_axis(grid.phi_step_deg, 360.0, false);
  if (pat.theta_deg.empty() || pat.phi_deg.empty()) {
    throw ValidationError("angular grid is empty", "validator.grid");
  }

  const auto rows = static_cast<Index>(pat.theta_deg.size());
  const auto cols = static_cast<Index>(pat.phi_deg.size());
  pat.power.resize(rows, cols);
#pragma omp parallel for schedule(static)
  for (Index r = 0; r < rows; ++r) {
    const double th = deg_to_rad(pat.theta_deg[static_cast<std::size_t>(r)]);
    const double element = std::pow(std::max(0.0, std::cos(th)), options.element_exponent);
    for (Index c = 0; c < cols; ++c) {
      const cd af = array_factor(geom, excitations, {pat.theta_deg[static_cast<std::size_t>(r)],
                                                     pat.phi_deg[static_cast<std::size_t>(c)]});
      pat.power(r, c) = std::norm(af) * element;
    }
  }

  const double peak = pat.power.maxCoeff();
  if (!(peak > 0.0)) throw std::domain_error("radiation pattern is identically zero");
  pat.power_db.resize(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      const double p = pat.power(r, c);
      pat.power_db(r, c) = p == peak ? 0.0 : (p > 0.0 ? std::max(kPowerFloorDb, 10.0 * std::log10(p / peak))
                                                      : kPowerFloorDb);
    }
  }
  return pat;
}

RadiationPattern compute_pattern(const ArrayGeometry& geom, BasisIndex bits, double alpha,
                                 const PatternOptions& options) {
  return compute_pattern(geom, build_excitations(geom, bits, alpha).v_actual, options);
}

Direction find_peak(const RadiationPattern& pattern) {
  if (pattern.power.size() == 0) throw std::invalid_argument("empty pattern");
  Index best_r = 0, best_c = 0;
  double best = -1.0;
  for (Index r = 0; r < pattern.power.rows(); ++r) {
    for (Index c = 0; c < pattern.power.cols(); ++c) {
      if (pattern.power(r, c) > best) {
        best = pattern.power(r, c);
        best_r = r;
        best_c = c;
      }
    }
  }
  Direction d{pattern.theta_deg[static_cast<std::size_t>(best_r)],
              pattern.phi_deg[static_cast<std::size_t>(best_c)]};
  if (d.theta_deg == 0.0) d.phi_deg = 0.0;
  return d;
}

double pointing_error(Direction target, Direction actual) {
  auto unit = [](Direction d) {
    const double th = deg_to_rad(d.theta_deg);
    const double ph = deg_to_rad(d.phi_deg);
    return Eigen::Vector3d(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
  };
  const double dot = std::clamp(unit(target).dot(unit(actual)), -1.0, 1.0);
  return rad_to_deg(std::acos(dot));
}

PointingReport evaluate_pointing(const ArrayGeometry& geom, BasisIndex bits, double alpha,
                                 const PatternOptions& options) {
  const auto pattern = compute_pattern(geom, bits, alpha, options);
  PointingReport rep;
  rep.target = geom.scenario.target;
  rep.actual = find_peak(pattern);
  rep.epsilon_deg = pointing_error(rep.target, rep.actual);
  return rep;
}

void write_pattern_csv(std::ostream& out, const RadiationPattern& pattern) {
  out << "theta_deg,phi_deg,power_db\n";
  std::ostringstream line;
  line.precision(10);
  for (std::size_t r = 0; r < pattern.theta_deg.size(); ++r) {
    for (std::size_t c = 0; c < pattern.phi_deg.size(); ++c) {
      line.str({});
      line << pattern.theta_deg[r] << ',' << pattern.phi_deg[c] << ','
           << pattern.power_db(static_cast<Index>(r), static_cast<Index>(c)) << '\n';
      out << line.str();
    }
  }
}

void write_pattern_pgm(std::ostream& out, const RadiationPattern& pattern, double floor_db) {
  if (!(floor_db < 0.0)) throw std::invalid_argument("pgm floor must be negative");
  const auto rows = pattern.power_db.rows();
  const auto cols = pattern.power_db.cols();
  out << "P2\n" << cols << ' ' << rows << "\n255\n";
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      const double db = std::max(pattern.power_db(r, c), floor_db);
      const auto level = static_cast<int>(std::lround(255.0 * (db - floor_db) / -floor_db));
      out << level << (c + 1 == cols ? '\n' : ' ');
    }
  }
}

}  // namespace risq
