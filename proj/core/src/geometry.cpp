#include "risqaoa/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "risqaoa/errors.hpp"

namespace risq {
namespace {

void check_direction(const Direction& dir, const std::string& prefix) {
  if (!std::isfinite(dir.theta_deg) || dir.theta_deg < 0.0 || dir.theta_deg > 90.0) {
    throw ValidationError("polar angle must lie in [0, 90] degrees, got " +
                              std::to_string(dir.theta_deg),
                          prefix + "_theta_deg");
  }
  if (!std::isfinite(dir.phi_deg) || dir.phi_deg < 0.0 || dir.phi_deg >= 360.0) {
    throw ValidationError("azimuth must lie in [0, 360) degrees, got " +
                              std::to_string(dir.phi_deg),
                          prefix + "_phi_deg");
  }
}

}  // namespace

void validate(const ScenarioConfig& cfg) {
  if (!(cfg.frequency_hz > 0.0) || !std::isfinite(cfg.frequency_hz)) {
    throw ValidationError("must be positive", "frequency_hz");
  }
  if (!(cfg.element_spacing_m > 0.0) || !std::isfinite(cfg.element_spacing_m)) {
    throw ValidationError("must be positive", "element_spacing_m");
  }
  if (cfg.rows < 1) throw ValidationError("must be at least 1", "rows");
  if (cfg.cols < 1) throw ValidationError("must be at least 1", "cols");
  check_direction(cfg.incident, "incident");
  check_direction(cfg.target, "target");
}

double projected_phase(double wavenumber, double x, double y, Direction dir) {
  const double th = deg_to_rad(dir.theta_deg);
  const double ph = deg_to_rad(dir.phi_deg);
  return wavenumber * (x * std::sin(th) * std::cos(ph) + y * std::sin(th) * std::sin(ph));
}

ArrayGeometry build_geometry(const ScenarioConfig& cfg) {
  validate(cfg);

  ArrayGeometry g;
  g.scenario = cfg;
  g.wavelength_m = kSpeedOfLight / cfg.frequency_hz;
  g.wavenumber = 2.0 * kPi / g.wavelength_m;

  const std::size_t n = cfg.rows * cfg.cols;
  g.x.resize(n);
  g.y.resize(n);
  g.phase_in.resize(n);
  g.phase_out.resize(n);
  g.ideal_phase.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.x[i] = static_cast<double>(i / cfg.cols) * cfg.element_spacing_m;
    g.y[i] = static_cast<double>(i % cfg.cols) * cfg.element_spacing_m;
    g.phase_in[i] = projected_phase(g.wavenumber, g.x[i], g.y[i], cfg.incident);
    g.phase_out[i] = projected_phase(g.wavenumber, g.x[i], g.y[i], cfg.target);
    g.ideal_phase[i] = g.phase_out[i] - g.phase_in[i];
  }

  g.distance = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::hypot(g.x[i] - g.x[j], g.y[i] - g.y[j]);
      g.distance(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = d;
      g.distance(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = d;
    }
  }
  return g;
}

double phase_difference(const ArrayGeometry& geom, std::size_t i, std::size_t j) {
  if (i >= geom.size() || j >= geom.size()) {
    throw std::out_of_range("element index out of range");
  }
  return geom.ideal_phase[i] - geom.ideal_phase[j];
}

}  // namespace risq
