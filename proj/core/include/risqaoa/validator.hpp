#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "risqaoa/geometry.hpp"
#include "risqaoa/ising.hpp"

namespace risq {

// Excitations seen by the far-field validation model. The coupling here is the
// real spherical-wave kernel alpha cos(k d) / d with unit self-coupling; it is
// intentionally not the complex kernel used to build the coupled QUBO.
struct ExcitationSet {
  Eigen::VectorXcd v_ideal;   // exp(j (Phi_RIS,i - phi_in,i)), Phi_RIS in {0, pi}
  Eigen::VectorXcd v_actual;  // coupling * v_ideal
  Eigen::MatrixXd coupling;
};

Eigen::MatrixXd validation_coupling(const ArrayGeometry& geom, double alpha);
ExcitationSet build_excitations(const ArrayGeometry& geom, BasisIndex bits, double alpha);

struct PatternGrid {
  double theta_step_deg = 0.5;  // theta spans [0, 90] inclusive
  double phi_step_deg = 0.5;    // phi spans [0, 360)
};

struct PatternOptions {
  PatternGrid grid;
  double element_exponent = 2.0;  // P = |AF|^2 cos^e(theta)
};

// Floor applied to zero-power cells so power_db stays finite.
inline constexpr double kPowerFloorDb = -300.0;

struct RadiationPattern {
  std::vector<double> theta_deg;  // rows
  std::vector<double> phi_deg;    // columns
  Eigen::MatrixXd power;          // linear, arbitrary scale
  Eigen::MatrixXd power_db;       // 10 log10(power / max), peak exactly 0
};

struct PointingReport {
  Direction target;
  Direction actual;
  double epsilon_deg = 0.0;
};

// sum_i v_i exp(j k (x_i sin th cos ph + y_i sin th sin ph)), element order.
std::complex<double> array_factor(const ArrayGeometry& geom, const Eigen::VectorXcd& excitations,
                                  Direction dir);

// Throws ValidationError for an empty or non-positive grid step, and
// std::domain_error when the pattern is identically zero.
RadiationPattern compute_pattern(const ArrayGeometry& geom, const Eigen::VectorXcd& excitations,
                                 const PatternOptions& options = {});
RadiationPattern compute_pattern(const ArrayGeometry& geom, BasisIndex bits, double alpha,
                                 const PatternOptions& options = {});

// Grid argmax; ties go to the smallest theta then the smallest phi. At
// theta = 0 the azimuth is reported as 0.
Direction find_peak(const RadiationPattern& pattern);

// Great-circle angle between two directions, degrees in [0, 180].
double pointing_error(Direction target, Direction actual);

PointingReport evaluate_pointing(const ArrayGeometry& geom, BasisIndex bits, double alpha,
                                 const PatternOptions& options = {});

// CSV: theta_deg,phi_deg,power_db, theta-major.
void write_pattern_csv(std::ostream& out, const RadiationPattern& pattern);

// Plain P2 graymap, 8-bit, one row per theta, one column per phi; black at or
// below floor_db, white at the 0 dB peak.
void write_pattern_pgm(std::ostream& out, const RadiationPattern& pattern, double floor_db = -40.0);

}  // namespace risq
