#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace risq {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, SI exact
inline constexpr double kPi = 3.14159265358979323846;

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// A propagation direction in degrees: polar angle from broadside, azimuth.
struct Direction {
  double theta_deg = 0.0;
  double phi_deg = 0.0;
};

struct ScenarioConfig {
  double frequency_hz = 30e9;
  double element_spacing_m = 5e-3;
  std::size_t rows = 5;  // M
  std::size_t cols = 5;  // N
  Direction incident{60.0, 30.0};
  Direction target{15.0, 100.0};
};

// Throws ValidationError naming the first offending field.
void validate(const ScenarioConfig& cfg);

// Planar uniform grid. Element i sits at row i / cols, column i % cols
// (row-major), with x = row * pitch and y = col * pitch; element 0 is the
// origin. Every bitstring, J matrix and excitation vector uses this order.
struct ArrayGeometry {
  ScenarioConfig scenario;
  double wavelength_m = 0.0;
  double wavenumber = 0.0;  // k = 2 pi / lambda, rad/m
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> phase_in;     // k (x sin(th_i) cos(ph_i) + y sin(th_i) sin(ph_i))
  std::vector<double> phase_out;    // same projection for the target direction
  std::vector<double> ideal_phase;  // phase_out - phase_in
  Eigen::MatrixXd distance;         // Euclidean d_ij

  std::size_t size() const { return x.size(); }
};

ArrayGeometry build_geometry(const ScenarioConfig& cfg);

// Phase projection k (x sin th cos ph + y sin th sin ph) of a direction onto
// the array plane at (x, y).
double projected_phase(double wavenumber, double x, double y, Direction dir);

// Delta phi_ij = Phi_i - Phi_j. Throws std::out_of_range on a bad index.
double phase_difference(const ArrayGeometry& geom, std::size_t i, std::size_t j);

}  // namespace risq
