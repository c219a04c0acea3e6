#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "risadapt/bessel.hpp"

namespace risadapt {

using Complex = std::complex<double>;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline double distance(Point2 a, Point2 b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

enum class DipoleKind { antenna, wall, perturber, ris };

// Lorentzian dipole response parameters. Natural units: the central
// operating frequency is 1 and the wavelength at f = 1 is 1 length unit.
struct DipoleProperties {
  double f_res = 1.0;      // resonance frequency
  double chi = 1.0;        // oscillator strength, > 0
  double gamma_loss = 0.0; // absorption loss factor, >= 0
};

struct Dipole {
  Point2 position;
  DipoleProperties properties;
  DipoleKind kind = DipoleKind::wall;
};

// Dipoles closer than this are treated as coincident.
inline constexpr double kMinSeparation = 1e-6;

// Ordered frequency grid with a designated objective frequency.
struct FrequencyGrid {
  std::vector<double> points;       // strictly increasing, all > 0
  std::size_t target_index = 0;

  // n points uniform on [f_min, f_max]; target_index picks the grid point
  // nearest f_target (which must lie strictly inside the band).
  static FrequencyGrid uniform(double f_min, double f_max, std::size_t n,
                               double f_target);
  void validate() const;  // throws std::invalid_argument
  double target_frequency() const { return points.at(target_index); }
  std::size_t size() const { return points.size(); }
};

// Complex transmission coefficient per grid point.
struct ChannelSpectrum {
  std::vector<Complex> values;
};

// 1/alpha(f) = (f_res^2 - f^2)/chi + i (Gamma_L f / chi + 1/4).
// The 1/4 is the radiation-damping floor of the 2D kernel: Im(1/alpha) >= 1/4
// means a lossless dipole cannot amplify.
Complex inverse_polarizability(const DipoleProperties& props, double f);

// 2D scalar Green's function G(a,b,f) = (i/4) H0^(2)(k d), k = 2*pi*f,
// d = |a-b|. Depends on the positions only through d.
// Throws SelfInteractionError when d < kMinSeparation.
Complex greens_2d(Point2 a, Point2 b, double f);

// N x N coupled-dipole interaction matrix:
//   W_ii = 1/alpha_i(f),  W_ij = -G(r_i, r_j, f)  (i != j).
// Symmetric by construction. Requires N >= 2 pairwise-distinct dipoles.
Eigen::MatrixXcd assemble_interaction_matrix(std::span<const Dipole> dipoles,
                                             double f);

// Transmission H(f) = [W(f)^{-1}]_{rx,tx} per grid point, computed with a
// dense partial-pivot LU solve per frequency (never a full inverse).
// Throws DegenerateSceneError when W is numerically singular.
ChannelSpectrum transmission_spectrum(std::span<const Dipole> dipoles,
                                      const FrequencyGrid& grid,
                                      std::size_t tx_index,
                                      std::size_t rx_index);

// Standard deviation of complex samples: sqrt(mean |h - mean(h)|^2).
// Requires at least 2 samples.
double channel_dispersion(std::span<const Complex> samples);

}  // namespace risadapt
