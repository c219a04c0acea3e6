#include "risadapt/physics.hpp"

#include <cmath>
#include <stdexcept>

#include "risadapt/errors.hpp"

namespace risadapt {

FrequencyGrid FrequencyGrid::uniform(double f_min, double f_max, std::size_t n,
                                     double f_target) {
  if (!(f_min > 0.0) || !(f_max > f_min) || n < 2)
    throw std::invalid_argument("FrequencyGrid::uniform: need 0 < f_min < f_max, n >= 2");
  if (!(f_target > f_min) || !(f_target < f_max))
    throw std::invalid_argument("FrequencyGrid::uniform: f_target must lie inside (f_min, f_max)");
  FrequencyGrid g;
  g.points.resize(n);
  double step = (f_max - f_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    g.points[i] = f_min + step * static_cast<double>(i);
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::fabs(g.points[i] - f_target) < std::fabs(g.points[best] - f_target))
      best = i;
  g.target_index = best;
  g.validate();
  return g;
}

void FrequencyGrid::validate() const {
  if (points.size() < 1) throw std::invalid_argument("FrequencyGrid: empty");
  if (target_index >= points.size())
    throw std::invalid_argument("FrequencyGrid: target_index out of range");
  double prev = 0.0;
  for (double f : points) {
    if (!(f > prev) || !std::isfinite(f))
      throw std::invalid_argument("FrequencyGrid: points must be finite, positive, strictly increasing");
    prev = f;
  }
}

Complex inverse_polarizability(const DipoleProperties& props, double f) {
  if (!std::isfinite(f) || !std::isfinite(props.f_res) ||
      !std::isfinite(props.chi) || !std::isfinite(props.gamma_loss))
    throw std::invalid_argument("inverse_polarizability: non-finite input");
  if (!(f > 0.0)) throw std::invalid_argument("inverse_polarizability: f must be > 0");
  if (!(props.chi > 0.0)) throw std::invalid_argument("inverse_polarizability: chi must be > 0");
  double re = (props.f_res * props.f_res - f * f) / props.chi;
  double im = props.gamma_loss * f / props.chi + 0.25;
  return {re, im};
}

Complex greens_2d(Point2 a, Point2 b, double f) {
  if (!(f > 0.0) || !std::isfinite(f))
    throw std::invalid_argument("greens_2d: f must be finite and > 0");
  double d = distance(a, b);
  if (!(d >= kMinSeparation))
    throw SelfInteractionError("greens_2d: points closer than minimum separation");
  Complex h = hankel0_2(2.0 * M_PI * f * d);
  return Complex(0.0, 0.25) * h;  // = Y0/4 + i J0/4
}

Eigen::MatrixXcd assemble_interaction_matrix(std::span<const Dipole> dipoles,
                                             double f) {
  const auto n = static_cast<Eigen::Index>(dipoles.size());
  if (n < 2) throw std::invalid_argument("assemble_interaction_matrix: need at least 2 dipoles");
  Eigen::MatrixXcd w(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    w(i, i) = inverse_polarizability(dipoles[i].properties, f);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Complex g = -greens_2d(dipoles[i].position, dipoles[j].position, f);
      w(i, j) = g;
      w(j, i) = g;
    }
  }
  return w;
}

namespace {

// Shared singularity guard: partial-pivot LU leaves |U_ii| on the diagonal;
// a collapse of the smallest pivot signals a numerically singular W.
void check_factorization(const Eigen::PartialPivLU<Eigen::MatrixXcd>& lu) {
  const auto& diag = lu.matrixLU().diagonal();
  double max_p = 0.0, min_p = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    double m = std::abs(diag(i));
    max_p = std::max(max_p, m);
    min_p = std::min(min_p, m);
  }
  if (!(max_p > 0.0) || !std::isfinite(max_p) || min_p <= max_p * 1e-14)
    throw DegenerateSceneError("interaction matrix is numerically singular");
}

}  // namespace

ChannelSpectrum transmission_spectrum(std::span<const Dipole> dipoles,
                                      const FrequencyGrid& grid,
                                      std::size_t tx_index,
                                      std::size_t rx_index) {
  grid.validate();
  if (tx_index == rx_index)
    throw std::invalid_argument("transmission_spectrum: tx and rx must differ");
  if (tx_index >= dipoles.size() || rx_index >= dipoles.size())
    throw std::invalid_argument("transmission_spectrum: antenna index out of range");
  ChannelSpectrum spectrum;
  spectrum.values.resize(grid.points.size());
  Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dipoles.size()));
  unit(static_cast<Eigen::Index>(tx_index)) = 1.0;
  for (std::size_t k = 0; k < grid.points.size(); ++k) {
    Eigen::MatrixXcd w = assemble_interaction_matrix(dipoles, grid.points[k]);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(w);
    check_factorization(lu);
    Eigen::VectorXcd col = lu.solve(unit);
    Complex h = col(static_cast<Eigen::Index>(rx_index));
    if (!std::isfinite(h.real()) || !std::isfinite(h.imag()))
      throw DegenerateSceneError("transmission_spectrum: non-finite channel value");
    spectrum.values[k] = h;
  }
  return spectrum;
}

double channel_dispersion(std::span<const Complex> samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("channel_dispersion: need at least 2 samples");
  Complex mean = 0.0;
  for (const Complex& h : samples) mean += h;
  mean /= static_cast<double>(samples.size());
  double acc = 0.0;
  for (const Complex& h : samples) acc += std::norm(h - mean);
  return std::sqrt(acc / static_cast<double>(samples.size()));
}

}  // namespace risadapt
