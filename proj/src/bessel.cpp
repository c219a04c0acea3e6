// J0/Y0 via a Chebyshev expansion on [0, 18] and the Hankel asymptotic
// expansion beyond. The split point is chosen so the asymptotic series
// reaches double precision at optimal truncation (smallest term ~ e^{-2x}).

#include "risadapt/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace risadapt {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kTwoOverPi = 0.63661977236758134308;
constexpr double kRegionSplit = 18.0;

// Coefficients for f(t) = J0(x) with t = x^2/162 - 1, x in [0, 18].
constexpr double kJ0Cheb[] = {
    0.0081601613093390441940,   -0.12035574526359337871,
    0.041961504698067700597,    -0.065475086204324477498,
    0.14094949317094705705,     -0.0060585512668191223681,
    0.083490478793521932109,    -0.21446125486848067402,
    0.18613183714603441214,     -0.092347329506025440563,
    0.031097233572553735541,    -0.0077420101043661381816,
    0.0015007406994353538643,   -0.00023459086546034526888,
    0.000030336586071352858384, -3.3095730361267016458e-6,
    3.0937121378000594059e-7,   -2.5096146291972686794e-8,
    1.7854959068617875642e-9,   -1.1242111815671868300e-10,
    6.3131462771167494385e-12,  -3.1834142213800583335e-13,
    1.4500405158599141902e-14,  -5.9980287033984941369e-16,
    2.2638050641682505666e-17,  -7.8294019193088537735e-19,
};

// Coefficients for the regular part of Y0, i.e.
// Y0(x) - (2/pi)(ln(x/2) + gamma) J0(x), same variable t as above.
constexpr double kY0RegCheb[] = {
    0.056261941430229176010,    -0.027458857148978886390,
    0.048062738402142252198,    -0.15295717065162403815,
    -0.096577357465698402705,   -0.15290299515676963903,
    0.16453633174496041551,     0.11133881513952841636,
    -0.20342361200309887105,    0.12658311006950863255,
    -0.048115752777508824464,   0.012972971824663579693,
    -0.0026662095585494806373,  0.00043633172600204448249,
    -0.000058585644512655442891, 6.5976478803760681089e-6,
    -6.3390665503384217486e-7,  5.2680648594292088047e-8,
    -3.8297641507837977117e-9,  2.4587582088920769244e-10,
    -1.4054441588176040769e-11, 7.2032257810527708330e-13,
    -3.3307402053705750870e-14, 1.3971121946161796048e-15,
    -5.3421923543338825549e-17, 1.8703019571685646273e-18,
};

template <std::size_t N>
double clenshaw(const double (&c)[N], double t) {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = N; k-- > 1;) {
    double b0 = 2.0 * t * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c[0];
}

// H0^(2)(x) for x > kRegionSplit:
//   sqrt(2/(pi x)) * exp(-i(x - pi/4)) * sum_m (-i)^m a_m / x^m
// with a_m = a_{m-1} * -(2m-1)^2 / (8m). Terms are summed until they stop
// shrinking or fall below double precision.
std::complex<double> hankel0_2_asymptotic(double x) {
  std::complex<double> sum(1.0, 0.0);
  std::complex<double> ixp = 1.0;  // (-i)^m
  double a = 1.0;
  double xp = 1.0;
  double prev = 1.0;
  for (int m = 1; m < 40; ++m) {
    a *= -double((2 * m - 1) * (2 * m - 1)) / (8.0 * m);
    xp *= x;
    ixp *= std::complex<double>(0.0, -1.0);
    double mag = std::fabs(a) / xp;
    if (mag >= prev) break;  // past optimal truncation
    sum += ixp * (a / xp);
    prev = mag;
    if (mag < 1e-18) break;
  }
  double chi = x - 0.25 * M_PI;
  double amp = std::sqrt(2.0 / (M_PI * x));
  return amp * std::complex<double>(std::cos(chi), -std::sin(chi)) * sum;
}

}  // namespace

double bessel_j0(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("bessel_j0: non-finite argument");
  x = std::fabs(x);
  if (x <= kRegionSplit) return clenshaw(kJ0Cheb, x * x / 162.0 - 1.0);
  return hankel0_2_asymptotic(x).real();
}

double bessel_y0(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("bessel_y0: non-finite argument");
  if (x <= 0.0) throw std::domain_error("bessel_y0: requires x > 0");
  if (x <= kRegionSplit) {
    double t = x * x / 162.0 - 1.0;
    double j0 = clenshaw(kJ0Cheb, t);
    return clenshaw(kY0RegCheb, t) +
           kTwoOverPi * (std::log(0.5 * x) + kEulerGamma) * j0;
  }
  return -hankel0_2_asymptotic(x).imag();
}

std::pair<double, double> bessel_j0_y0(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("bessel_j0_y0: non-finite argument");
  if (x <= 0.0) throw std::domain_error("bessel_j0_y0: Y0 requires x > 0");
  if (x <= kRegionSplit) {
    double t = x * x / 162.0 - 1.0;
    double j0 = clenshaw(kJ0Cheb, t);
    double y0 = clenshaw(kY0RegCheb, t) +
                kTwoOverPi * (std::log(0.5 * x) + kEulerGamma) * j0;
    return {j0, y0};
  }
  auto h = hankel0_2_asymptotic(x);
  return {h.real(), -h.imag()};
}

std::complex<double> hankel0_2(double x) {
  auto [j0, y0] = bessel_j0_y0(x);
  return {j0, -y0};
}

}  // namespace risadapt
