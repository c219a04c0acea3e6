#pragma once

#include <complex>
#include <utility>

namespace risadapt {

// Bessel functions of the first and second kind, order zero. Accurate to a
// few ulp over (0, 200]; J0 also accepts x = 0.
double bessel_j0(double x);
double bessel_y0(double x);  // throws std::domain_error for x <= 0

// (J0(x), Y0(x)) in one call.
std::pair<double, double> bessel_j0_y0(double x);

// Hankel function of the second kind, order zero: H0^(2)(x) = J0(x) - i Y0(x).
std::complex<double> hankel0_2(double x);

}  // namespace risadapt
