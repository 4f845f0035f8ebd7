// Background special functions: log-Gamma, Bessel J and K, the Kummer U
// function of the second kind, and truncated/terminating 2F2 series.
#ifndef GLAG_SPECIAL_HPP
#define GLAG_SPECIAL_HPP

#include <complex>

#include "glag/scaled.hpp"

namespace glag {

// ln Gamma(x) for x > 0.  Lanczos (g = 7) below 20, Stirling with eight
// Bernoulli correction terms above.
double log_gamma(double x);

// Gamma(x) as a log-scaled value, x > 0.
LogScaled gamma_scaled(double x);

// Bessel function of the first kind, nu > -1, x >= 0.
// Power series (long double) up to x = 18, Hankel expansion beyond.
double bessel_j(double nu, double x);

// Modified Bessel function K_nu(x), x > 0, returned log-scaled (K underflows
// double already at x ~ 700).  Integral representation
//   K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt     [DLMF 10.32.9]
// integrated by a doubling trapezoid rule after factoring out the peak.
LogScaled bessel_k(double nu, double x);

// K_nu of a complex argument with Re x > 0, same integral, log-scaled.
LogComplex bessel_k_complex(double nu, std::complex<double> x);

// Coefficient a_l(nu) of the large-argument expansion [DLMF 10.40.2]:
// a_0 = 1, a_l = (4nu^2-1)(4nu^2-9)...(4nu^2-(2l-1)^2) / (8^l l!).
double bessel_k_asym_coeff(double nu, int l);

// sqrt(pi/(2x)) e^{-x} sum_{l<L} a_l(nu)/x^l.
double bessel_k_asymptotic(double nu, double x, int L);

// Kummer U(a, b, x) for a > 0, x > 0, via the Laplace integral
//   U(a,b,x) = 1/Gamma(a) int_0^inf e^{-xt} t^{a-1} (1+t)^{b-a-1} dt
// [DLMF 13.4.4], evaluated on a log scale so a up to ~1000 is routine.
LogScaled kummer_u(double a, double b, double x, double tol = 1e-13);

// Truncated generalized hypergeometric sum
//   sum_{k<K} (a1)_k (a2)_k / ((b1)_k (b2)_k) z^k / k!.
// If a1 is a nonpositive integer the series terminates there and nterms may
// be -1; otherwise nterms must be given.  Throws degenerate_error when a
// denominator Pochhammer vanishes before the series has terminated.
std::complex<double> pfq_2f2(double a1, double a2, double b1, double b2,
                             std::complex<double> z, int nterms = -1);

} // namespace glag

#endif
