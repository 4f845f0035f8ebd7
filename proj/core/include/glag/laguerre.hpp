// Classical monic Laguerre polynomials: exact evaluation by the three-term
// recurrence, norms, ratios, and the classical large-n approximations
// (Perron, Fejer, Mehler-Heine).
#ifndef GLAG_LAGUERRE_HPP
#define GLAG_LAGUERRE_HPP

#include <complex>
#include <vector>

#include "glag/complex_point.hpp"
#include "glag/scaled.hpp"

namespace glag {

struct RecurrenceCoeffs {
    double beta;
    double gamma;
};

// beta_n = 2n + alpha + 1, gamma_n = n (n + alpha) in
//   x Lhat_n = Lhat_{n+1} + beta_n Lhat_n + gamma_n Lhat_{n-1}.
RecurrenceCoeffs laguerre_recurrence_coeffs(int n, double alpha);

// Lhat_0..Lhat_n at a fixed point, kept in phase/log-magnitude form so that
// degrees in the thousands stay representable.  Real z is stored with phase
// +-1, so real_at() is exact.
struct LaguerreSequence {
    double alpha = 0.0;
    std::complex<double> z{0.0, 0.0};
    std::vector<LogComplex> values;

    int degree() const { return (int)values.size() - 1; }
    const LogComplex& operator[](int k) const { return values[(size_t)k]; }
    LogScaled real_at(int k) const { return values[(size_t)k].real_part(); }
};

// Forward recurrence; stable for the polynomial (dominant) solution.
LaguerreSequence eval_monic_laguerre(int n, double alpha, std::complex<double> z);

// Lhat_n = (-1)^n n! L_n, so standard <-> monic is a sign/scale flip.
LogComplex monic_to_standard(int n, const LogComplex& monic_value);
LogComplex standard_to_monic(int n, const LogComplex& standard_value);
LogScaled monic_to_standard(int n, const LogScaled& monic_value);
LogScaled standard_to_monic(int n, const LogScaled& standard_value);

// ||Lhat_n||^2 = Gamma(n+alpha+1) Gamma(n+1).
LogScaled monic_norm_sq(int n, double alpha);

// pi_n(z) = Lhat_{n+1}(z)/Lhat_n(z), z off [0, inf) so the denominator has no
// zeros.  Throws degenerate_error if the denominator underflows anyway.
std::complex<double> ratio_pi(int n, double alpha, const ComplexPoint& z);

// Three-term form of the large-n ratio: pi_n(z) ~ -(n+1) - sqrt(-z(n+1))
// + (2z - 2 alpha + 1)/4, remainder O(n^{-1/2}).
std::complex<double> ratio_pi_asymptotic(int n, double alpha, std::complex<double> z);

// Leading-order Perron approximation of the monic polynomial,
//   Lhat_n(z) ~ (-1)^n n!/(2 sqrt(pi)) e^{z/2} (-z)^{-a/2-1/4} n^{a/2-1/4} e^{2 sqrt(-nz)},
// with the O(n^{-1/2}) remainder scale reported alongside.
struct PerronApprox {
    LogComplex value;
    double rel_remainder; // n^{-1/2}, the order of the neglected term
};
PerronApprox perron_monic(int n, double alpha, const ComplexPoint& z);

// Phase theta_n^a(x) = 2 sqrt(nx) - (a/2 + 1/4) pi of the oscillatory regime.
double fejer_theta(int n, double alpha, double x);

// Fejer approximation on compacts of (0, inf):
//   Lhat_n(x) ~ (-1)^n n! n^{a/2-1/4} e^{x/2} cos(theta) / (sqrt(pi) x^{a/2+1/4}).
LogScaled fejer_monic(int n, double alpha, double x);

// Entire function Phi_a(z) = sum_k (-z)^k / (k! Gamma(k+a+1)) = z^{-a/2} J_a(2 sqrt z);
// the Mehler-Heine limit function, free of branch issues at z = 0.
std::complex<double> bessel_limit(double alpha, std::complex<double> z);

// Scaled polynomial L_n^{(a)}(z/n)/n^a next to its n -> inf limit Phi_a(z).
struct MehlerHeineLaguerre {
    std::complex<double> scaled;
    std::complex<double> limit;
};
MehlerHeineLaguerre mehler_heine_laguerre(int n, double alpha, std::complex<double> z);

// Ascending coefficient vector of Lhat_n (exact recurrence on coefficients;
// meant for small n where double coefficients are adequate).
std::vector<double> laguerre_coefficients(int n, double alpha);

} // namespace glag

#endif
