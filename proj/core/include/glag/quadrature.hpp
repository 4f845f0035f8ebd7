// Adaptive tanh-sinh quadrature.  Verification-oracle workhorse: never on a
// hot path, tuned for accuracy.  Sums run in 80-bit long double because the
// oracle comparisons downstream (orthogonality Gram matrices, second-kind
// integrals) cancel up to ~9 digits before converging.
#ifndef GLAG_QUADRATURE_HPP
#define GLAG_QUADRATURE_HPP

#include <functional>

namespace glag {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0; // absolute
    int levels = 0;
    long evaluations = 0;
};

// Integral over (0, 1) via the tanh-sinh transformation u = (1 + tanh((pi/2) sinh t))/2.
// Stops when the level-to-level difference drops below tol (absolute).
QuadResult tanh_sinh_01(const std::function<long double(long double)>& f, double tol,
                        int max_levels = 14);

// Integral over (0, inf) through the map t = u/(1-u).  The integrand must
// decay fast enough that f(t)/(1-u)^2 underflows gracefully for u near 1
// (write exponential factors in log form inside f when t can be large).
QuadResult integrate_semi_infinite(const std::function<long double(long double)>& f, double tol,
                                   int max_levels = 14);

// Adaptive integral over [0, inf) with estimated absolute error <= tol.
// Throws convergence_error (carrying the achieved estimate) on failure.
double quadrature(const std::function<double(double)>& f, double tol);

// Gauss-Laguerre rule for the weight x^alpha e^{-x} on [0, inf):
// Golub-Welsch on the Laguerre Jacobi matrix; exact for degree <= 2m - 1.
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLaguerreRule gauss_laguerre(double alpha, int m);

} // namespace glag

#endif
