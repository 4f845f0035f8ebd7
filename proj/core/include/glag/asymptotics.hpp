// Large-n formulas for Lambda_n and Qhat_n, and the convergence-order
// estimation harness that validates each expansion against exact evaluation.
//
// Every formula here carries an upper/lower sign pair selected by the mass:
// "upper" applies when N > 0, "lower" when N = 0.  The sign enters each
// expression through the explicit parameter `upper` (+1/-1) so both branches
// share one code path.
#ifndef GLAG_ASYMPTOTICS_HPP
#define GLAG_ASYMPTOTICS_HPP

#include <complex>
#include <optional>
#include <vector>

#include "glag/complex_point.hpp"
#include "glag/geronimus.hpp"
#include "glag/scaled.hpp"

namespace glag {

inline int branch_upper(double N) { return N > 0.0 ? +1 : -1; }

// Lambda_n ~ n +- sqrt(-cn) + (2 alpha - 2c - 1)/4 (upper sign for N > 0).
double lambda_asymptotic(int n, const GeronimusParams& params);
double lambda_asymptotic_signed(int n, double alpha, double c, int upper);

// D_{alpha,c} = e^c (-c)^{-alpha} / (2 pi) and the smallest n at which the
// N D e^{4 sqrt(-cn)} term overtakes the denominator of Lambda_n, i.e. where
// finite-n behavior switches from the N = 0-like to the N > 0 regime.
struct CrossoverInfo {
    double D;
    std::optional<long> n_star; // empty for N = 0 (no crossover)
};
CrossoverInfo crossover(const GeronimusParams& params);

// Outer strong asymptotics, z off [0, inf):
//   Qhat_n(z) ~ (-1)^n n!/(2 sqrt(pi)) e^{z/2 + 2 sqrt(-nz)} (-z)^{-a/2-1/4}
//               n^{a/2-3/4} (sqrt(-z) -+ sqrt(-c)).
// The prefactor vanishes at z = c on the N > 0 branch (the mass point pins a
// zero near c), so the leading order degenerates there.
LogComplex strong_outer_Q(int n, const GeronimusParams& params, const ComplexPoint& z);
LogComplex strong_outer_Q_signed(int n, double alpha, double c, int upper,
                                 const ComplexPoint& z);

// Two-term ratio Qhat_n/Lhat_n ~ w/sqrt(n) - w^2/(2n), w = sqrt(-z) -+ sqrt(-c);
// remainder O(n^{-3/2}).
std::complex<double> relative_Q(int n, const GeronimusParams& params, const ComplexPoint& z);
std::complex<double> relative_Q_signed(int n, double alpha, double c, int upper,
                                       const ComplexPoint& z);

// Oscillatory regime on compacts of (0, inf):
//   Qhat_n(x) ~ prefactor * [sqrt(x) sin(theta) +- sqrt(-c) cos(theta)],
//   prefactor = (-1)^{n+1} n! n^{a/2-3/4} e^{x/2} / (sqrt(pi) x^{a/2+1/4}).
// The pieces are exposed separately: the O(n^{-1/2}) remainder lives inside
// the bracket, so error measurement must normalize by the envelope, not the
// (vanishing) pointwise value.
struct InnerApprox {
    LogScaled value;          // prefactor * bracket
    LogScaled prefactor;      // signed envelope scale
    double bracket;           // sqrt(x) sin(theta) +- sqrt(-c) cos(theta)
    double theta;
    double envelope;          // sqrt(x - c), the bracket amplitude
};
InnerApprox inner_Q(int n, const GeronimusParams& params, double x);
InnerApprox inner_Q_signed(int n, double alpha, double c, int upper, double x);

// Mehler-Heine: (-1)^n/n! Qhat_n(z/n)/n^{a-1/2} -> -+ sqrt(-c) z^{-a/2} J_a(2 sqrt z).
// (The scaled limit function z^{-a/2} J_a is entire; see bessel_limit.)
struct MehlerHeineQ {
    std::complex<double> scaled;
    std::complex<double> limit;
};
MehlerHeineQ mehler_heine_Q(int n, const LambdaTable& table, std::complex<double> z);
MehlerHeineQ mehler_heine_Q(int n, const GeronimusParams& params, std::complex<double> z);

// Multiplicative profiles of the perturbed recurrence coefficients:
//   beta~_n/beta_n ~ 1 - 1/(2n) -+ sqrt(-c)/(4 n^{3/2}),
//   gamma~_n/gamma_{n-1} ~ 1 + 1/n -+ sqrt(-c)/(2 n^{3/2}).
struct CoeffRatios {
    double beta_ratio;
    double gamma_ratio;
};
CoeffRatios recurrence_coeff_asymptotic(int n, const GeronimusParams& params);
CoeffRatios recurrence_coeff_asymptotic_signed(int n, double c, int upper);

// Least-squares order fit of an error sequence over an n-grid:
// p_hat is the fitted decay exponent of err ~ C n^{-p}.
struct OrderFit {
    std::vector<double> n_grid;
    std::vector<double> errors;
    double p_hat;
    double r2;
    bool monotone; // errors nonincreasing over the grid; fit unreliable if not
};
OrderFit estimate_order(const std::vector<double>& n_grid, const std::vector<double>& errors);

// Default dyadic grid n = base 2^k, k = 0..(count-1).
std::vector<int> dyadic_grid(int base, int count);

} // namespace glag

#endif
