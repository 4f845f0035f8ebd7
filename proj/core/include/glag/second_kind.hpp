// Laguerre functions of the second kind Fhat_n: the minimal solution of the
// Laguerre recurrence off [0, inf).  Forward recurrence is useless here (the
// polynomial solution grows like e^{+2 sqrt(-zn)} against e^{-2 sqrt(-zn)}),
// so ratios come from the backward continued fraction and values from ratio
// products anchored at Fhat_0.
#ifndef GLAG_SECOND_KIND_HPP
#define GLAG_SECOND_KIND_HPP

#include <complex>
#include <vector>

#include "glag/complex_point.hpp"
#include "glag/scaled.hpp"

namespace glag {

// Fhat_0(c) = Gamma(alpha+1) U(1, 1-alpha, -c) > 0 for c < 0.
LogScaled f0_second_kind(double alpha, double c, double tol = 1e-12);

// Asymptotic estimate of r_{n_start} used to start the backward sweep,
// r_m ~ -(m+1) + sqrt(-z(m+1)) + (2z - 2 alpha + 1)/4 (three-term ratio form).
struct TailSeed {
    int n_start;
    std::complex<double> value;
    int order; // number of expansion terms behind the estimate
};
TailSeed tail_seed(int n_start, double alpha, std::complex<double> z);

// r_n(z) = Fhat_{n+1}/Fhat_n via r_{k-1} = gamma_k / (z - beta_k - r_k),
// seeded at depth n_start and swept down; the depth doubles until two
// successive sweeps agree to tol on every requested index.
// Throws convergence_error if agreement is not reached by n_start = 2^18.
std::vector<std::complex<double>> ratio_r_sweep(int nmax, double alpha, const ComplexPoint& z,
                                                double tol);
std::complex<double> ratio_r_cf(int n, double alpha, const ComplexPoint& z, double tol);

// Fhat_n(c) = Fhat_0(c) * prod_{k<n} r_k(c), accumulated in log scale.
LogScaled eval_second_kind(int n, double alpha, double c, double tol = 1e-13);
std::vector<LogScaled> eval_second_kind_seq(int nmax, double alpha, double c,
                                            double tol = 1e-13);

// Direct tanh-sinh integration of int_0^inf Lhat_n(t) t^alpha e^{-t}/(t-c) dt.
// Verification oracle only; n <= 30 (the cancellation inside the integral
// grows like e^{2 sqrt(-cn)} and double precision runs out beyond that).
double second_kind_quadrature_oracle(int n, double alpha, double c, double tol);

// Expansion coefficients e_0 = 1, e_1, e_2 of the large-n form of Fhat_n.
std::complex<double> asymp_e_coeff(int j, double alpha, std::complex<double> z);

// Large-n approximation of Fhat_n(z), truncated after e_order:
//   (-1)^n sqrt(pi) (-z)^{a/2-1/4} e^{-z/2 - 2 s} Gamma(n+a+1) (n+1)^{-a/2-1/4}
//     * [e_0 + e_1/s + e_2/s^2],  s = sqrt(-z(n+1)).
// The expansion variable is sqrt(-z(n+1)) -- the natural Bessel argument of
// the Watson-lemma derivation; with s = sqrt(-zn) instead, e_1 would pick up
// an extra additive z.
LogComplex asymp_second_kind(int n, double alpha, const ComplexPoint& z, int order);

// Taylor coefficients d_m of f(tau) = e^{z mu(tau)} (tau/(1-e^{-tau}))^{1-alpha},
// mu(tau) = 1/tau - 1/(e^tau - 1) - 1/2, hardcoded through d_3.
struct WatsonExpansion {
    double alpha;
    int M = 4; // truncation; M > 1 - alpha holds for every alpha > -1 at M = 4
    std::complex<double> d(int m, std::complex<double> z) const;
    double d(int m, double z) const { return this->d(m, std::complex<double>(z, 0.0)).real(); }
};
WatsonExpansion watson_d_coeffs(double alpha);

// Asymptotic sequence phi_m(n, alpha, z) = (2 e^{w/2}/n!) (w/(n+1))^{(m+a)/2}
//   K_{m+a}(2 sqrt((n+1) w)) with w = z e^{+-pi i} per the branch rule.
LogComplex phi_m(int m, int n, double alpha, const ComplexPoint& z);

} // namespace glag

#endif
