// The Geronimus-perturbed Laguerre family Qhat_n: connection coefficients
// Lambda_n, evaluation, the perturbed inner product, recurrence coefficients,
// zeros, and the 2F2/ODE representation.
//
// Measure: x^alpha e^{-x}/(x-c) dx + N delta(x-c) on [0, inf), c < 0, N >= 0.
// Connection formula: Qhat_n = Lhat_n + Lambda_n Lhat_{n-1}.
#ifndef GLAG_GERONIMUS_HPP
#define GLAG_GERONIMUS_HPP

#include <complex>
#include <vector>

#include "glag/scaled.hpp"

namespace glag {

struct GeronimusParams {
    double alpha;
    double c;
    double N;
    GeronimusParams(double alpha_, double c_, double N_);
};

enum class LambdaBranch { n_positive, n_zero };

struct LambdaValue {
    int n;
    double value;
    LambdaBranch branch;
};

// Lambda_1..Lambda_nmax for fixed parameters, computed once and immutable:
// safe to share across threads.  For N > 0,
//   Lambda_n = -Gamma(n+alpha) Gamma(n) / (Lhat_{n-1}(c) Fhat_{n-1}(c)
//              + N Lhat_{n-1}(c)^2) - pi_{n-1}(c),
// all factors held in log scale.  (The monic Casoratian
// Lhat_n Fhat_{n-1} - Lhat_{n-1} Fhat_n = -Gamma(n) Gamma(n+alpha) forces the
// monic normalization and the plus sign in front of N: both are checked
// against Gram orthogonality in the acceptance suite.)  Both addends of the
// denominator are positive, so no cancellation occurs there; the guard below
// only fires for inadmissible inputs.
// For N = 0, Lambda_n = -r_{n-1}(c) directly.
class LambdaTable {
public:
    LambdaTable(const GeronimusParams& params, int nmax, double tol = 1e-13);

    const GeronimusParams& params() const { return params_; }
    int nmax() const { return nmax_; }
    LambdaBranch branch() const { return branch_; }
    double lambda(int n) const; // 1 <= n <= nmax
    LambdaValue lambda_value(int n) const { return {n, lambda(n), branch_}; }

    const std::vector<LogScaled>& laguerre_at_c() const { return lag_c_; }
    const std::vector<LogScaled>& second_kind_at_c() const { return f_c_; }

    // Lambda_n + pi_{n-1}(c) = -Gamma(n+alpha) Gamma(n) / (Lhat Fhat + N Lhat^2),
    // kept in log scale: Qhat_n(c) = Lhat_{n-1}(c) * this quantity, which at
    // large n is exponentially smaller than either connection-formula term
    // and would be lost to cancellation if recovered from lambda(n) itself.
    LogScaled lambda_plus_pi(int n) const;

    // ||Qhat_n||^2 under the perturbed measure: Fhat_0(c) + N at n = 0,
    // Lambda_n Gamma(n) Gamma(n+alpha) for n >= 1.
    LogScaled q_norm_sq(int n) const;

private:
    GeronimusParams params_;
    int nmax_;
    LambdaBranch branch_;
    std::vector<double> lambda_;        // [0] unused
    std::vector<LogScaled> lag_c_;      // Lhat_0..Lhat_nmax at c
    std::vector<LogScaled> f_c_;        // Fhat_0..Fhat_{nmax-1} at c (nmax entries)
    std::vector<LogScaled> lam_pi_;     // Lambda_n + pi_{n-1}(c), [0] unused
};

// One-shot Lambda_n.
LambdaValue lambda_n(int n, const GeronimusParams& params);

// Qhat_n(z) through the connection formula; monic by construction.
LogComplex eval_Q(int n, const LambdaTable& table, std::complex<double> z);
LogComplex eval_Q(int n, const GeronimusParams& params, std::complex<double> z);

// Ascending coefficients of Qhat_n (small n; double precision coefficients).
std::vector<double> q_coefficients(int n, const LambdaTable& table);

// <p, q> under the perturbed measure, for polynomials given by ascending
// coefficient lists.  Exact route: p q = (x-c) s + p(c) q(c) splits the
// integral into a finite Gamma-moment sum plus (Fhat_0(c) + N) p(c) q(c).
// Degrees must satisfy deg p + deg q <= 60.
double inner_product_nu(const std::vector<double>& p, const std::vector<double>& q,
                        const GeronimusParams& params);

struct GramResult {
    int nmax;
    std::vector<std::vector<double>> G; // (nmax+1) x (nmax+1)
    double max_offdiag;                 // max |G_ij| / sqrt(G_ii G_jj), i != j
};
GramResult gram_matrix(int nmax, const GeronimusParams& params);

// Recurrence coefficients of the perturbed family,
//   beta~_n = beta_n + Lambda_n - Lambda_{n+1}   (Lambda_0 = 0),
//   gamma~_n = (Lambda_n / Lambda_{n-1}) gamma_{n-1}  for n >= 2,
//   gamma~_1 = Lambda_1 Gamma(1+alpha) / (Fhat_0(c) + N).
struct PerturbedRecurrence {
    int nmax;
    GeronimusParams params;
    std::vector<double> beta_t;  // beta~_0 .. beta~_nmax
    std::vector<double> gamma_t; // gamma~_1 .. gamma~_nmax
    std::vector<double> lambda;  // Lambda_1 .. Lambda_{nmax+1}

    double beta(int n) const { return beta_t[(size_t)n]; }
    double gamma(int n) const { return gamma_t[(size_t)n - 1]; }
    double lambda_at(int n) const { return lambda[(size_t)n - 1]; }
};
PerturbedRecurrence perturbed_recurrence(int nmax, const GeronimusParams& params);

// |Lambda_{n+1} - Lambda_n + gamma_n/Lambda_n - gamma_{n-1}/Lambda_{n-1} - 2|,
// the nonlinear recursion residual; valid for 2 <= n < table.nmax().
double lambda_recursion_residual(int n, const LambdaTable& table);

// Lambda_{n+1} predicted by the closed-sum recursion
//   -n(n+alpha)/Lambda_n + 2(n-1) + gamma_1/Lambda_1 + Lambda_2.
double lambda_closed_sum(int n, const LambdaTable& table);

// Lambda_1..nmax via the linearized rho recursion, run in log scale from
// rho_0 = 1, rho_1 = Lambda_1.  Forward recursion follows the dominant
// solution, so this route is stable on the N > 0 branch only.
std::vector<double> lambda_via_rho(int nmax, const LambdaTable& table);

// Hypergeometric representation Qhat_n = C_{n,alpha} 2F2(-n, 1+e; alpha+1, e; z),
//   C = (1 - Lambda_n/(n+alpha)) (-1)^n (alpha+1)_n,
//   e = n (n + alpha - Lambda_n) / Lambda_n.
// Degenerate when Lambda_n = n + alpha (C = 0) or Lambda_n = 0 (e undefined).
struct HypergeomRep {
    int n;
    LogScaled C;
    double e;
};
HypergeomRep hypergeom_rep(int n, const LambdaTable& table);

// Evaluates the representation; term k carries the exact Pochhammer ratio
// (1+e)_k/(e)_k = (k+e)/e, so negative-integer e costs nothing.
LogComplex eval_Q_hypergeom(int n, const LambdaTable& table, std::complex<double> z);

// Residuals of Qhat_n in the second-order holonomic ODE y'' + R y' + S y = 0
// and in the third-order ODE satisfied by the 2F2 form, both normalized by
// the magnitude sum of their terms.  Exact polynomial derivatives.
struct OdeResiduals {
    std::complex<double> res2, res3;
    double scale2, scale3;
    double res2_normalized() const { return std::abs(res2) / scale2; }
    double res3_normalized() const { return std::abs(res3) / scale3; }
};
OdeResiduals ode_residuals(int n, const LambdaTable& table, std::complex<double> z);

// Zeros of Qhat_n as eigenvalues of the symmetrized Jacobi matrix
// (Golub-Welsch construction), ascending.  n <= 60.
std::vector<double> zeros_Q(int n, const GeronimusParams& params);

} // namespace glag

#endif
