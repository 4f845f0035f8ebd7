#include "glag/geronimus.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "glag/errors.hpp"
#include "glag/laguerre.hpp"
#include "glag/quadrature.hpp"
#include "glag/second_kind.hpp"
#include "glag/special.hpp"

namespace glag {

GeronimusParams::GeronimusParams(double alpha_, double c_, double N_)
    : alpha(alpha_), c(c_), N(N_) {
    if (!(alpha > -1.0)) throw domain_error("GeronimusParams: requires alpha > -1");
    if (!(c < 0.0)) throw domain_error("GeronimusParams: requires c < 0");
    if (!(N >= 0.0)) throw domain_error("GeronimusParams: requires N >= 0");
}

LambdaTable::LambdaTable(const GeronimusParams& params, int nmax, double tol)
    : params_(params), nmax_(nmax),
      branch_(params.N > 0.0 ? LambdaBranch::n_positive : LambdaBranch::n_zero) {
    if (nmax < 1) throw domain_error("LambdaTable: requires nmax >= 1");
    const double a = params.alpha, c = params.c, N = params.N;

    const LaguerreSequence lag = eval_monic_laguerre(nmax, a, {c, 0.0});
    lag_c_.reserve((size_t)nmax + 1);
    for (int k = 0; k <= nmax; ++k) lag_c_.push_back(lag.real_at(k));

    const auto r = ratio_r_sweep(nmax - 1, a, ComplexPoint(c), tol);
    f_c_.push_back(f0_second_kind(a, c, std::min(tol, 1e-12)));
    for (int k = 0; k + 1 < nmax; ++k)
        f_c_.push_back(f_c_.back() * LogScaled::of(r[(size_t)k].real()));

    const LogScaled Ns = LogScaled::of(N);
    lambda_.assign((size_t)nmax + 1, 0.0);
    lam_pi_.assign((size_t)nmax + 1, LogScaled{});
    for (int n = 1; n <= nmax; ++n) {
        const LogScaled& L = lag_c_[(size_t)n - 1];
        const LogScaled den = L * f_c_[(size_t)n - 1] + Ns * L * L;
        if (!den.positive())
            throw degenerate_error("lambda_n: denominator L F + N L^2 vanished");
        lam_pi_[(size_t)n] = -(gamma_scaled(n + a) * gamma_scaled((double)n) / den);
        if (branch_ == LambdaBranch::n_zero) {
            lambda_[(size_t)n] = -r[(size_t)n - 1].real();
        } else {
            const double pi_prev = (lag_c_[(size_t)n] / L).value();
            lambda_[(size_t)n] = lam_pi_[(size_t)n].value() - pi_prev;
        }
    }
}

LogScaled LambdaTable::lambda_plus_pi(int n) const {
    if (n < 1 || n > nmax_) throw domain_error("LambdaTable::lambda_plus_pi: n out of range");
    return lam_pi_[(size_t)n];
}

double LambdaTable::lambda(int n) const {
    if (n < 1 || n > nmax_) throw domain_error("LambdaTable::lambda: n out of range");
    return lambda_[(size_t)n];
}

LogScaled LambdaTable::q_norm_sq(int n) const {
    if (n == 0) return f_c_[0] + LogScaled::of(params_.N);
    const double l = lambda(n);
    if (!(l > 0.0)) throw degenerate_error("q_norm_sq: Lambda_n <= 0 breaks positivity");
    return LogScaled::of(l) * gamma_scaled((double)n) * gamma_scaled(n + params_.alpha);
}

LambdaValue lambda_n(int n, const GeronimusParams& params) {
    if (n < 1) throw domain_error("lambda_n: requires n >= 1");
    return LambdaTable(params, n).lambda_value(n);
}

LogComplex eval_Q(int n, const LambdaTable& table, std::complex<double> z) {
    if (n == 0) return LogComplex::of(1.0);
    const LaguerreSequence seq = eval_monic_laguerre(n, table.params().alpha, z);
    return seq[n] + LogComplex::of(table.lambda(n)) * seq[n - 1];
}

LogComplex eval_Q(int n, const GeronimusParams& params, std::complex<double> z) {
    if (n == 0) return LogComplex::of(1.0);
    return eval_Q(n, LambdaTable(params, n), z);
}

std::vector<double> q_coefficients(int n, const LambdaTable& table) {
    std::vector<double> coef = laguerre_coefficients(n, table.params().alpha);
    if (n >= 1) {
        const std::vector<double> lower = laguerre_coefficients(n - 1, table.params().alpha);
        const double l = table.lambda(n);
        for (size_t j = 0; j < lower.size(); ++j) coef[j] += l * lower[j];
    }
    return coef;
}

namespace {

// <p, q> with the mass total Fhat_0(c) + N supplied by the caller.
// Long double throughout: the moment sums cancel ~9 digits at degree 24.
double inner_product_impl(const std::vector<double>& p, const std::vector<double>& q,
                          double alpha, double c, double mass_total) {
    const size_t dp = p.size() - 1, dq = q.size() - 1;
    std::vector<long double> prod(dp + dq + 1, 0.0L);
    for (size_t i = 0; i <= dp; ++i)
        for (size_t j = 0; j <= dq; ++j) prod[i + j] += (long double)p[i] * (long double)q[j];

    // prod(x) = (x - c) s(x) + prod(c) by synthetic division
    const size_t d = prod.size() - 1;
    std::vector<long double> s(d, 0.0L);
    long double carry = prod[d];
    for (size_t k = d; k >= 1; --k) {
        s[k - 1] = carry;
        carry = prod[k - 1] + (long double)c * carry;
    }
    const long double at_c = carry; // = p(c) q(c)

    long double integral = 0.0L;
    for (size_t k = 0; k < s.size(); ++k)
        integral += s[k] * std::exp(std::lgamma((long double)k + (long double)alpha + 1.0L));
    return (double)(integral + at_c * (long double)mass_total);
}

} // namespace

double inner_product_nu(const std::vector<double>& p, const std::vector<double>& q,
                        const GeronimusParams& params) {
    if (p.empty() || q.empty()) throw domain_error("inner_product_nu: empty coefficients");
    if (p.size() - 1 + q.size() - 1 > 60)
        throw domain_error("inner_product_nu: degree overflow (deg p + deg q <= 60)");
    const double mass = f0_second_kind(params.alpha, params.c).value() + params.N;
    return inner_product_impl(p, q, params.alpha, params.c, mass);
}

GramResult gram_matrix(int nmax, const GeronimusParams& params) {
    if (nmax < 1 || nmax > 12)
        throw domain_error("gram_matrix: requires 1 <= nmax <= 12");
    const LambdaTable table(params, nmax);
    const double a = params.alpha, c = params.c;

    // The rational part is integrated directly: splitting off p(c) q(c) per
    // the moment decomposition puts two enormous, nearly cancelling pieces on
    // either side once |c| and the degree grow (at c = -5, n = 12 the split
    // costs ~11 digits), while the unsplit integrand only carries the
    // orthogonality cancellation itself, which Cauchy-Schwarz keeps at the
    // scale of the norms.
    auto q_values = [&](long double x) {
        std::vector<long double> lag((size_t)nmax + 1);
        lag[0] = 1.0L;
        if (nmax >= 1) lag[1] = x - a - 1.0L;
        for (int k = 1; k < nmax; ++k) {
            const auto [beta, gamma] = laguerre_recurrence_coeffs(k, a);
            lag[(size_t)k + 1] =
                (x - beta) * lag[(size_t)k] - (long double)gamma * lag[(size_t)k - 1];
        }
        std::vector<long double> q((size_t)nmax + 1);
        q[0] = 1.0L;
        for (int n = 1; n <= nmax; ++n)
            q[(size_t)n] = lag[(size_t)n] + (long double)table.lambda(n) * lag[(size_t)n - 1];
        return q;
    };

    GramResult out;
    out.nmax = nmax;
    out.G.assign((size_t)nmax + 1, std::vector<double>((size_t)nmax + 1, 0.0));
    for (int i = 0; i <= nmax; ++i)
        for (int j = 0; j <= i; ++j) {
            auto integrand = [&](long double x) -> long double {
                if (x <= 0.0L || x > 800.0L) return 0.0L;
                const auto q = q_values(x);
                return q[(size_t)i] * q[(size_t)j] * std::exp(a * std::log(x) - x) /
                       (x - (long double)c);
            };
            const double scale = std::exp(0.5 * (table.q_norm_sq(i).logmag +
                                                 table.q_norm_sq(j).logmag));
            double v = integrate_semi_infinite(integrand, 1e-12 * scale).value;
            if (params.N > 0.0) {
                // N Q_i(c) Q_j(c) without forming Q(c) by cancellation:
                // Q_n(c) = Lhat_{n-1}(c) (Lambda_n + pi_{n-1}(c)), the second
                // factor held in log scale by the table.
                const LogScaled qic = i == 0 ? LogScaled::one()
                                             : table.laguerre_at_c()[(size_t)i - 1] *
                                                   table.lambda_plus_pi(i);
                const LogScaled qjc = j == 0 ? LogScaled::one()
                                             : table.laguerre_at_c()[(size_t)j - 1] *
                                                   table.lambda_plus_pi(j);
                v += (LogScaled::of(params.N) * qic * qjc).value();
            }
            out.G[(size_t)i][(size_t)j] = out.G[(size_t)j][(size_t)i] = v;
        }
    out.max_offdiag = 0.0;
    for (int i = 0; i <= nmax; ++i)
        for (int j = 0; j < i; ++j) {
            const double norm = std::sqrt(out.G[(size_t)i][(size_t)i] * out.G[(size_t)j][(size_t)j]);
            out.max_offdiag = std::max(out.max_offdiag, std::abs(out.G[(size_t)i][(size_t)j]) / norm);
        }
    return out;
}

PerturbedRecurrence perturbed_recurrence(int nmax, const GeronimusParams& params) {
    if (nmax < 2) throw domain_error("perturbed_recurrence: requires nmax >= 2");
    const LambdaTable table(params, nmax + 1);

    PerturbedRecurrence out{nmax, params, {}, {}, {}};
    out.lambda.reserve((size_t)nmax + 1);
    for (int n = 1; n <= nmax + 1; ++n) out.lambda.push_back(table.lambda(n));

    out.beta_t.reserve((size_t)nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        const double lam_n = n == 0 ? 0.0 : table.lambda(n);
        out.beta_t.push_back(laguerre_recurrence_coeffs(n, params.alpha).beta + lam_n -
                             table.lambda(n + 1));
    }

    out.gamma_t.reserve((size_t)nmax);
    out.gamma_t.push_back((table.q_norm_sq(1) / table.q_norm_sq(0)).value());
    for (int n = 2; n <= nmax; ++n)
        out.gamma_t.push_back(table.lambda(n) / table.lambda(n - 1) *
                              laguerre_recurrence_coeffs(n - 1, params.alpha).gamma);
    for (double g : out.gamma_t)
        if (!(g > 0.0))
            throw degenerate_error("perturbed_recurrence: gamma~_n <= 0 violates positivity");
    return out;
}

double lambda_recursion_residual(int n, const LambdaTable& table) {
    if (n < 2 || n + 1 > table.nmax())
        throw domain_error("lambda_recursion_residual: requires 2 <= n < nmax");
    const double a = table.params().alpha;
    const double ln1 = table.lambda(n - 1), ln = table.lambda(n), lp = table.lambda(n + 1);
    if (ln == 0.0 || ln1 == 0.0)
        throw degenerate_error("lambda_recursion_residual: division by Lambda = 0");
    const double gn = laguerre_recurrence_coeffs(n, a).gamma;
    const double gn1 = laguerre_recurrence_coeffs(n - 1, a).gamma;
    return std::abs(lp - ln + gn / ln - gn1 / ln1 - 2.0);
}

double lambda_closed_sum(int n, const LambdaTable& table) {
    if (n < 2 || n > table.nmax())
        throw domain_error("lambda_closed_sum: requires 2 <= n <= nmax");
    const double a = table.params().alpha;
    const double g1 = laguerre_recurrence_coeffs(1, a).gamma;
    return -(double)n * (n + a) / table.lambda(n) + 2.0 * (n - 1.0) +
           g1 / table.lambda(1) + table.lambda(2);
}

std::vector<double> lambda_via_rho(int nmax, const LambdaTable& table) {
    if (nmax > table.nmax()) throw domain_error("lambda_via_rho: nmax exceeds table");
    const double a = table.params().alpha;
    const double g1 = laguerre_recurrence_coeffs(1, a).gamma;
    const double kappa = g1 / table.lambda(1) + table.lambda(2);

    std::vector<double> out;
    out.reserve((size_t)nmax);
    LogScaled rho_prev = LogScaled::one();
    LogScaled rho = LogScaled::of(table.lambda(1));
    out.push_back(table.lambda(1));
    for (int n = 1; n < nmax; ++n) {
        const LogScaled rho_next = LogScaled::of(2.0 * (n - 1.0) + kappa) * rho -
                                   LogScaled::of((double)n * (n + a)) * rho_prev;
        out.push_back((rho_next / rho).value());
        rho_prev = rho;
        rho = rho_next;
    }
    return out;
}

HypergeomRep hypergeom_rep(int n, const LambdaTable& table) {
    if (n < 1) throw domain_error("hypergeom_rep: requires n >= 1");
    const double a = table.params().alpha;
    const double lam = table.lambda(n);
    if (lam == 0.0)
        throw degenerate_error("hypergeom_rep: Lambda_n = 0, e undefined");
    const double u = 1.0 - lam / (n + a);
    if (std::abs(u) < 1e-14)
        throw degenerate_error("hypergeom_rep: Lambda_n = n + alpha, C = 0");
    const LogScaled parity{n % 2 == 0 ? 1 : -1, 0.0};
    const LogScaled poch{1, log_gamma(n + a + 1.0) - log_gamma(a + 1.0)};
    return {n, LogScaled::of(u) * parity * poch, (double)n * (n + a - lam) / lam};
}

LogComplex eval_Q_hypergeom(int n, const LambdaTable& table, std::complex<double> z) {
    if (n == 0) return LogComplex::of(1.0);
    const HypergeomRep rep = hypergeom_rep(n, table);
    const double a = table.params().alpha;
    const long double e = (long double)rep.e;

    std::complex<long double> base{1.0L, 0.0L};
    const std::complex<long double> zl((long double)z.real(), (long double)z.imag());
    std::complex<long double> sum = base * ((0.0L + e) / e);
    for (int k = 0; k < n; ++k) {
        base *= (long double)(-n + k) * zl /
                ((long double)(a + 1.0 + k) * (long double)(k + 1));
        sum += base * (((long double)(k + 1) + e) / e);
    }
    return LogComplex(rep.C) *
           LogComplex::of(std::complex<double>((double)sum.real(), (double)sum.imag()));
}

OdeResiduals ode_residuals(int n, const LambdaTable& table, std::complex<double> z) {
    if (n < 1) throw domain_error("ode_residuals: requires n >= 1");
    if (z == std::complex<double>(0.0, 0.0))
        throw domain_error("ode_residuals: z = 0 is a pole of the coefficients");
    const double a = table.params().alpha;
    const double lam = table.lambda(n);
    const std::complex<double> den = z * lam + (n - lam) * (n + a - lam);
    if (std::abs(den) < 1e-12 * std::max(1.0, std::abs(z) * std::abs(lam)))
        throw domain_error("ode_residuals: z Lambda + (n-Lambda)(n+alpha-Lambda) ~ 0");
    const double e = hypergeom_rep(n, table).e;

    const std::vector<double> coef = q_coefficients(n, table);
    // y, y', y'', y''' by Horner in long double complex
    std::complex<long double> y[4] = {0.0L, 0.0L, 0.0L, 0.0L};
    const std::complex<long double> zl((long double)z.real(), (long double)z.imag());
    for (int k = (int)coef.size() - 1; k >= 0; --k) {
        y[3] = y[3] * zl + 3.0L * y[2];
        y[2] = y[2] * zl + 2.0L * y[1];
        y[1] = y[1] * zl + y[0];
        y[0] = y[0] * zl + (long double)coef[(size_t)k];
    }
    const std::complex<double> Y((double)y[0].real(), (double)y[0].imag());
    const std::complex<double> Y1((double)y[1].real(), (double)y[1].imag());
    const std::complex<double> Y2((double)y[2].real(), (double)y[2].imag());
    const std::complex<double> Y3((double)y[3].real(), (double)y[3].imag());

    const std::complex<double> R = -lam / den + (a + 1.0) / z - 1.0;
    const std::complex<double> S =
        (z * lam + (n - lam) * (n + a)) / (z * den) + (n - 1.0) / z;

    OdeResiduals out;
    out.res2 = Y2 + R * Y1 + S * Y;
    out.scale2 = std::abs(Y2) + std::abs(R * Y1) + std::abs(S * Y);

    const std::complex<double> t1 = z * z * Y3;
    const std::complex<double> t2 = -z * (z - e - a - 2.0) * Y2;
    const std::complex<double> t3 = -((e - n + 2.0) * z - (a + 1.0) * e) * Y1;
    const std::complex<double> t4 = (double)n * (e + 1.0) * Y;
    out.res3 = t1 + t2 + t3 + t4;
    out.scale3 = std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4);
    return out;
}

std::vector<double> zeros_Q(int n, const GeronimusParams& params) {
    if (n < 1 || n > 60) throw domain_error("zeros_Q: requires 1 <= n <= 60");
    const PerturbedRecurrence rec = perturbed_recurrence(std::max(n, 2), params);

    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i) diag(i) = rec.beta(i);
    for (int i = 0; i + 1 < n; ++i) {
        const double g = rec.gamma(i + 1);
        if (!(g > 0.0)) throw degenerate_error("zeros_Q: gamma~ <= 0");
        sub(i) = std::sqrt(g);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    std::vector<double> zeros((size_t)n);
    for (int i = 0; i < n; ++i) zeros[(size_t)i] = solver.eigenvalues()(i);
    return zeros;
}

} // namespace glag
