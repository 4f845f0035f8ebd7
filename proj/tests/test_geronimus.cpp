#include "doctest.h"

#include <cmath>

#include "glag/errors.hpp"
#include "glag/geronimus.hpp"
#include "glag/laguerre.hpp"
#include "glag/quadrature.hpp"
#include "glag/second_kind.hpp"
#include "glag/special.hpp"
#include "test_util.hpp"

using namespace glag;
using cd = std::complex<double>;

TEST_CASE("parameter admissibility") {
    CHECK_NOTHROW(GeronimusParams(-0.5, -0.25, 0.0));
    CHECK_THROWS_AS(GeronimusParams(-1.0, -1.0, 1.0), domain_error);
    CHECK_THROWS_AS(GeronimusParams(0.0, 0.0, 1.0), domain_error);
    CHECK_THROWS_AS(GeronimusParams(0.0, 1.0, 1.0), domain_error);
    CHECK_THROWS_AS(GeronimusParams(0.0, -1.0, -0.1), domain_error);
}

TEST_CASE("Lambda_n values") {
    // N = 0 branch equals -r_0, cross-checked through the Stieltjes integrals
    const LambdaValue l1 = lambda_n(1, GeronimusParams(0.0, -1.0, 0.0));
    CHECK(l1.branch == LambdaBranch::n_zero);
    const double f0q = second_kind_quadrature_oracle(0, 0.0, -1.0, 1e-10);
    const double f1q = second_kind_quadrature_oracle(1, 0.0, -1.0, 1e-10);
    CHECK_REL(l1.value, -f1q / f0q, 1e-8);
    CHECK_REL(l1.value, 0.32312497182129913, 1e-10); // frozen

    // N -> infinity at fixed n: Lambda_n -> -pi_{n-1}(c)
    const double l3 = lambda_n(3, GeronimusParams(0.0, -1.0, 1e8)).value;
    const double pi2 = ratio_pi(2, 0.0, ComplexPoint(-1.0)).real();
    CHECK(std::abs(l3 + pi2) < 1e-4); // measured 8.2e-10

    // n = 200, (0.5, -2, 1): against n + sqrt(-cn) + (2a-2c-1)/4 (measured 0.012)
    const double l200 = lambda_n(200, GeronimusParams(0.5, -2.0, 1.0)).value;
    CHECK(std::abs(l200 - (200.0 + std::sqrt(400.0) + 1.0)) < 0.05);

    // table indexing guards
    const LambdaTable t(GeronimusParams(0.0, -1.0, 1.0), 5);
    CHECK_THROWS_AS(t.lambda(0), domain_error);
    CHECK_THROWS_AS(t.lambda(6), domain_error);
}

TEST_CASE("N = 0 branch equals the general-formula route") {
    // the N = 0 table stores -r_{n-1}; the (Lambda_n + pi_{n-1}) route comes
    // from the Gamma-product formula with N = 0 -- two genuinely different
    // evaluation paths for the same quantity
    const GeronimusParams p(0.5, -2.0, 0.0);
    const LambdaTable t(p, 40);
    const auto lag = t.laguerre_at_c();
    for (int n = 1; n <= 40; ++n) {
        const double pi_prev = (lag[(size_t)n] / lag[(size_t)n - 1]).value();
        const double via_formula = t.lambda_plus_pi(n).value() - pi_prev;
        CHECK_REL(t.lambda(n), via_formula, 1e-9);
    }
}

TEST_CASE("eval_Q basics and orthogonality") {
    const GeronimusParams p(0.0, -1.0, 2.0);
    const LambdaTable t(p, 4);
    CHECK(eval_Q(0, t, {3.0, 2.0}).value() == cd{1.0, 0.0});
    const cd z{0.3, -1.1};
    CHECK(testutil::rel_err(eval_Q(1, t, z).value(), z - 0.0 - 1.0 + t.lambda(1)) < 1e-14);

    // <Qhat_2, Qhat_1> vanishes under the perturbed inner product
    const std::vector<double> q2 = q_coefficients(2, t), q1 = q_coefficients(1, t);
    const double ip = inner_product_nu(q2, q1, p);
    const double n2 = inner_product_nu(q2, q2, p), n1 = inner_product_nu(q1, q1, p);
    CHECK(std::abs(ip) / std::sqrt(n2 * n1) < 1e-9);
}

TEST_CASE("perturbed inner product") {
    const GeronimusParams p(0.5, -1.0, 2.5);
    // <1,1> = Fhat_0(c) + N
    CHECK_REL(inner_product_nu({1.0}, {1.0}, p),
              f0_second_kind(0.5, -1.0).value() + 2.5, 1e-12);
    // <x - c, 1> = Gamma(alpha + 1): the rational weight telescopes
    CHECK_REL(inner_product_nu({1.0, 1.0}, {1.0}, p), std::exp(log_gamma(1.5)), 1e-12);

    // orthogonality of Qhat_3 to lower degree + positivity, N = 0
    const GeronimusParams p0(0.5, -1.0, 0.0);
    const LambdaTable t(p0, 3);
    const auto q3 = q_coefficients(3, t);
    CHECK(inner_product_nu(q3, q3, p0) > 0.0);
    const double off = inner_product_nu(q3, {0.0, 0.0, 1.0}, p0);
    const double scale = std::sqrt(inner_product_nu(q3, q3, p0) *
                                   inner_product_nu({0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}, p0));
    CHECK(std::abs(off) / scale < 1e-10);
    // raw-quadrature cross-check of the same inner product
    auto horner = [](const std::vector<double>& c, double x) {
        double v = 0.0;
        for (int k = (int)c.size() - 1; k >= 0; --k) v = v * x + c[(size_t)k];
        return v;
    };
    const double raw = quadrature(
        [&](double x) {
            return horner(q3, x) * x * x * std::sqrt(x) * std::exp(-x) / (x + 1.0);
        },
        1e-9);
    CHECK(std::abs(off - raw) < 1e-7 * scale + 1e-8);

    CHECK_THROWS_AS(inner_product_nu(std::vector<double>(40, 1.0),
                                     std::vector<double>(30, 1.0), p),
                    domain_error);
}

TEST_CASE("Gram matrix") {
    const GramResult g = gram_matrix(12, GeronimusParams(0.0, -1.0, 1.0));
    CHECK(g.max_offdiag < 1e-8);
    for (int i = 0; i <= 12; ++i) CHECK(g.G[(size_t)i][(size_t)i] > 0.0);
    CHECK_REL(g.G[0][0], f0_second_kind(0.0, -1.0).value() + 1.0, 1e-12);
    // diagonal matches the norm identity ||Qhat_n||^2 = Lambda_n G(n) G(n+a)
    const LambdaTable t(GeronimusParams(0.0, -1.0, 1.0), 12);
    for (int n = 1; n <= 12; ++n)
        CHECK_REL(g.G[(size_t)n][(size_t)n], t.q_norm_sq(n).value(), 1e-11);
    // the coefficient/moment route of inner_product_nu agrees at moderate n
    for (int n = 1; n <= 8; ++n) {
        const auto qn = q_coefficients(n, t);
        CHECK_REL(inner_product_nu(qn, qn, GeronimusParams(0.0, -1.0, 1.0)),
                  g.G[(size_t)n][(size_t)n], 1e-9);
    }
}

TEST_CASE("perturbed recurrence coefficients") {
    const GeronimusParams p(0.5, -1.0, 2.0);
    const PerturbedRecurrence rec = perturbed_recurrence(30, p);
    for (int n = 1; n <= 30; ++n) CHECK(rec.gamma(n) > 0.0);

    // gamma~_1 equals the norm ratio
    const LambdaTable t(p, 2);
    CHECK_REL(rec.gamma(1), (t.q_norm_sq(1) / t.q_norm_sq(0)).value(), 1e-12);

    // beta~_0 is the zero of Qhat_1
    CHECK_REL(rec.beta(0), 0.5 + 1.0 - rec.lambda_at(1), 1e-13);
}

TEST_CASE("Lambda recursion routes") {
    const GeronimusParams p(0.0, -1.0, 1.0);
    const LambdaTable t(p, 52);

    for (int n = 2; n <= 50; ++n) CHECK(lambda_recursion_residual(n, t) < 1e-9);

    for (int n = 2; n < 40; ++n)
        CHECK_REL(lambda_closed_sum(n, t), t.lambda(n + 1), 1e-9);

    const auto rho = lambda_via_rho(40, t);
    for (int n = 1; n <= 40; ++n) CHECK_REL(rho[(size_t)n - 1], t.lambda(n), 1e-8);
}

TEST_CASE("hypergeometric representation") {
    const GeronimusParams p(0.0, -1.0, 1.0);
    const LambdaTable t(p, 6);
    for (const cd z : {cd{-1.0, 0.0}, cd{2.0, 1.0}, cd{5.0, 0.0}})
        CHECK(rel_diff(eval_Q_hypergeom(4, t, z), eval_Q(4, t, z)) < 1e-11);

    SUBCASE("monic leading coefficient is exactly 1, n <= 6") {
        for (int n = 1; n <= 6; ++n) {
            const HypergeomRep rep = hypergeom_rep(n, t);
            // z^n coefficient: C (-n)_n (n+e) / ((a+1)_n n! e)
            const double a = p.alpha;
            const LogScaled poch_n{1, log_gamma(n + a + 1.0) - log_gamma(a + 1.0)};
            const LogScaled lead = rep.C *
                                   LogScaled{n % 2 == 0 ? 1 : -1, log_gamma(n + 1.0)} *
                                   LogScaled::of((n + rep.e) / rep.e) /
                                   (poch_n * LogScaled{1, log_gamma(n + 1.0)});
            CHECK(rel_diff(lead, LogScaled::one()) < 1e-12);
        }
    }

    SUBCASE("e growth on the N = 0 branch") {
        const LambdaTable t0(GeronimusParams(0.0, -1.0, 0.0), 400);
        const HypergeomRep rep = hypergeom_rep(400, t0);
        // Lambda ~ n - sqrt(-cn) gives e ~ sqrt(-cn) (1 + ...) > 0
        CHECK(rep.e > 0.0);
        CHECK(rep.e / std::sqrt(400.0) == doctest::Approx(1.0).epsilon(0.2));
    }
}

TEST_CASE("ODE residuals") {
    const GeronimusParams p(0.5, -1.0, 2.0);
    const LambdaTable t(p, 10);
    for (int n = 1; n <= 10; ++n)
        for (const cd z : {cd{-1.0, 0.0}, cd{1.0, 1.0}, cd{3.0, 0.0}}) {
            const OdeResiduals r = ode_residuals(n, t, z);
            CHECK(r.res2_normalized() < 1e-9);
            CHECK(r.res3_normalized() < 1e-9);
        }
    CHECK_THROWS_AS(ode_residuals(1, t, cd{0.0, 0.0}), domain_error);

    SUBCASE("third-order operator equals the stated combination of the second") {
        // z^2 (E2)' + (-z(z-e-a-2) - z^2 R) E2 == E3 for arbitrary smooth y,
        // here y = an unrelated polynomial, so the identity is operator-level
        const int n = 3;
        const double a = p.alpha, lam = t.lambda(3), e = hypergeom_rep(3, t).e;
        const std::vector<double> y{0.3, -1.2, 0.8, 0.05, 1.7};
        auto eval_derivs = [&](cd z, cd* out) {
            out[0] = out[1] = out[2] = out[3] = 0.0;
            for (int k = (int)y.size() - 1; k >= 0; --k) {
                out[3] = out[3] * z + 3.0 * out[2];
                out[2] = out[2] * z + 2.0 * out[1];
                out[1] = out[1] * z + out[0];
                out[0] = out[0] * z + y[(size_t)k];
            }
        };
        for (const cd z : {cd{0.7, 0.3}, cd{-2.0, 0.0}, cd{1.5, -1.0}}) {
            cd d[4];
            eval_derivs(z, d);
            const cd den = z * lam + (n - lam) * (n + a - lam);
            const cd R = -lam / den + (a + 1.0) / z - 1.0;
            const cd S = (z * lam + (n - lam) * (n + a)) / (z * den) + (n - 1.0) / z;
            const cd Rp = lam * lam / (den * den) - (a + 1.0) / (z * z);
            const cd Sp = (lam * (z * den) - (z * lam + (n - lam) * (n + a)) * (den + z * lam)) /
                              (z * den * z * den) -
                          (n - 1.0) / (z * z);
            const cd E2 = d[2] + R * d[1] + S * d[0];
            const cd E2p = d[3] + Rp * d[1] + R * d[2] + Sp * d[0] + S * d[1];
            const cd M = -z * (z - e - a - 2.0) - z * z * R;
            const cd combo = z * z * E2p + M * E2;
            const cd E3 = z * z * d[3] - z * (z - e - a - 2.0) * d[2] -
                          ((e - n + 2.0) * z - (a + 1.0) * e) * d[1] + (double)n * (e + 1.0) * d[0];
            CHECK(testutil::rel_err(combo, E3) < 1e-12);
        }
    }
}

TEST_CASE("zeros of Qhat_n") {
    const GeronimusParams p(0.5, -1.0, 2.0);

    // n = 1: the single zero of Qhat_1 = z - (alpha + 1 - Lambda_1)
    const auto z1 = zeros_Q(1, p);
    REQUIRE(z1.size() == 1);
    const LambdaTable t(p, 1);
    CHECK_REL(z1[0], 0.5 + 1.0 - t.lambda(1), 1e-12);
    CHECK(std::abs(eval_Q(1, LambdaTable(p, 1), {z1[0], 0.0}).value()) < 1e-12);

    for (int n : {5, 12, 20}) {
        const auto zs = zeros_Q(n, p);
        REQUIRE((int)zs.size() == n);
        for (int k = 0; k + 1 < n; ++k) CHECK(zs[(size_t)k] < zs[(size_t)k + 1]); // simple, sorted
        for (double zk : zs) CHECK(zk > p.c);                                     // right of the mass
        // eigenvalues really are zeros of the connection-formula polynomial
        const LambdaTable tn(p, n);
        for (double zk : zs) {
            const LogComplex qv = eval_Q(n, tn, {zk, 0.0});
            const LogComplex qd = eval_Q(n, tn, {zk + 1e-7, 0.0});
            CHECK(qv.logmag < qd.logmag); // local smallness at the root
        }
    }

    SUBCASE("interlacing up to n = 20") {
        for (int n = 1; n < 20; ++n) {
            const auto a = zeros_Q(n, p), b = zeros_Q(n + 1, p);
            for (int k = 0; k < n; ++k) {
                CHECK(b[(size_t)k] < a[(size_t)k]);
                CHECK(a[(size_t)k] < b[(size_t)k + 1]);
            }
        }
    }

    CHECK_THROWS_AS(zeros_Q(61, p), domain_error);
}
