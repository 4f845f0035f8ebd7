#include "doctest.h"

#include <cmath>
#include <random>

#include "glag/errors.hpp"
#include "glag/quadrature.hpp"
#include "glag/scaled.hpp"
#include "glag/special.hpp"
#include "test_util.hpp"

using namespace glag;

TEST_CASE("log_gamma") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-14);                       // Gamma(1) = 1
    CHECK_REL(log_gamma(5.0), std::log(24.0), 1e-15);              // Gamma(5) = 4!
    CHECK_REL(log_gamma(171.5), 709.14316303092824227, 1e-14);     // high-precision oracle
    CHECK_REL(log_gamma(0.5), 0.5 * std::log(M_PI), 1e-15);
    CHECK_REL(log_gamma(1e6), 12815504.569147612, 1e-15);          // Stirling regime
    // reflection-free spot checks across the Lanczos/Stirling switch
    CHECK_REL(log_gamma(19.99), log_gamma(20.99) - std::log(19.99), 1e-14);
    CHECK_REL(log_gamma(20.01), log_gamma(21.01) - std::log(20.01), 1e-14);
    CHECK_THROWS_AS(log_gamma(0.0), domain_error);
    CHECK_THROWS_AS(log_gamma(-2.5), domain_error);
}

TEST_CASE("bessel_j basics") {
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(1.0, 0.0) == 0.0);
    CHECK(std::abs(bessel_j(0.0, 2.4048255577)) < 1e-9); // first zero of J_0
    CHECK_THROWS_AS(bessel_j(-1.5, 1.0), domain_error);
    CHECK_THROWS_AS(bessel_j(0.0, -1.0), domain_error);
}

TEST_CASE("bessel_j recurrence ties the series and Hankel branches together") {
    // J_{nu-1} + J_{nu+1} = (2 nu / x) J_nu, checked straddling the x = 18
    // switch point and deep into the asymptotic regime
    for (double x : {5.0, 15.0, 17.5, 18.5, 25.0, 60.0, 100.0}) {
        for (double nu : {1.0, 2.5, 4.0}) {
            const double jm = bessel_j(nu - 1.0, x), jp = bessel_j(nu + 1.0, x);
            const double rhs = 2.0 * nu / x * bessel_j(nu, x);
            CHECK(std::abs(jm + jp - rhs) <= 2e-13 * (std::abs(jm) + std::abs(jp) + 0.05));
        }
    }
}

TEST_CASE("bessel_k values and asymptotic series") {
    // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
    CHECK_REL(bessel_k(0.5, 1.0).value(), std::sqrt(M_PI / 2.0) * std::exp(-1.0), 1e-12);
    // independent oracle: K_0(1) = int_0^inf e^{-cosh t} dt (plain Simpson)
    const double k01 = testutil::simpson([](double t) { return std::exp(-std::cosh(t)); },
                                         0.0, 22.0, 20000);
    CHECK_REL(bessel_k(0.0, 1.0).value(), k01, 1e-12);
    CHECK_REL(bessel_k(0.0, 1.0).value(), 0.42102443824070833, 1e-12); // frozen
    // large argument matches the truncated expansion
    CHECK_REL(bessel_k(1.0, 50.0).value(), bessel_k_asymptotic(1.0, 50.0, 4), 1e-6);
    // log-scaled far beyond double range
    const LogScaled far = bessel_k(2.0, 5000.0);
    CHECK(far.positive());
    CHECK(far.logmag == doctest::Approx(-5000.0 + 0.5 * std::log(M_PI / 10000.0)).epsilon(1e-4));
    CHECK_THROWS_AS(bessel_k(0.0, 0.0), domain_error);

    SUBCASE("a_l coefficients") {
        CHECK(bessel_k_asym_coeff(3.7, 0) == 1.0);
        CHECK(bessel_k_asym_coeff(1.0, 1) == doctest::Approx(3.0 / 8.0));
        CHECK(bessel_k_asym_coeff(0.5, 1) == 0.0); // half-integer degeneracy
        CHECK(bessel_k_asym_coeff(0.0, 2) == doctest::Approx((-1.0) * (-9.0) / (64.0 * 2.0)));
    }

    SUBCASE("error decreases through the first four truncations for x >= 20") {
        for (double x : {20.0, 50.0, 100.0}) {
            for (double nu : {0.0, 1.0, 2.3}) {
                const double exact = bessel_k(nu, x).value();
                double prev = 1e300;
                for (int L = 1; L <= 4; ++L) {
                    const double err = std::abs(bessel_k_asymptotic(nu, x, L) - exact);
                    CHECK(err < prev);
                    prev = err;
                }
            }
        }
    }

    SUBCASE("complex argument reduces to the real routine on the axis") {
        const LogComplex kc = bessel_k_complex(1.5, {3.0, 0.0});
        CHECK_REL(kc.value().real(), bessel_k(1.5, 3.0).value(), 1e-13);
        CHECK(std::abs(kc.value().imag()) < 1e-13);
        // K_{1/2}(x) closed form continues to complex x
        const std::complex<double> x{2.0, 1.5};
        const std::complex<double> want = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
        CHECK(testutil::rel_err(bessel_k_complex(0.5, x).value(), want) <= 1e-11);
    }
}

TEST_CASE("kummer_u") {
    // U(a, a+1, x) = x^{-a}
    CHECK_REL(kummer_u(2.0, 3.0, 3.0).value(), 1.0 / 9.0, 1e-11);
    // U(1, 1, x) = e^x E1(x), E1 by an independent series oracle
    CHECK_REL(kummer_u(1.0, 1.0, 1.0).value(), std::exp(1.0) * testutil::exp_integral_e1(1.0),
              1e-11);
    CHECK_REL(kummer_u(1.0, 1.0, 1.0).value(), 0.59634736232319407, 1e-11); // frozen
    CHECK_REL(kummer_u(6.0, 0.5, 1.0).value(), 8.0015512806407060e-5, 1e-10); // frozen
    CHECK_THROWS_AS(kummer_u(-1.0, 0.0, 1.0), domain_error);
    CHECK_THROWS_AS(kummer_u(1.0, 0.0, -1.0), domain_error);

    SUBCASE("contiguous recurrence, a = 2..50") {
        // U(a-1,b,x) + (b-2a-x) U(a,b,x) + a(a-b+1) U(a+1,b,x) = 0  [DLMF 13.3.7]
        std::mt19937_64 rng(23);
        std::uniform_real_distribution<double> bs(-3.0, 3.0), xs(0.2, 40.0);
        for (int a = 2; a <= 50; ++a) {
            const double b = bs(rng), x = xs(rng);
            const LogScaled u0 = kummer_u(a - 1.0, b, x);
            const LogScaled u1 = kummer_u((double)a, b, x);
            const LogScaled u2 = kummer_u(a + 1.0, b, x);
            const LogScaled t1 = LogScaled::of(b - 2.0 * a - x) * u1;
            const LogScaled t2 = LogScaled::of(a * (a - b + 1.0)) * u2;
            const LogScaled resid = u0 + t1 + t2;
            const double scale =
                std::exp(std::max({u0.logmag, t1.logmag, t2.logmag}));
            CHECK(std::abs(resid.value()) <= 1e-7 * scale);
        }
    }

    SUBCASE("large a stays accurate (log-scaled)") {
        // self-consistency across the recurrence at a = 500
        const double b = 0.5, x = 1.0;
        const LogScaled u0 = kummer_u(499.0, b, x);
        const LogScaled u1 = kummer_u(500.0, b, x);
        const LogScaled u2 = kummer_u(501.0, b, x);
        const LogScaled resid = u0 + LogScaled::of(b - 1000.0 - x) * u1 +
                                LogScaled::of(500.0 * (500.0 - b + 1.0)) * u2;
        CHECK(std::abs(resid.value()) <= 1e-9 * std::exp(u0.logmag));
    }
}

TEST_CASE("pfq_2f2 truncated series") {
    using cd = std::complex<double>;
    CHECK(pfq_2f2(0.0, 2.0, 1.0, 1.0, cd{5.0, 3.0}) == cd{1.0, 0.0});
    // 2F2(-1, 2; 1, 1; z) = 1 - 2z
    const cd z{0.7, -0.3};
    CHECK(testutil::rel_err(pfq_2f2(-1.0, 2.0, 1.0, 1.0, z), 1.0 - 2.0 * z) <= 1e-15);
    // termination: extra requested terms change nothing
    const cd a = pfq_2f2(-6.0, 1.3, 2.2, 0.7, z, 7);
    const cd b = pfq_2f2(-6.0, 1.3, 2.2, 0.7, z, 40);
    CHECK(a == b);
    // denominator pole without numerator cancellation
    CHECK_THROWS_AS(pfq_2f2(-5.0, 1.0, -2.0, 1.0, z), degenerate_error);
    // numerator terminates first: no pole reached
    CHECK_NOTHROW(pfq_2f2(-2.0, 1.0, -3.0, 1.0, z));
    // nonterminating series requires explicit nterms
    CHECK_THROWS_AS(pfq_2f2(0.5, 1.0, 2.0, 2.0, z), domain_error);
}

TEST_CASE("quadrature on [0, inf)") {
    CHECK_REL(quadrature([](double t) { return std::exp(-t); }, 1e-12), 1.0, 1e-12);
    CHECK_REL(quadrature([](double t) { return std::sqrt(t) * std::exp(-t); }, 1e-12),
              std::sqrt(M_PI) / 2.0, 1e-12); // Gamma(3/2)
    // int t e^{-t}/(t+1) dt = 1 - e E1(1)
    CHECK_REL(quadrature([](double t) { return t * std::exp(-t) / (t + 1.0); }, 1e-12),
              0.40365263767680593, 1e-11);
    // endpoint singularity t^{-1/2}
    CHECK_REL(quadrature([](double t) { return std::exp(-t) / std::sqrt(t); }, 1e-12),
              std::sqrt(M_PI), 1e-11);
    CHECK_THROWS_AS(quadrature([](double) { return 1.0; }, 0.0), domain_error);
}
