#include "doctest.h"

#include <cmath>
#include <random>

#include "glag/complex_point.hpp"
#include "glag/scaled.hpp"
#include "test_util.hpp"

using glag::LogComplex;
using glag::LogScaled;

TEST_CASE("LogScaled encode/decode round trip") {
    // A 53-bit logmag cannot reproduce a double to 1 ulp once |logmag| is
    // large: the granularity of exp(logmag) is ~|logmag| ulps.  The bound
    // checked here is the representation limit, not implementation slack.
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mag(-690.0, 690.0), mant(-1.0, 1.0);
    for (int i = 0; i < 20000; ++i) {
        const double x = mant(rng) * std::exp(mag(rng));
        const LogScaled e = LogScaled::of(x);
        const double bound = std::max(4.0, 4.0 * std::abs(e.logmag)) * 2.3e-16;
        CHECK(testutil::rel_err(e.value(), x) <= bound);
    }
    // Near logmag ~ 0 the round trip is ulp-exact.
    for (int i = 0; i < 2000; ++i) {
        const double x = mant(rng) * 2.5;
        if (x == 0.0) continue;
        CHECK(testutil::rel_err(LogScaled::of(x).value(), x) <= 4.4e-16);
    }
    CHECK(LogScaled::of(0.0).is_zero());
    CHECK(LogScaled::of(0.0).value() == 0.0);
}

TEST_CASE("LogScaled multiplicative group law") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mag(-600.0, 600.0), mant(0.1, 1.0), sgn(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const double lx = mag(rng), ly = mag(rng);
        if (std::abs(lx + ly) > 690.0) continue; // product representable
        const double x = (sgn(rng) < 0.5 ? -1 : 1) * mant(rng) * std::exp(lx);
        const double y = (sgn(rng) < 0.5 ? -1 : 1) * mant(rng) * std::exp(ly);
        const double got = (LogScaled::of(x) * LogScaled::of(y)).value();
        // absolute log error scales with the *input* logmags
        const double bound = (std::abs(lx) + std::abs(ly) + 16.0) * 2.5e-16;
        CHECK(testutil::rel_err(got, x * y) <= bound);
    }
    // Division inverts multiplication exactly in logmag.
    const LogScaled a{1, 123.456}, b{-1, -77.7};
    const LogScaled q = a * b / b;
    CHECK(q.sign == a.sign);
    CHECK(q.logmag == doctest::Approx(a.logmag).epsilon(1e-15));
}

TEST_CASE("LogScaled addition handles signs, magnitudes, cancellation") {
    // same-sign addition never overflows for huge logmag
    const LogScaled big{1, 1e6}, big2{1, 1e6};
    const LogScaled s = big + big2;
    CHECK(s.sign == 1);
    CHECK(s.logmag == doctest::Approx(1e6 + std::log(2.0)));

    // mixed signs
    const LogScaled x = LogScaled::of(3.0) + LogScaled::of(-2.0);
    CHECK(x.value() == doctest::Approx(1.0));
    const LogScaled y = LogScaled::of(2.0) - LogScaled::of(3.0);
    CHECK(y.value() == doctest::Approx(-1.0));

    // exact cancellation
    CHECK((LogScaled::of(5.5) - LogScaled::of(5.5)).is_zero());

    // scale-mixed sums keep the dominant term
    const LogScaled mix = LogScaled{1, 500.0} + LogScaled::of(1.0);
    CHECK(mix.logmag == doctest::Approx(500.0));

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> v(-50.0, 50.0);
    for (int i = 0; i < 5000; ++i) {
        const double x1 = v(rng), x2 = v(rng);
        if (x1 + x2 == 0.0) continue;
        // cancellation amplifies the representation error of the inputs
        const double amp = (std::abs(x1) + std::abs(x2)) / std::abs(x1 + x2);
        CHECK(testutil::rel_err((LogScaled::of(x1) + LogScaled::of(x2)).value(), x1 + x2) <=
              1e-14 + 3e-15 * amp);
    }
}

TEST_CASE("LogComplex mirrors complex arithmetic") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> v(-3.0, 3.0);
    for (int i = 0; i < 3000; ++i) {
        const std::complex<double> a{v(rng), v(rng)}, b{v(rng), v(rng)};
        if (std::abs(a) < 1e-6 || std::abs(b) < 1e-6) continue;
        CHECK(testutil::rel_err((LogComplex::of(a) * LogComplex::of(b)).value(), a * b) <= 1e-14);
        CHECK(testutil::rel_err((LogComplex::of(a) / LogComplex::of(b)).value(), a / b) <= 1e-14);
        const std::complex<double> sum = a + b;
        if (std::abs(sum) > 1e-3)
            CHECK(testutil::rel_err((LogComplex::of(a) + LogComplex::of(b)).value(), sum) <= 1e-13);
    }
    // real projection round trip
    const LogScaled neg = LogScaled::of(-42.0);
    CHECK(LogComplex(neg).real_part().value() == doctest::Approx(-42.0));
    // huge-magnitude ratio stays finite
    const LogComplex h1{std::polar(1.0, 0.3), 4000.0}, h2{std::polar(1.0, 0.1), 4000.5};
    CHECK(std::abs(glag::ratio(h1, h2)) == doctest::Approx(std::exp(-0.5)));
}

TEST_CASE("ComplexPoint rejects the cut and fixes the branch rule") {
    CHECK_THROWS_AS(glag::ComplexPoint(std::complex<double>(2.0, 0.0)), glag::domain_error);
    CHECK_THROWS_AS(glag::ComplexPoint(std::complex<double>(0.0, 0.0)), glag::domain_error);
    CHECK_NOTHROW(glag::ComplexPoint(-1e-12));

    // +pi i for arg z in (-pi, 0], -pi i for arg z in (0, pi]
    CHECK(glag::ComplexPoint(std::complex<double>(1.0, -0.5)).rotation_sign() == +1);
    CHECK(glag::ComplexPoint(std::complex<double>(1.0, 0.5)).rotation_sign() == -1);
    CHECK(glag::ComplexPoint(-2.0).rotation_sign() == -1); // arg = pi

    // rotated value is -z with principal powers continuous off the cut
    const glag::ComplexPoint zm(-3.0);
    CHECK(zm.rotated() == std::complex<double>(3.0, 0.0));
    CHECK(zm.minus_z_pow(0.5).real() == doctest::Approx(std::sqrt(3.0)));
    CHECK(zm.minus_z_pow(0.5).imag() == doctest::Approx(0.0));
    const glag::ComplexPoint zc(std::complex<double>(1.0, 2.0));
    CHECK(zc.sqrt_minus_nz(4.0).real() > 0.0);
}
