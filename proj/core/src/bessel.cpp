#include "glag/special.hpp"

#include <cmath>

#include "glag/errors.hpp"

namespace glag {
namespace {

// ---------------------------------------------------------------- Bessel J

// Ascending series sum_k (-1)^k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)).
// Long double accumulation: the alternating terms peak near k = x/2, and the
// extra 11 mantissa bits keep the cancellation harmless up to x = 18.
double bessel_j_series(double nu, double x) {
    const long double q = (long double)x * 0.5L;
    const long double q2 = q * q;
    long double term = std::exp((long double)nu * std::log(q) - (long double)log_gamma(nu + 1.0));
    long double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= -q2 / ((long double)k * ((long double)nu + k));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) && k > 4) break;
    }
    return (double)sum;
}

// Hankel large-argument expansion, DLMF 10.17.3:
//   J_nu(x) ~ sqrt(2/(pi x)) [ cos w sum (-1)^k a_{2k}/x^{2k}
//                            - sin w sum (-1)^k a_{2k+1}/x^{2k+1} ],
// w = x - nu pi/2 - pi/4, with the same a_l(nu) as the K expansion.
double bessel_j_hankel(double nu, double x) {
    long double P = 0.0L, Q = 0.0L;
    long double term = 1.0L; // a_l(nu)/x^l, running
    long double prev = std::fabs((long double)1.0);
    for (int l = 0; l < 60; ++l) {
        if (l > 0) {
            const long double num = 4.0L * nu * nu - (2.0L * l - 1.0L) * (2.0L * l - 1.0L);
            term *= num / (8.0L * l * (long double)x);
        }
        const long double mag = std::fabs(term);
        if (l > 2 && mag > prev) break; // asymptotic tail started growing
        prev = mag;
        const int r = l % 4;
        if (r == 0) P += term;
        else if (r == 1) Q += term;
        else if (r == 2) P -= term;
        else Q -= term;
        if (mag < 1e-20L) break;
    }
    const long double w = (long double)x - nu * M_PI / 2.0L - M_PI / 4.0L;
    return (double)(std::sqrt(2.0L / (M_PI * (long double)x)) * (std::cos(w) * P - std::sin(w) * Q));
}

// ---------------------------------------------------------------- Bessel K

// log(cosh(y)) without overflow.
long double log_cosh(long double y) {
    const long double a = std::fabs(y);
    return a + std::log1p(std::exp(-2.0L * a)) - 0.69314718055994530942L;
}

// Exponent of the K integrand, phi(t) = -xr cosh t + log cosh(nu t).
long double k_exponent(double nu, double xr, long double t) {
    return -(long double)xr * std::cosh(t) + log_cosh((long double)nu * t);
}

// Location of the integrand maximum: solves xr sinh t = nu tanh(nu t).
long double k_peak(double nu, double xr) {
    const long double bound = std::asinh(std::fabs((long double)nu) / xr);
    if (bound <= 0.0L) return 0.0L;
    long double lo = 0.0L, hi = bound;
    for (int i = 0; i < 80; ++i) {
        const long double mid = 0.5L * (lo + hi);
        const long double d = -(long double)xr * std::sinh(mid) +
                              nu * std::tanh((long double)nu * mid);
        (d > 0.0L ? lo : hi) = mid;
    }
    return 0.5L * (lo + hi);
}

// Shared driver: integrates w(t) * exp(phi(t) - phi_max) over t >= 0 by a
// doubling trapezoid rule (spectrally accurate for these smooth, doubly
// decaying integrands).  w is the unit-magnitude complex factor, identically
// 1 in the real case.
template <typename Weight>
std::pair<std::complex<long double>, long double>
k_integral(double nu, double xr, const Weight& w) {
    const long double tpk = k_peak(nu, xr);
    const long double fmax = k_exponent(nu, xr, tpk);

    auto g = [&](long double t) -> std::complex<long double> {
        const long double e = k_exponent(nu, xr, t) - fmax;
        if (e < -50.0L) return {0.0L, 0.0L};
        return w(t) * std::exp(e);
    };

    // locate the right cutoff
    long double T = tpk + 1.0L;
    while (k_exponent(nu, xr, T) - fmax > -50.0L) T *= 1.5L;

    long double h = T / 16.0L;
    std::complex<long double> sum = 0.5L * g(0.0L);
    for (long double t = h; t < T; t += h) sum += g(t);
    std::complex<long double> prev = sum * h;
    for (int level = 0; level < 12; ++level) {
        h *= 0.5L;
        std::complex<long double> add{0.0L, 0.0L};
        for (long double t = h; t < T; t += 2.0L * h) add += g(t);
        sum += add;
        const std::complex<long double> cur = sum * h;
        if (std::abs(cur - prev) <= 1e-17L * std::abs(cur)) return {cur, fmax};
        prev = cur;
    }
    return {prev, fmax};
}

} // namespace

double bessel_j(double nu, double x) {
    if (!(nu > -1.0)) throw domain_error("bessel_j: requires nu > -1");
    if (!(x >= 0.0)) throw domain_error("bessel_j: requires x >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    return x <= 18.0 ? bessel_j_series(nu, x) : bessel_j_hankel(nu, x);
}

LogScaled bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw domain_error("bessel_k: requires x > 0");
    auto unit = [](long double) -> std::complex<long double> { return {1.0L, 0.0L}; };
    const auto [integral, fmax] = k_integral(nu, x, unit);
    return {1, (double)(fmax + std::log(integral.real()))};
}

LogComplex bessel_k_complex(double nu, std::complex<double> x) {
    if (!(x.real() > 0.0)) throw domain_error("bessel_k_complex: requires Re x > 0");
    if (x.imag() == 0.0) return LogComplex(bessel_k(nu, x.real()));
    const std::complex<long double> i_xi(0.0L, (long double)x.imag());
    auto osc = [&](long double t) -> std::complex<long double> {
        // exp(-i Im(x) cosh t); the real part of the exponent lives in phi
        return std::exp(-i_xi * std::cosh(t));
    };
    const auto [integral, fmax] = k_integral(nu, x.real(), osc);
    const long double m = std::abs(integral);
    const std::complex<long double> ph = integral / m;
    return {std::complex<double>((double)ph.real(), (double)ph.imag()),
            (double)(fmax + std::log(m))};
}

double bessel_k_asym_coeff(double nu, int l) {
    if (l < 0) throw domain_error("bessel_k_asym_coeff: requires l >= 0");
    double a = 1.0;
    for (int j = 1; j <= l; ++j)
        a *= (4.0 * nu * nu - (2.0 * j - 1.0) * (2.0 * j - 1.0)) / (8.0 * j);
    return a;
}

double bessel_k_asymptotic(double nu, double x, int L) {
    if (!(x > 0.0)) throw domain_error("bessel_k_asymptotic: requires x > 0");
    if (L < 1) throw domain_error("bessel_k_asymptotic: requires L >= 1");
    double sum = 0.0, term = 1.0;
    for (int l = 0; l < L; ++l) {
        if (l > 0)
            term *= (4.0 * nu * nu - (2.0 * l - 1.0) * (2.0 * l - 1.0)) / (8.0 * l * x);
        sum += term;
    }
    return std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) * sum;
}

} // namespace glag
