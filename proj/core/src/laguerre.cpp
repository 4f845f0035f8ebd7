#include "glag/laguerre.hpp"

#include <cmath>

#include "glag/errors.hpp"
#include "glag/special.hpp"

namespace glag {

RecurrenceCoeffs laguerre_recurrence_coeffs(int n, double alpha) {
    if (n < 0) throw domain_error("laguerre_recurrence_coeffs: requires n >= 0");
    return {2.0 * n + alpha + 1.0, n * (n + alpha)};
}

LaguerreSequence eval_monic_laguerre(int n, double alpha, std::complex<double> z) {
    if (n < 0) throw domain_error("eval_monic_laguerre: requires n >= 0");
    if (!(alpha > -1.0)) throw domain_error("eval_monic_laguerre: requires alpha > -1");
    LaguerreSequence seq;
    seq.alpha = alpha;
    seq.z = z;
    seq.values.reserve((size_t)n + 1);
    seq.values.push_back(LogComplex::of(1.0));
    if (n == 0) return seq;
    seq.values.push_back(LogComplex::of(z - alpha - 1.0));
    for (int k = 1; k < n; ++k) {
        const auto [beta, gamma] = laguerre_recurrence_coeffs(k, alpha);
        const LogComplex next =
            LogComplex::of(z - beta) * seq.values[(size_t)k] -
            LogComplex::of(gamma) * seq.values[(size_t)k - 1];
        seq.values.push_back(next);
    }
    return seq;
}

namespace {
LogComplex flip_scale(int n, const LogComplex& v, double sign_of_exponent) {
    // multiply by (-1)^n (n!)^{+-1}
    const LogComplex parity{std::complex<double>(n % 2 == 0 ? 1.0 : -1.0, 0.0), 0.0};
    return v * parity * LogComplex(std::complex<double>(1.0, 0.0),
                                   sign_of_exponent * log_gamma(n + 1.0));
}
} // namespace

LogComplex monic_to_standard(int n, const LogComplex& v) { return flip_scale(n, v, -1.0); }
LogComplex standard_to_monic(int n, const LogComplex& v) { return flip_scale(n, v, +1.0); }
LogScaled monic_to_standard(int n, const LogScaled& v) {
    return monic_to_standard(n, LogComplex(v)).real_part();
}
LogScaled standard_to_monic(int n, const LogScaled& v) {
    return standard_to_monic(n, LogComplex(v)).real_part();
}

LogScaled monic_norm_sq(int n, double alpha) {
    if (n < 0) throw domain_error("monic_norm_sq: requires n >= 0");
    if (!(alpha > -1.0)) throw domain_error("monic_norm_sq: requires alpha > -1");
    return {1, log_gamma(n + alpha + 1.0) + log_gamma(n + 1.0)};
}

std::complex<double> ratio_pi(int n, double alpha, const ComplexPoint& z) {
    const LaguerreSequence seq = eval_monic_laguerre(n + 1, alpha, z.z());
    if (seq[n].is_zero())
        throw degenerate_error("ratio_pi: |Lhat_n(z)| underflowed");
    return ratio(seq[n + 1], seq[n]);
}

std::complex<double> ratio_pi_asymptotic(int n, double alpha, std::complex<double> z) {
    const double m = n + 1.0;
    const std::complex<double> root = std::sqrt(-z * m); // principal; -z off (-inf,0]
    return -m - root + (2.0 * z - 2.0 * alpha + 1.0) / 4.0;
}

PerronApprox perron_monic(int n, double alpha, const ComplexPoint& z) {
    const std::complex<double> zz = z.z();
    const std::complex<double> log_mz = std::log(z.rotated()); // Log(-z), principal
    const std::complex<double> root = z.sqrt_minus_nz((double)n);
    const double p = -alpha / 2.0 - 0.25;
    // log of the full monic prefactor
    const double logmag = log_gamma(n + 1.0) - std::log(2.0 * std::sqrt(M_PI)) +
                          zz.real() / 2.0 + p * log_mz.real() +
                          (alpha / 2.0 - 0.25) * std::log((double)n) + 2.0 * root.real();
    const double argphase = zz.imag() / 2.0 + p * log_mz.imag() + 2.0 * root.imag() +
                            (n % 2 == 0 ? 0.0 : M_PI);
    return {LogComplex(std::polar(1.0, argphase), logmag), 1.0 / std::sqrt((double)n)};
}

double fejer_theta(int n, double alpha, double x) {
    return 2.0 * std::sqrt((double)n * x) - (alpha / 2.0 + 0.25) * M_PI;
}

LogScaled fejer_monic(int n, double alpha, double x) {
    if (!(x > 0.0)) throw domain_error("fejer_monic: requires x > 0");
    const double ct = std::cos(fejer_theta(n, alpha, x));
    if (ct == 0.0) return {};
    const double logmag = log_gamma(n + 1.0) + (alpha / 2.0 - 0.25) * std::log((double)n) +
                          x / 2.0 - 0.5 * std::log(M_PI) -
                          (alpha / 2.0 + 0.25) * std::log(x) + std::log(std::abs(ct));
    int sign = (n % 2 == 0 ? 1 : -1) * (ct > 0.0 ? 1 : -1);
    return {sign, logmag};
}

std::complex<double> bessel_limit(double alpha, std::complex<double> z) {
    std::complex<long double> term =
        std::exp((long double)-log_gamma(alpha + 1.0));
    std::complex<long double> sum = term;
    const std::complex<long double> zl((long double)z.real(), (long double)z.imag());
    for (int k = 1; k < 500; ++k) {
        term *= -zl / ((long double)k * ((long double)k + (long double)alpha));
        sum += term;
        if (std::abs(term) < 1e-20L * std::abs(sum) && k > 3) break;
    }
    return {(double)sum.real(), (double)sum.imag()};
}

MehlerHeineLaguerre mehler_heine_laguerre(int n, double alpha, std::complex<double> z) {
    const LaguerreSequence seq = eval_monic_laguerre(n, alpha, z / (double)n);
    const LogComplex standard = monic_to_standard(n, seq[n]);
    const LogComplex scaled =
        standard * LogComplex(std::complex<double>(1.0, 0.0), -alpha * std::log((double)n));
    return {scaled.value(), bessel_limit(alpha, z)};
}

std::vector<double> laguerre_coefficients(int n, double alpha) {
    if (n < 0) throw domain_error("laguerre_coefficients: requires n >= 0");
    std::vector<double> prev{1.0};
    if (n == 0) return prev;
    std::vector<double> cur{-alpha - 1.0, 1.0};
    for (int k = 1; k < n; ++k) {
        const auto [beta, gamma] = laguerre_recurrence_coeffs(k, alpha);
        std::vector<double> next((size_t)k + 2, 0.0);
        for (size_t j = 0; j < cur.size(); ++j) {
            next[j + 1] += cur[j];        // x * Lhat_k
            next[j] -= beta * cur[j];     // -beta_k Lhat_k
        }
        for (size_t j = 0; j < prev.size(); ++j) next[j] -= gamma * prev[j];
        prev.swap(cur);
        cur.swap(next);
    }
    return cur;
}

} // namespace glag
