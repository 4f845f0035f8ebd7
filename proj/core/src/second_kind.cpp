#include "glag/second_kind.hpp"

#include <algorithm>
#include <cmath>

#include "glag/errors.hpp"
#include "glag/laguerre.hpp"
#include "glag/quadrature.hpp"
#include "glag/special.hpp"

namespace glag {

LogScaled f0_second_kind(double alpha, double c, double tol) {
    if (!(alpha > -1.0)) throw domain_error("f0_second_kind: requires alpha > -1");
    if (!(c < 0.0)) throw domain_error("f0_second_kind: requires c < 0");
    return gamma_scaled(alpha + 1.0) * kummer_u(1.0, 1.0 - alpha, -c, tol);
}

TailSeed tail_seed(int n_start, double alpha, std::complex<double> z) {
    const double m = n_start + 1.0;
    const std::complex<double> value =
        -m + std::sqrt(-z * m) + (2.0 * z - 2.0 * alpha + 1.0) / 4.0;
    return {n_start, value, 3};
}

namespace {

// one backward sweep from depth n_start, filling r_0..r_nmax
void sweep_down(int nmax, int n_start, double alpha, std::complex<double> z,
                std::vector<std::complex<double>>& out) {
    std::complex<double> r = tail_seed(n_start, alpha, z).value;
    for (int k = n_start; k >= 1; --k) {
        const auto [beta, gamma] = laguerre_recurrence_coeffs(k, alpha);
        r = gamma / (z - beta - r);
        if (k - 1 <= nmax) out[(size_t)k - 1] = r;
    }
}

} // namespace

std::vector<std::complex<double>> ratio_r_sweep(int nmax, double alpha, const ComplexPoint& z,
                                                double tol) {
    if (nmax < 0) throw domain_error("ratio_r_sweep: requires nmax >= 0");
    if (!(tol > 0.0)) throw domain_error("ratio_r_sweep: tol must be positive");
    constexpr int depth_limit = 1 << 18;
    int depth = std::max(2 * (nmax + 1), 16);
    std::vector<std::complex<double>> cur((size_t)nmax + 1), next((size_t)nmax + 1);
    sweep_down(nmax, depth, alpha, z.z(), cur);
    while (depth <= depth_limit) {
        const int deeper = 2 * depth;
        sweep_down(nmax, deeper, alpha, z.z(), next);
        double worst = 0.0;
        for (size_t k = 0; k < cur.size(); ++k)
            worst = std::max(worst, std::abs(next[k] - cur[k]) / std::abs(next[k]));
        if (worst <= tol) return next;
        cur.swap(next);
        depth = deeper;
    }
    throw convergence_error("ratio_r_sweep: no Cauchy agreement by depth 2^18", tol);
}

std::complex<double> ratio_r_cf(int n, double alpha, const ComplexPoint& z, double tol) {
    return ratio_r_sweep(n, alpha, z, tol)[(size_t)n];
}

std::vector<LogScaled> eval_second_kind_seq(int nmax, double alpha, double c, double tol) {
    if (!(c < 0.0)) throw domain_error("eval_second_kind: requires c < 0");
    std::vector<LogScaled> out;
    out.reserve((size_t)nmax + 1);
    out.push_back(f0_second_kind(alpha, c, std::min(tol, 1e-12)));
    if (nmax == 0) return out;
    const auto r = ratio_r_sweep(nmax - 1, alpha, ComplexPoint(c), tol);
    for (int k = 0; k < nmax; ++k)
        out.push_back(out.back() * LogScaled::of(r[(size_t)k].real()));
    return out;
}

LogScaled eval_second_kind(int n, double alpha, double c, double tol) {
    return eval_second_kind_seq(n, alpha, c, tol).back();
}

double second_kind_quadrature_oracle(int n, double alpha, double c, double tol) {
    if (n < 0 || n > 30)
        throw domain_error("second_kind_quadrature_oracle: requires 0 <= n <= 30");
    if (!(c < 0.0)) throw domain_error("second_kind_quadrature_oracle: requires c < 0");
    if (!(alpha > -1.0)) throw domain_error("second_kind_quadrature_oracle: alpha > -1");

    auto integrand = [&](long double t) -> long double {
        if (t <= 0.0L) return 0.0L;
        if (t > 600.0L) return 0.0L; // e^{-t} is < 1e-260; beyond any oracle need
        // monic Laguerre by long double recurrence (fine for n <= 30, t <= 600)
        long double lm1 = 0.0L, l0 = 1.0L;
        for (int k = 0; k < n; ++k) {
            const auto [beta, gamma] = laguerre_recurrence_coeffs(k, alpha);
            const long double l1 = (t - (long double)beta) * l0 - (long double)gamma * lm1;
            lm1 = l0;
            l0 = l1;
        }
        const long double weight =
            std::exp((long double)alpha * std::log(t) - t);
        return l0 * weight / (t - (long double)c);
    };

    // Two-stage: a coarse pass fixes the scale, then the tolerance is applied
    // relative to it (callers compare this oracle in relative terms).
    const QuadResult coarse = integrate_semi_infinite(integrand, 1e30);
    const double scale = std::max(std::abs(coarse.value), 1e-300);
    const QuadResult fine = integrate_semi_infinite(integrand, tol * scale);
    if (!(fine.error_estimate <= tol * std::max(scale, std::abs(fine.value))))
        throw convergence_error("second_kind_quadrature_oracle: tolerance not reached",
                                fine.error_estimate);
    return fine.value;
}

std::complex<double> asymp_e_coeff(int j, double alpha, std::complex<double> z) {
    const double a = alpha;
    switch (j) {
    case 0:
        return 1.0;
    case 1:
        return (12.0 * a * a - 3.0 - 24.0 * z * (1.0 - a) - 4.0 * z * z) / 48.0;
    case 2: {
        const std::complex<double> z2 = z * z, z3 = z2 * z, z4 = z2 * z2;
        return (16.0 * z4 + 192.0 * (1.0 - a) * z3 +
                24.0 * (20.0 * a * a - 48.0 * a + 13.0) * z2 +
                144.0 * (a - 1.0) * (2.0 * a + 1.0) * (2.0 * a + 3.0) * z +
                9.0 * (4.0 * a * a - 1.0) * (4.0 * a * a - 9.0)) /
               4608.0;
    }
    default:
        throw domain_error("asymp_e_coeff: only e_0..e_2 are available");
    }
}

LogComplex asymp_second_kind(int n, double alpha, const ComplexPoint& z, int order) {
    if (order < 0 || order > 2)
        throw domain_error("asymp_second_kind: order must be 0, 1 or 2");
    const std::complex<double> zz = z.z();
    const std::complex<double> log_mz = std::log(z.rotated());
    const double m = n + 1.0;
    const std::complex<double> s = std::sqrt(z.rotated() * m); // sqrt(-z(n+1))
    const double p = alpha / 2.0 - 0.25;

    const double logmag = 0.5 * std::log(M_PI) + p * log_mz.real() - zz.real() / 2.0 -
                          2.0 * s.real() + log_gamma(n + alpha + 1.0) -
                          (alpha / 2.0 + 0.25) * std::log(m);
    const double argphase = p * log_mz.imag() - zz.imag() / 2.0 - 2.0 * s.imag() +
                            (n % 2 == 0 ? 0.0 : M_PI);

    std::complex<double> bracket = 1.0;
    if (order >= 1) bracket += asymp_e_coeff(1, alpha, zz) / s;
    if (order >= 2) bracket += asymp_e_coeff(2, alpha, zz) / (s * s);

    return LogComplex(std::polar(1.0, argphase), logmag) * LogComplex::of(bracket);
}

std::complex<double> WatsonExpansion::d(int m, std::complex<double> z) const {
    const double a = alpha;
    switch (m) {
    case 0:
        return 1.0;
    case 1:
        return (6.0 * (1.0 - a) - z) / 12.0;
    case 2:
        return (z * z - 12.0 * (1.0 - a) * z + 12.0 * (a - 1.0) * (3.0 * a - 2.0)) / 288.0;
    case 3:
        // The z^2 and z coefficients differ from some printed versions of this
        // expansion; the values below reproduce the Taylor series of f(tau)
        // (checked against a numeric Cauchy-integral oracle in the tests).
        return (-5.0 * z * z * z + 90.0 * (1.0 - a) * z * z -
                36.0 * (15.0 * a * a - 25.0 * a + 8.0) * z -
                1080.0 * a * (a - 1.0) * (a - 1.0)) /
               51840.0;
    default:
        throw domain_error("WatsonExpansion: only d_0..d_3 are hardcoded");
    }
}

WatsonExpansion watson_d_coeffs(double alpha) {
    if (!(alpha > -1.0)) throw domain_error("watson_d_coeffs: requires alpha > -1");
    return {alpha, 4};
}

LogComplex phi_m(int m, int n, double alpha, const ComplexPoint& z) {
    const std::complex<double> w = z.rotated(); // z e^{+-pi i}, off (-inf, 0]
    const std::complex<double> karg = 2.0 * std::sqrt(w * (double)(n + 1));
    if (!(karg.real() > 0.0))
        throw domain_error("phi_m: branch-rotated Bessel argument must have Re > 0");
    const std::complex<double> log_w = std::log(w);
    const double q = (m + alpha) / 2.0;

    const LogComplex power(std::polar(1.0, q * log_w.imag()),
                           q * (log_w.real() - std::log((double)(n + 1))));
    const LogComplex exp_w2(std::polar(1.0, w.imag() / 2.0), w.real() / 2.0);
    const LogComplex front(std::complex<double>(1.0, 0.0),
                           std::log(2.0) - log_gamma(n + 1.0));
    return front * exp_w2 * power * bessel_k_complex(m + alpha, karg);
}

} // namespace glag
