#include "glag/asymptotics.hpp"

#include <cmath>

#include "glag/errors.hpp"
#include "glag/laguerre.hpp"
#include "glag/special.hpp"

namespace glag {

double lambda_asymptotic_signed(int n, double alpha, double c, int upper) {
    return n + upper * std::sqrt(-c * n) + (2.0 * alpha - 2.0 * c - 1.0) / 4.0;
}

double lambda_asymptotic(int n, const GeronimusParams& params) {
    if (n < 1) throw domain_error("lambda_asymptotic: requires n >= 1");
    return lambda_asymptotic_signed(n, params.alpha, params.c, branch_upper(params.N));
}

CrossoverInfo crossover(const GeronimusParams& params) {
    const double D = std::exp(params.c) * std::pow(-params.c, -params.alpha) / (2.0 * M_PI);
    if (params.N == 0.0) return {D, std::nullopt};
    auto dominates = [&](long n) {
        return params.N * D * std::exp(4.0 * std::sqrt(-params.c * (double)n)) > 1.0;
    };
    if (dominates(1)) return {D, 1};
    // N D e^{4 sqrt(-cn)} > 1  <=>  n > (log(1/(ND)) / 4)^2 / (-c)
    const double x = std::log(1.0 / (params.N * D)) / 4.0;
    long n = (long)std::floor(x * x / (-params.c));
    while (!dominates(n + 1)) ++n;
    while (n >= 1 && dominates(n)) --n;
    return {D, n + 1};
}

LogComplex strong_outer_Q_signed(int n, double alpha, double c, int upper,
                                 const ComplexPoint& z) {
    const std::complex<double> zz = z.z();
    const std::complex<double> log_mz = std::log(z.rotated());
    const std::complex<double> root = z.sqrt_minus_nz((double)n);
    const double p = -alpha / 2.0 - 0.25;
    const double logmag = log_gamma(n + 1.0) - std::log(2.0 * std::sqrt(M_PI)) +
                          zz.real() / 2.0 + 2.0 * root.real() + p * log_mz.real() +
                          (alpha / 2.0 - 0.75) * std::log((double)n);
    const double argphase =
        zz.imag() / 2.0 + 2.0 * root.imag() + p * log_mz.imag() + (n % 2 == 0 ? 0.0 : M_PI);
    const std::complex<double> factor =
        std::sqrt(z.rotated()) - (double)upper * std::sqrt(-c);
    return LogComplex(std::polar(1.0, argphase), logmag) * LogComplex::of(factor);
}

LogComplex strong_outer_Q(int n, const GeronimusParams& params, const ComplexPoint& z) {
    return strong_outer_Q_signed(n, params.alpha, params.c, branch_upper(params.N), z);
}

std::complex<double> relative_Q_signed(int n, double /*alpha*/, double c, int upper,
                                       const ComplexPoint& z) {
    const std::complex<double> w = std::sqrt(z.rotated()) - (double)upper * std::sqrt(-c);
    return w / std::sqrt((double)n) - w * w / (2.0 * n);
}

std::complex<double> relative_Q(int n, const GeronimusParams& params, const ComplexPoint& z) {
    return relative_Q_signed(n, params.alpha, params.c, branch_upper(params.N), z);
}

InnerApprox inner_Q_signed(int n, double alpha, double c, int upper, double x) {
    if (!(x > 0.0)) throw domain_error("inner_Q: requires x > 0");
    const double theta = fejer_theta(n, alpha, x);
    const double bracket =
        std::sqrt(x) * std::sin(theta) + (double)upper * std::sqrt(-c) * std::cos(theta);
    const double logmag = log_gamma(n + 1.0) + (alpha / 2.0 - 0.75) * std::log((double)n) +
                          x / 2.0 - 0.5 * std::log(M_PI) - (alpha / 2.0 + 0.25) * std::log(x);
    const LogScaled prefactor{n % 2 == 0 ? -1 : 1, logmag}; // (-1)^{n+1}
    LogScaled value{};
    if (bracket != 0.0)
        value = prefactor * LogScaled::of(bracket);
    return {value, prefactor, bracket, theta, std::sqrt(x - c)};
}

InnerApprox inner_Q(int n, const GeronimusParams& params, double x) {
    return inner_Q_signed(n, params.alpha, params.c, branch_upper(params.N), x);
}

MehlerHeineQ mehler_heine_Q(int n, const LambdaTable& table, std::complex<double> z) {
    const double alpha = table.params().alpha;
    const LogComplex q = eval_Q(n, table, z / (double)n);
    const LogComplex parity{std::complex<double>(n % 2 == 0 ? 1.0 : -1.0, 0.0), 0.0};
    const LogComplex scale{std::complex<double>(1.0, 0.0),
                           -log_gamma(n + 1.0) - (alpha - 0.5) * std::log((double)n)};
    const std::complex<double> scaled = (q * parity * scale).value();
    const double s = -branch_upper(table.params().N) * std::sqrt(-table.params().c);
    return {scaled, s * bessel_limit(alpha, z)};
}

MehlerHeineQ mehler_heine_Q(int n, const GeronimusParams& params, std::complex<double> z) {
    return mehler_heine_Q(n, LambdaTable(params, std::max(n, 1)), z);
}

CoeffRatios recurrence_coeff_asymptotic_signed(int n, double c, int upper) {
    const double n32 = std::pow((double)n, 1.5);
    return {1.0 - 1.0 / (2.0 * n) - upper * std::sqrt(-c) / (4.0 * n32),
            1.0 + 1.0 / n - upper * std::sqrt(-c) / (2.0 * n32)};
}

CoeffRatios recurrence_coeff_asymptotic(int n, const GeronimusParams& params) {
    if (n < 1) throw domain_error("recurrence_coeff_asymptotic: requires n >= 1");
    return recurrence_coeff_asymptotic_signed(n, params.c, branch_upper(params.N));
}

OrderFit estimate_order(const std::vector<double>& n_grid, const std::vector<double>& errors) {
    if (n_grid.size() < 4 || n_grid.size() != errors.size())
        throw degenerate_error("estimate_order: need >= 4 matched grid points");
    for (double e : errors)
        if (!(e > 0.0)) throw degenerate_error("estimate_order: errors must be positive");

    const size_t m = n_grid.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < m; ++i) {
        const double x = std::log(n_grid[i]), y = std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double denom = m * sxx - sx * sx;
    const double slope = (m * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / m;

    double ss_res = 0, ss_tot = 0;
    const double ymean = sy / m;
    for (size_t i = 0; i < m; ++i) {
        const double y = std::log(errors[i]);
        const double yhat = intercept + slope * std::log(n_grid[i]);
        ss_res += (y - yhat) * (y - yhat);
        ss_tot += (y - ymean) * (y - ymean);
    }
    bool monotone = true;
    for (size_t i = 0; i + 1 < m; ++i)
        if (!(errors[i + 1] < errors[i])) monotone = false;

    return {n_grid, errors, -slope, ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0, monotone};
}

std::vector<int> dyadic_grid(int base, int count) {
    std::vector<int> g;
    g.reserve((size_t)count);
    for (int k = 0; k < count; ++k) g.push_back(base << k);
    return g;
}

} // namespace glag
