#include "glag/special.hpp"

#include <cmath>

#include "glag/errors.hpp"

namespace glag {
namespace {

// Exponent of the Laplace integrand after t = t* e^s (Jacobian absorbed):
//   m(s) = -x t + a ln t + (b-a-1) ln(1+t),  t = tstar e^s.
struct UExponent {
    double a, b, x;
    long double tstar;
    long double operator()(long double s) const {
        const long double t = tstar * std::exp(s);
        return -(long double)x * t + (long double)a * std::log(t) +
               ((long double)b - a - 1.0L) * std::log1p(t);
    }
};

} // namespace

LogScaled kummer_u(double a, double b, double x, double tol) {
    if (!(a > 0.0)) throw domain_error("kummer_u: requires a > 0");
    if (!(x > 0.0)) throw domain_error("kummer_u: requires x > 0");
    if (!(tol > 0.0)) throw domain_error("kummer_u: tol must be positive");

    // Peak of the integrand: x t^2 + (x + 1 - b) t - a = 0, positive root.
    const long double p = (long double)x + 1.0L - (long double)b;
    const long double tstar =
        (-p + std::sqrt(p * p + 4.0L * (long double)x * (long double)a)) / (2.0L * (long double)x);

    const UExponent m{a, b, x, tstar};
    const long double mmax = m(0.0L);

    auto g = [&](long double s) -> long double {
        const long double e = m(s) - mmax;
        return e < -50.0L ? 0.0L : std::exp(e);
    };

    // Expand the window until the integrand is negligible at both ends.
    long double s_lo = -1.0L, s_hi = 1.0L;
    while (m(s_lo) - mmax > -50.0L) s_lo -= 1.0L;
    while (m(s_hi) - mmax > -50.0L) s_hi += 1.0L;

    long double h = (s_hi - s_lo) / 24.0L;
    long double sum = 0.5L * (g(s_lo) + g(s_hi));
    for (long double s = s_lo + h; s < s_hi - 0.5L * h; s += h) sum += g(s);
    long double prev = sum * h;
    double achieved = std::numeric_limits<double>::infinity();
    for (int level = 0; level < 14; ++level) {
        h *= 0.5L;
        long double add = 0.0L;
        for (long double s = s_lo + h; s < s_hi; s += 2.0L * h) add += g(s);
        sum += add;
        const long double cur = sum * h;
        achieved = (double)std::fabs((cur - prev) / cur);
        prev = cur;
        if (achieved <= tol)
            return {1, (double)(mmax + std::log(cur)) - log_gamma(a)};
    }
    throw convergence_error("kummer_u: quadrature failed its tolerance", achieved);
}

} // namespace glag
