#include "glag/special.hpp"

#include <cmath>
#include <complex>

#include "glag/errors.hpp"

namespace glag {

std::complex<double> pfq_2f2(double a1, double a2, double b1, double b2,
                             std::complex<double> z, int nterms) {
    const bool terminating = (a1 <= 0.0 && a1 == std::floor(a1));
    if (nterms < 0 && !terminating)
        throw domain_error("pfq_2f2: need terminating a1 or an explicit nterms");
    const int K = terminating
                      ? (nterms < 0 ? (int)(-a1) + 1 : std::min(nterms, (int)(-a1) + 1))
                      : nterms;

    // Long double accumulation: for Re z > 0 the terms alternate against each
    // other and cancel by a factor of up to ~2^n before settling.
    std::complex<long double> zl((long double)z.real(), (long double)z.imag());
    std::complex<long double> term{1.0L, 0.0L};
    std::complex<long double> sum = term;
    for (int k = 0; k + 1 < K; ++k) {
        const double n1 = a1 + k, n2 = a2 + k;
        const double d1 = b1 + k, d2 = b2 + k;
        if (n1 == 0.0 || n2 == 0.0) break; // series terminated early
        if (d1 == 0.0 || d2 == 0.0)
            throw degenerate_error("pfq_2f2: denominator Pochhammer vanished without "
                                   "numerator cancellation");
        term *= (long double)n1 * (long double)n2 /
                ((long double)d1 * (long double)d2 * (long double)(k + 1)) * zl;
        sum += term;
    }
    return {(double)sum.real(), (double)sum.imag()};
}

} // namespace glag
