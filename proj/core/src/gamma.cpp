#include "glag/special.hpp"

#include <cmath>

#include "glag/errors.hpp"

namespace glag {
namespace {

// Lanczos g = 7, n = 9 coefficient set (Godfrey/Pugh; also used by GSL and
// Numerical Recipes), relative error ~2e-16 over the positive axis.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double log_gamma_lanczos(double x) {
    // valid for x > 0
    double acc = lanczos_c[0];
    for (int i = 1; i < 9; ++i) acc += lanczos_c[i] / (x - 1.0 + i);
    const double t = x + lanczos_g - 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (x - 0.5) * std::log(t) - t + std::log(acc);
}

// B_{2k}/(2k(2k-1)) for k = 1..8.
constexpr double stirling_c[8] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

double log_gamma_stirling(double x) {
    const double lx = std::log(x);
    double corr = 0.0;
    const double x2 = x * x;
    double p = x;
    for (int k = 0; k < 8; ++k) {
        corr += stirling_c[k] / p;
        p *= x2;
    }
    return (x - 0.5) * lx - x + 0.5 * std::log(2.0 * M_PI) + corr;
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw domain_error("log_gamma: requires x > 0");
    return x < 20.0 ? log_gamma_lanczos(x) : log_gamma_stirling(x);
}

LogScaled gamma_scaled(double x) { return {1, log_gamma(x)}; }

} // namespace glag
