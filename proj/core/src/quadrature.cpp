#include "glag/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "glag/errors.hpp"
#include "glag/special.hpp"

namespace glag {
namespace {

constexpr long double k_pi_half = 1.57079632679489661923L;

// Node and weight of the tanh-sinh rule at abscissa t.  Returns the pair
// (u, w) with u in (0,1); u is computed from the complementary form on each
// side so that endpoint distances stay accurate down to denormals.
struct Node {
    long double u;
    long double w;
};

Node ts_node(long double t) {
    const long double s = k_pi_half * std::sinh(t);
    // 1/(1+e^{2s}) = distance to the upper endpoint; symmetric for the lower.
    const long double eneg = std::exp(-2.0L * std::fabs(s));
    const long double dist = eneg / (1.0L + eneg);
    const long double u = (t >= 0) ? 1.0L - dist : dist;
    const long double ch = std::cosh(s);
    const long double w = 0.5L * k_pi_half * std::cosh(t) / (ch * ch);
    return {u, w};
}

} // namespace

QuadResult tanh_sinh_01(const std::function<long double(long double)>& f, double tol,
                        int max_levels) {
    // Truncation in t: weights decay like exp(-pi sinh|t|); 9.0 covers even
    // weak endpoint singularities u^a with a > -1 at long double scale.
    const long double tmax = 9.0L;
    long evals = 0;

    auto term = [&](long double t) -> long double {
        const Node nd = ts_node(t);
        ++evals;
        const long double v = f(nd.u) * nd.w;
        return std::isfinite((double)v) ? v : 0.0L;
    };

    long double h = 1.0L;
    long double sum = term(0.0L);
    for (long double t = h; t <= tmax; t += h) sum += term(t) + term(-t);

    long double prev = sum * h;
    double err = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5L;
        long double add = 0.0L;
        for (long double t = h; t <= tmax; t += 2.0L * h) add += term(t) + term(-t);
        sum += add;
        const long double cur = sum * h;
        err = (double)std::fabs(cur - prev);
        prev = cur;
        if (err <= tol)
            return {(double)cur, err, level, evals};
    }
    return {(double)prev, err, max_levels, evals};
}

QuadResult integrate_semi_infinite(const std::function<long double(long double)>& f, double tol,
                                   int max_levels) {
    auto g = [&](long double u) -> long double {
        const long double om = 1.0L - u;
        return f(u / om) / (om * om);
    };
    return tanh_sinh_01(g, tol, max_levels);
}

GaussLaguerreRule gauss_laguerre(double alpha, int m) {
    if (!(alpha > -1.0)) throw domain_error("gauss_laguerre: requires alpha > -1");
    if (m < 1) throw domain_error("gauss_laguerre: requires m >= 1");
    Eigen::VectorXd diag(m), sub(std::max(m - 1, 0));
    for (int k = 0; k < m; ++k) diag(k) = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < m; ++k) sub(k - 1) = std::sqrt(k * (k + alpha));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const double mu0 = std::exp(log_gamma(alpha + 1.0));
    GaussLaguerreRule rule;
    rule.nodes.resize((size_t)m);
    rule.weights.resize((size_t)m);
    for (int k = 0; k < m; ++k) {
        rule.nodes[(size_t)k] = solver.eigenvalues()(k);
        const double v0 = solver.eigenvectors()(0, k);
        rule.weights[(size_t)k] = mu0 * v0 * v0;
    }
    return rule;
}

double quadrature(const std::function<double(double)>& f, double tol) {
    if (!(tol > 0.0)) throw domain_error("quadrature: tol must be positive");
    auto wrapped = [&](long double t) -> long double { return (long double)f((double)t); };
    const QuadResult r = integrate_semi_infinite(wrapped, tol);
    if (!(r.error_estimate <= tol))
        throw convergence_error("quadrature: tolerance not reached", r.error_estimate);
    return r.value;
}

} // namespace glag
