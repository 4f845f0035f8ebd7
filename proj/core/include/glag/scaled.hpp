// Sign/log-magnitude scalars and phase/log-magnitude complex numbers.
//
// Quantities in this library routinely carry factors like Gamma(n+alpha+1) or
// exp(-2 sqrt(-z n)) at n in the thousands, far outside double range.  All
// evaluation paths therefore work with the natural log of the magnitude plus
// either a sign (real case) or a unit phase factor (complex case), and convert
// to plain doubles only at the surface.
#ifndef GLAG_SCALED_HPP
#define GLAG_SCALED_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace glag {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// |value| < exp(700) fits a double with headroom; used to gate conversions.
inline constexpr double safe_log_range = 700.0;

struct LogScaled {
    int sign = 0;            // -1, 0, +1
    double logmag = neg_inf; // ln|value|; meaningless when sign == 0

    constexpr LogScaled() = default;
    constexpr LogScaled(int s, double lm) : sign(s), logmag(s == 0 ? neg_inf : lm) {}

    static LogScaled of(double x) {
        if (x == 0.0) return {};
        return {x > 0.0 ? 1 : -1, std::log(std::abs(x))};
    }
    static constexpr LogScaled one() { return {1, 0.0}; }

    bool is_zero() const { return sign == 0; }
    bool positive() const { return sign > 0; }
    bool negative() const { return sign < 0; }

    // Underflows to 0 / overflows to +-inf outside the exp range.
    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(logmag);
    }
    bool finite_double() const { return sign == 0 || std::abs(logmag) < safe_log_range; }

    LogScaled operator-() const { return {-sign, logmag}; }

    friend LogScaled operator*(const LogScaled& a, const LogScaled& b) {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.sign * b.sign, a.logmag + b.logmag};
    }
    friend LogScaled operator/(const LogScaled& a, const LogScaled& b) {
        if (a.sign == 0) return {};
        return {a.sign * b.sign, a.logmag - b.logmag};
    }
    LogScaled& operator*=(const LogScaled& b) { return *this = *this * b; }
    LogScaled& operator/=(const LogScaled& b) { return *this = *this / b; }

    // log-sum-exp with sign handling; exact cancellation gives zero.
    friend LogScaled operator+(const LogScaled& a, const LogScaled& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        const LogScaled& big = (a.logmag >= b.logmag) ? a : b;
        const LogScaled& sml = (a.logmag >= b.logmag) ? b : a;
        const double d = sml.logmag - big.logmag; // <= 0
        if (big.sign == sml.sign) return {big.sign, big.logmag + std::log1p(std::exp(d))};
        const double m = -std::expm1(d); // 1 - exp(d) in [0, 1]
        if (m == 0.0) return {};
        return {big.sign, big.logmag + std::log(m)};
    }
    friend LogScaled operator-(const LogScaled& a, const LogScaled& b) { return a + (-b); }

    friend bool operator<(const LogScaled& a, const LogScaled& b) {
        if (a.sign != b.sign) return a.sign < b.sign;
        if (a.sign == 0) return false;
        return a.sign > 0 ? a.logmag < b.logmag : a.logmag > b.logmag;
    }
};

inline LogScaled exp_log(double logmag) { return {1, logmag}; }

inline LogScaled abs(const LogScaled& a) { return {a.sign == 0 ? 0 : 1, a.logmag}; }

// |a/b - 1| computed without leaving log scale; inf if b == 0 and a != 0.
inline double rel_diff(const LogScaled& a, const LogScaled& b) {
    if (b.sign == 0) return a.sign == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    const double r = (a.sign * b.sign) * std::exp(a.logmag - b.logmag);
    return std::abs(r - 1.0);
}

// Complex value as unit phase times exp(logmag).
struct LogComplex {
    std::complex<double> phase{0.0, 0.0}; // unit modulus, or 0 for the zero value
    double logmag = neg_inf;

    LogComplex() = default;
    LogComplex(std::complex<double> ph, double lm) : phase(ph), logmag(lm) {}
    LogComplex(const LogScaled& s)
        : phase(s.sign == 0 ? 0.0 : double(s.sign), 0.0), logmag(s.logmag) {}

    static LogComplex of(std::complex<double> z) {
        const double m = std::abs(z);
        if (m == 0.0) return {};
        return {z / m, std::log(m)};
    }

    bool is_zero() const { return phase == std::complex<double>(0.0, 0.0); }

    std::complex<double> value() const {
        if (is_zero()) return {0.0, 0.0};
        return phase * std::exp(logmag);
    }

    // Projects onto the real axis; the imaginary part of the phase is dropped.
    LogScaled real_part() const {
        if (is_zero() || phase.real() == 0.0) return {};
        return {phase.real() > 0 ? 1 : -1, logmag + std::log(std::abs(phase.real()))};
    }

    friend LogComplex operator*(const LogComplex& a, const LogComplex& b) {
        if (a.is_zero() || b.is_zero()) return {};
        auto ph = a.phase * b.phase;
        const double m = std::abs(ph); // renormalize drift
        return {ph / m, a.logmag + b.logmag + std::log(m)};
    }
    friend LogComplex operator/(const LogComplex& a, const LogComplex& b) {
        if (a.is_zero()) return {};
        auto ph = a.phase / b.phase;
        const double m = std::abs(ph);
        return {ph / m, a.logmag - b.logmag + std::log(m)};
    }
    friend LogComplex operator*(const LogComplex& a, std::complex<double> c) {
        return a * LogComplex::of(c);
    }
    friend LogComplex operator*(std::complex<double> c, const LogComplex& a) {
        return a * LogComplex::of(c);
    }

    LogComplex operator-() const { return {-phase, logmag}; }

    // Addition rebases both terms to the larger magnitude.
    friend LogComplex operator+(const LogComplex& a, const LogComplex& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const LogComplex& big = (a.logmag >= b.logmag) ? a : b;
        const LogComplex& sml = (a.logmag >= b.logmag) ? b : a;
        const std::complex<double> v = big.phase + sml.phase * std::exp(sml.logmag - big.logmag);
        const double m = std::abs(v);
        if (m == 0.0) return {};
        return {v / m, big.logmag + std::log(m)};
    }
    friend LogComplex operator-(const LogComplex& a, const LogComplex& b) { return a + (-b); }
};

// a/b as an ordinary complex number (valid when the ratio is in double range).
inline std::complex<double> ratio(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero()) return {0.0, 0.0};
    return (a.phase / b.phase) * std::exp(a.logmag - b.logmag);
}

inline double rel_diff(const LogComplex& a, const LogComplex& b) {
    if (b.is_zero()) return a.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
    return std::abs(ratio(a, b) - 1.0);
}

} // namespace glag

#endif
