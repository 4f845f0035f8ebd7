// A point of the cut plane C \ [0, inf) with the branch bookkeeping needed
// for (-z)^p and the z e^{+-i pi} rotation used by the second-kind functions.
#ifndef GLAG_COMPLEX_POINT_HPP
#define GLAG_COMPLEX_POINT_HPP

#include <cmath>
#include <complex>

#include "glag/errors.hpp"

namespace glag {

class ComplexPoint {
public:
    explicit ComplexPoint(std::complex<double> z) : z_(z) {
        if (z.imag() == 0.0 && z.real() >= 0.0)
            throw domain_error("ComplexPoint: z must lie off the cut [0, inf)");
    }
    explicit ComplexPoint(double x) : ComplexPoint(std::complex<double>(x, 0.0)) {}

    std::complex<double> z() const { return z_; }
    double arg() const { return std::arg(z_); } // in (-pi, pi]; pi on the negative axis

    // e^{+pi i} rotation for -pi < arg z <= 0, e^{-pi i} for 0 < arg z <= pi.
    // Either way z e^{+-pi i} lands in the right half plane cut along (-inf, 0].
    int rotation_sign() const { return (arg() <= 0.0) ? +1 : -1; }

    // z e^{+-pi i} with the rule above; exactly -z when z is real negative.
    std::complex<double> rotated() const {
        if (is_real_negative()) return {-z_.real(), 0.0};
        return -z_;
    }

    bool is_real_negative() const { return z_.imag() == 0.0 && z_.real() < 0.0; }

    // Principal (-z)^p; -z is off (-inf, 0], so this is continuous in z.
    std::complex<double> minus_z_pow(double p) const {
        return std::pow(rotated(), p);
    }

    // Principal sqrt(-n z); real part is positive off the cut.
    std::complex<double> sqrt_minus_nz(double n) const {
        return std::sqrt(n * rotated());
    }

private:
    std::complex<double> z_;
};

} // namespace glag

#endif
