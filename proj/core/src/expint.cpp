// The scaled complex exponential integral lives in quadrature.cpp alongside
// its only consumers' plumbing; this translation unit holds the Lorentzian
// tail transform built on top of it, shared by spectral and survival code.

#include "qdecay/detail/lorentz_tail.hpp"

#include <cmath>

namespace qdecay::detail {

using quadrature::Complex;

Complex lorentz_fourier_tail(double b, double a, double t) {
    // int_b^inf exp(-i v t) / (v^2 + a^2) dv, a > 0, b > 0, t >= 0.
    if (t < 0.0) throw DomainError("lorentz_fourier_tail expects t >= 0");
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("lorentz_fourier_tail expects a > 0, b > 0");
    if (t == 0.0) return Complex(std::atan(a / b) / a, 0.0);

    // Partial fractions 1/(v^2+a^2) = [1/(v-ia) - 1/(v+ia)] / (2ia) and
    // int_z^inf exp(-i w t)/w dw = E1(i z t) give
    //   exp(-i b t) [G(at + ibt) - G(-at + ibt)] / (2ia),
    // with G(z) = exp(z) E1(z) evaluated in scaled form.
    const Complex zp(a * t, b * t);
    const Complex zm(-a * t, b * t);
    const Complex g = quadrature::detail::exp_e1_scaled(zp) -
                      quadrature::detail::exp_e1_scaled(zm);
    const Complex phase = std::exp(Complex(0.0, -b * t));
    return phase * g / Complex(0.0, 2.0 * a);
}

double lorentz_tail_mass(double b, double a) {
    return std::atan(a / b) / a;
}

} // namespace qdecay::detail
