#ifndef QDECAY_DETAIL_LORENTZ_TAIL_HPP
#define QDECAY_DETAIL_LORENTZ_TAIL_HPP

#include "qdecay/quadrature.hpp"

namespace qdecay::detail {

/// Closed form of int_b^infinity exp(-i v t) / (v^2 + a^2) dv for a, b > 0
/// and t >= 0, via the scaled complex exponential integral. Continuous down
/// to t = 0 where it equals the tail mass atan(a/b)/a.
quadrature::Complex lorentz_fourier_tail(double b, double a, double t);

/// int_b^infinity dv / (v^2 + a^2) = atan(a/b)/a.
double lorentz_tail_mass(double b, double a);

} // namespace qdecay::detail

#endif
