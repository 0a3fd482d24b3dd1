#ifndef QDECAY_QUADRATURE_HPP
#define QDECAY_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "qdecay/errors.hpp"

// Numerical integration engines shared by the physics modules: adaptive
// Gauss-Kronrod quadrature (15-point), improper integrals with power-law
// tail extrapolation, phase-resolved oscillatory Fourier integrals, and a
// dense-grid transform for evaluating one integrand at many time points.

namespace qdecay::quadrature {

using Complex = std::complex<double>;
using RealFn = std::function<double(double)>;
using ComplexFn = std::function<Complex(double)>;

struct QuadResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;

    double real_value() const { return value.real(); }
};

/// Default absolute tolerance for scalar quadrature.
inline constexpr double kDefaultQuadTol = 1e-8;
/// Default relative accuracy target for transforms.
inline constexpr double kDefaultTransformTol = 1e-6;

/// Adaptive Gauss-Kronrod integration of f over [a, b] to absolute
/// tolerance tol. Endpoint power-law singularities with exponent > -1 are
/// handled by bisection refinement toward the endpoint. Throws
/// NumericalError with the partial result when the subdivision budget is
/// exhausted before reaching tol.
QuadResult adaptive_integrate(const ComplexFn& f, double a, double b,
                              double tol = kDefaultQuadTol);
QuadResult adaptive_integrate(const RealFn& f, double a, double b,
                              double tol = kDefaultQuadTol);

/// Same as adaptive_integrate but with a caller-supplied list of interior
/// break points (known peaks, kinks) that seed the initial subdivision.
QuadResult adaptive_integrate_split(const ComplexFn& f, double a, double b,
                                    const std::vector<double>& breaks,
                                    double tol = kDefaultQuadTol);

/// Integral of f over [a, infinity) for integrands eventually bounded by
/// C * t^(-beta) with beta > 1. Integrates adaptively on growing finite
/// windows, then fits a power law to the last decade and adds the analytic
/// tail of the fitted model. The reported error includes the tail-model
/// uncertainty. Throws NumericalError("tail model mismatch") if the fitted
/// exponent is inconsistent with the hint by more than a factor of 10 while
/// the tail still matters at the requested tolerance.
QuadResult improper_integrate(const RealFn& f, double a, double tol,
                              double tail_exponent_hint);

/// Phase-resolved oscillatory integral of g(e) * exp(-i e t) de over [a, b].
/// Subdivision is seeded with at least ~15 nodes per oscillation period plus
/// any caller-supplied feature break points (narrow peaks that a coarse
/// panel would miss at small t), then refined adaptively.
QuadResult fourier_integral(const ComplexFn& g, double a, double b, double t,
                            double tol = kDefaultQuadTol,
                            const std::vector<double>& extra_breaks = {});
QuadResult fourier_integral(const RealFn& g, double a, double b, double t,
                            double tol = kDefaultQuadTol,
                            const std::vector<double>& extra_breaks = {});

/// Asymptotic tail of the Fourier integral of g from e0 to +infinity
/// (direction = +1) or -infinity to e0 (direction = -1), by repeated
/// integration by parts in the linear phase:
///   int g(e) exp(-i e t) de ~ exp(-i e0 t) * sum_n (+-1)^? g^(n)(e0)/(it)^(n+1).
/// Valid when g is smooth at e0 on scale h and |t| * h >> 1; derivatives are
/// taken by central differences with step h. The error estimate reflects the
/// first neglected term; a diverging term sequence is flagged in the
/// estimate rather than thrown.
QuadResult fourier_tail_series(const ComplexFn& g, double e0, double t,
                               double h, int direction);

struct TransformGrid {
    double e_min = 0.0;
    double e_max = 1.0;
    int n_points = 4096; // power of two recommended
    std::vector<double> t_values;
};

/// Optional endpoint-singularity subtraction for fourier_at_times: the
/// integrand behaves as amplitude * (e - e_min)^exponent near e_min. The
/// template amplitude * v^a * exp(-decay_rate v) is subtracted on the grid
/// and its transform Gamma(a+1)/(decay_rate + i t)^(a+1) added in closed
/// form.
struct ThresholdSingularity {
    double exponent = 0.0;
    double amplitude = 0.0;
    double decay_rate = 0.0; // defaulted from the grid span when <= 0
};

struct FourierOptions {
    bool endpoint_correction = true;
    std::optional<ThresholdSingularity> singularity;
};

/// Evaluates int f(e) exp(-i e t) de for every t in grid.t_values by dense
/// trapezoid sampling with Euler-Maclaurin endpoint corrections. f must be
/// supported within [e_min, e_max]. Each |t| must stay within the grid's
/// resolvable band |t| <= pi * n_points / (e_max - e_min); violations throw
/// DomainError("time exceeds grid bandwidth").
std::vector<Complex> fourier_at_times(const RealFn& f, const TransformGrid& grid,
                                      const FourierOptions& options = {});

namespace detail {

/// Scaled exponential integral G(z) = exp(z) * E1(z), principal branch,
/// |arg z| < pi. Series for small |z|, modified Lentz continued fraction
/// otherwise.
Complex exp_e1_scaled(Complex z);

/// Least-squares fit of log|y| = c0 + slope * log(x); returns {slope, c0}.
std::pair<double, double> loglog_fit(const std::vector<double>& x,
                                     const std::vector<double>& y);

/// Gauss-Legendre nodes and weights on [-1, 1], cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

} // namespace detail

} // namespace qdecay::quadrature

#endif
