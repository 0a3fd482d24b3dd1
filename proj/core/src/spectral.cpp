#include "qdecay/spectral.hpp"

#include <cmath>
#include <numbers>

namespace qdecay::spectral {

namespace {

double breit_wigner(double mu, double m, double gamma) {
    const double d = mu - m;
    return (gamma / (2.0 * std::numbers::pi)) / (d * d + 0.25 * gamma * gamma);
}

} // namespace

SpectralFunction SpectralFunction::make_truncated_breit_wigner(
    double peak_mass, double width, double mu_min, double alpha,
    double tail_mass_tol) {
    if (!(peak_mass > mu_min) || !(mu_min >= 0.0))
        throw DomainError("require peak mass M > mu_min >= 0");
    if (!(width > 0.0)) throw DomainError("width Gamma must be positive");
    if (!(alpha >= 0.0)) throw DomainError("threshold exponent alpha must be >= 0");
    if (!(tail_mass_tol > 0.0 && tail_mass_tol < 1.0))
        throw DomainError("tail mass tolerance must lie in (0, 1)");

    SpectralFunction sf;
    sf.shape_ = Shape::TruncatedBreitWigner;
    sf.peak_mass_ = peak_mass;
    sf.width_ = width;
    sf.mu_min_ = mu_min;
    sf.alpha_ = alpha;
    sf.crossover_ = std::pow(width, alpha);
    sf.support_lo_ = mu_min;

    // Expand the cutoff upward in multiples of Gamma until the raw
    // Lorentzian tail mass atan(a/(hi-M))/pi falls below tail_mass_tol.
    const double a = 0.5 * width;
    double dist = 16.0 * width;
    while (std::atan(a / dist) / std::numbers::pi >= tail_mass_tol) {
        dist *= 2.0;
        if (dist > 1e13 * width)
            throw NumericalError("spectral cutoff search diverged",
                                 {peak_mass + dist, 0.0}, 0.0);
    }
    const double hi = peak_mass + dist;
    sf.support_hi_ = hi;
    sf.tail_mass_ = std::atan(a / (hi - peak_mass)) / std::numbers::pi;

    sf.norm_ = 1.0;
    quadrature::QuadResult raw = sf.weighted_integral([](double) { return 1.0; }, 1,
                                                      1e-11);
    if (!(raw.real_value() > 0.0))
        throw NumericalError("spectral normalization integral failed", raw.value,
                             raw.error_estimate);
    sf.norm_ = 1.0 / raw.real_value();
    return sf;
}

SpectralFunction SpectralFunction::make_analytic_breit_wigner(double peak_mass,
                                                              double width) {
    if (!(width > 0.0)) throw DomainError("width Gamma must be positive");

    SpectralFunction sf;
    sf.shape_ = Shape::AnalyticBreitWigner;
    sf.peak_mass_ = peak_mass;
    sf.width_ = width;
    sf.mu_min_ = -std::numeric_limits<double>::infinity();
    sf.alpha_ = 0.0;
    sf.crossover_ = 0.0;
    // Truncate at many widths; the discarded mass is reattached in closed
    // form wherever it matters.
    const double cut = 1000.0 * width;
    sf.support_lo_ = peak_mass - cut;
    sf.support_hi_ = peak_mass + cut;
    sf.norm_ = 1.0; // (Gamma/2pi)/((mu-M)^2 + Gamma^2/4) integrates to 1 exactly
    sf.tail_mass_ = 2.0 * std::atan(0.5 * width / cut) / std::numbers::pi;
    return sf;
}

double SpectralFunction::operator()(double mu) const {
    if (mu < support_lo_ || mu > support_hi_) return 0.0;
    double value = norm_ * breit_wigner(mu, peak_mass_, width_);
    if (shape_ == Shape::TruncatedBreitWigner && alpha_ > 0.0) {
        const double v = std::pow(mu - mu_min_, alpha_);
        value *= v / (v + crossover_);
    }
    return value;
}

quadrature::QuadResult SpectralFunction::weighted_integral(
    const std::function<double(double)>& f, int power, double tol) const {
    if (power != 1 && power != 2) throw DomainError("power must be 1 or 2");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

    auto integrand = [this, &f, power](double mu) {
        const double s = (*this)(mu);
        return (power == 1 ? s : s * s) * f(mu);
    };
    quadrature::QuadResult res = quadrature::adaptive_integrate_split(
        [&integrand](double mu) {
            return quadrature::Complex(integrand(mu), 0.0);
        },
        support_lo_, support_hi_, quadrature_breaks(), tol);

    if (is_analytic() && power == 1) {
        // reattach the two truncated Lorentzian tails, f frozen at the edges
        const double half = 0.5 * tail_mass_;
        res.value += half * (f(support_lo_) + f(support_hi_));
        res.error_estimate += 0.02 * tail_mass_ *
                              (std::abs(f(support_lo_)) + std::abs(f(support_hi_)));
        res.evaluations += 2;
    }
    return res;
}

double SpectralFunction::threshold_amplitude() const {
    if (is_analytic()) return 0.0;
    const double bw = norm_ * breit_wigner(mu_min_, peak_mass_, width_);
    // near threshold sigma ~ N*BW(mu_min) * (mu-mu_min)^alpha / c
    if (alpha_ == 0.0) return bw;
    return bw / crossover_;
}

std::vector<double> SpectralFunction::quadrature_breaks() const {
    std::vector<double> b;
    const double m = peak_mass_;
    const double g = width_;
    for (double x : {m - 20.0 * g, m - 5.0 * g, m - g, m, m + g, m + 5.0 * g,
                     m + 20.0 * g, m + 100.0 * g}) {
        if (x > support_lo_ && x < support_hi_) b.push_back(x);
    }
    if (!is_analytic()) {
        const double th = mu_min_;
        for (double x : {th + 0.5 * g, th + 2.0 * g}) {
            if (x > support_lo_ && x < support_hi_ && x < m - 20.0 * g)
                b.push_back(x);
        }
    }
    return b;
}

void SpectralFunction::require_physical(const std::string& op) const {
    if (is_analytic())
        throw DomainError(op + " requires a finite-threshold spectral function");
}

} // namespace qdecay::spectral
