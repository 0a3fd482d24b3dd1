#ifndef QDECAY_SPECTRAL_HPP
#define QDECAY_SPECTRAL_HPP

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "qdecay/quadrature.hpp"

// Rest-mass spectral functions sigma(mu): unit-normalized densities of
// rest-mass values. Two shapes are supported. The physical one is a
// Breit-Wigner bulk multiplied by a smooth threshold factor
// (mu-mu_min)^alpha / ((mu-mu_min)^alpha + Gamma^alpha), truncated above at
// mu_max and renormalized. The analytic full-line Breit-Wigner is a
// validation-only mode without a threshold.

namespace qdecay::spectral {

enum class Shape { TruncatedBreitWigner, AnalyticBreitWigner };

class SpectralFunction {
public:
    /// Physical spectrum. mu_max expands upward in multiples of Gamma until
    /// the discarded Lorentzian tail mass drops below tail_mass_tol; the
    /// normalization constant is then fixed by adaptive quadrature on the
    /// retained support.
    static SpectralFunction make_truncated_breit_wigner(double peak_mass,
                                                        double width,
                                                        double mu_min,
                                                        double alpha,
                                                        double tail_mass_tol);

    /// Full-line Breit-Wigner, exactly unit normalized, flagged
    /// non-physical. Numerical support is truncated at many widths; the
    /// discarded Lorentzian tails are reattached in closed form by the
    /// survival amplitudes and by weighted_integral at power 1.
    static SpectralFunction make_analytic_breit_wigner(double peak_mass,
                                                       double width);

    /// sigma(mu); exactly zero outside [support_lo, support_hi].
    double operator()(double mu) const;

    /// Adaptive quadrature of sigma^power * f over the support. For the
    /// analytic shape at power 1 the truncated Lorentzian tails are added
    /// back in closed form weighted by the edge values of f.
    quadrature::QuadResult weighted_integral(const std::function<double(double)>& f,
                                             int power, double tol) const;

    Shape shape() const { return shape_; }
    bool is_analytic() const { return shape_ == Shape::AnalyticBreitWigner; }
    double peak_mass() const { return peak_mass_; }
    double width() const { return width_; }
    /// Threshold mass; -infinity for the analytic shape.
    double mu_min() const { return mu_min_; }
    /// Upper edge of the numerical support.
    double mu_max() const { return support_hi_; }
    double support_lo() const { return support_lo_; }
    double support_hi() const { return support_hi_; }
    double threshold_exponent() const { return alpha_; }
    double norm_constant() const { return norm_; }
    /// Mass discarded by the support truncation (per the normalization in
    /// effect; zero distortion budget for the truncated shape, reattached
    /// analytically for the analytic shape).
    double discarded_tail_mass() const { return tail_mass_; }

    /// Leading coefficient A of sigma(mu) ~ A (mu - mu_min)^alpha at the
    /// threshold. Zero for the analytic shape.
    double threshold_amplitude() const;

    /// Break points (threshold, peak flanks) worth seeding quadratures with.
    std::vector<double> quadrature_breaks() const;

    /// Requires a finite threshold; throws DomainError for the analytic
    /// shape. Used by operations whose meaning depends on mu_min.
    void require_physical(const std::string& op) const;

private:
    SpectralFunction() = default;

    Shape shape_ = Shape::TruncatedBreitWigner;
    double peak_mass_ = 1.0;
    double width_ = 0.1;
    double mu_min_ = 0.0;
    double alpha_ = 1.0;
    double crossover_ = 0.1; // c = Gamma^alpha in the threshold factor
    double support_lo_ = 0.0;
    double support_hi_ = 1.0;
    double norm_ = 1.0;
    double tail_mass_ = 0.0;
};

} // namespace qdecay::spectral

#endif
