#include "qdecay/states.hpp"

#include <cmath>
#include <numbers>

namespace qdecay::states {

namespace {

double gaussian3(const Vec3& k, const Vec3& c, double w) {
    const double dx = k[0] - c[0], dy = k[1] - c[1], dz = k[2] - c[2];
    const double r2 = dx * dx + dy * dy + dz * dz;
    const double norm = std::pow(2.0 * std::numbers::pi * w * w, -1.5);
    return norm * std::exp(-0.5 * r2 / (w * w));
}

// Radial marginal of an isotropic Gaussian centered at distance c from the
// origin (Rice-like distribution).
double radial_marginal(double k, double c, double w) {
    if (k < 0.0) return 0.0;
    const double sqrt2pi = std::sqrt(2.0 * std::numbers::pi);
    if (c < 1e-12 * w) {
        const double g = std::exp(-0.5 * k * k / (w * w));
        return std::sqrt(2.0 / std::numbers::pi) * k * k / (w * w * w) * g;
    }
    const double em = std::exp(-0.5 * (k - c) * (k - c) / (w * w));
    const double ep = std::exp(-0.5 * (k + c) * (k + c) / (w * w));
    return (k / c) / (w * sqrt2pi) * (em - ep);
}

} // namespace

Wavepacket Wavepacket::make_gaussian_state(const Vec3& k0, double width,
                                           int spin_doubled,
                                           const std::vector<double>& weights) {
    if (!(width > 0.0)) throw DomainError("packet width must be positive");
    if (spin_doubled < 0) throw DomainError("spin must be nonnegative");
    if (weights.size() != static_cast<std::size_t>(spin_doubled) + 1)
        throw DomainError("weight vector must have 2s+1 entries");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw DomainError("weights must be nonnegative");
        sum += w;
    }
    if (!(sum > 0.0)) throw DomainError("weights must not all vanish");

    Wavepacket wp;
    wp.spin_doubled_ = spin_doubled;
    wp.weights_.reserve(weights.size());
    for (double w : weights) wp.weights_.push_back(w / sum);
    wp.profiles_.assign(weights.size(), GaussianProfile{k0, width});
    const double c = kinematics::norm3(k0);
    wp.symmetry_ = (c == 0.0) ? Symmetry::EvenInK
                   : (k0[0] == 0.0 && k0[1] == 0.0) ? Symmetry::AxialAboutZ
                                                    : Symmetry::General;
    return wp;
}

double Wavepacket::momentum_density(const Vec3& k) const {
    double d = 0.0;
    for (std::size_t m = 0; m < weights_.size(); ++m)
        d += weights_[m] * gaussian3(k, profiles_[m].center, profiles_[m].width);
    return d;
}

double Wavepacket::radial_momentum_density(double k) const {
    double d = 0.0;
    for (std::size_t m = 0; m < weights_.size(); ++m) {
        const double c = kinematics::norm3(profiles_[m].center);
        d += weights_[m] * radial_marginal(k, c, profiles_[m].width);
    }
    return d;
}

Vec3 Wavepacket::mean_momentum() const {
    if (symmetry_ == Symmetry::EvenInK) return {0.0, 0.0, 0.0};
    Vec3 mean{0.0, 0.0, 0.0};
    for (std::size_t m = 0; m < weights_.size(); ++m)
        for (int i = 0; i < 3; ++i)
            mean[i] += weights_[m] * profiles_[m].center[i];
    return mean;
}

double Wavepacket::momentum_support_radius() const {
    double r = 0.0;
    for (const auto& p : profiles_)
        r = std::max(r, kinematics::norm3(p.center) + 8.0 * p.width);
    return r;
}

bool Wavepacket::is_axial_about(const Vec3& axis) const {
    const double an = kinematics::norm3(axis);
    if (an == 0.0) return true;
    for (const auto& p : profiles_) {
        const double cn = kinematics::norm3(p.center);
        if (cn == 0.0) continue;
        const double cosang = kinematics::dot3(p.center, axis) / (cn * an);
        if (std::abs(std::abs(cosang) - 1.0) > 1e-12) return false;
    }
    return true;
}

} // namespace qdecay::states
