#ifndef QDECAY_KINEMATICS_HPP
#define QDECAY_KINEMATICS_HPP

#include <array>
#include <cmath>

#include "qdecay/errors.hpp"

// Special-relativistic scalars, four-vectors and pure boosts in natural
// units (c = 1), metric signature (+,-,-,-). Velocities with |u| too close
// to 1 are rejected because gamma overflows and integration grids
// degenerate near light speed.

namespace qdecay::kinematics {

using Vec3 = std::array<double, 3>;

inline double dot3(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

/// Largest accepted speed; gamma(u) stays below ~2.2e4.
inline constexpr double kMaxSpeed = 1.0 - 1e-9;

/// A three-velocity with Euclidean norm strictly less than 1.
class ThreeVelocity {
public:
    ThreeVelocity() : v_{0.0, 0.0, 0.0} {}
    ThreeVelocity(double vx, double vy, double vz) : v_{vx, vy, vz} { validate(); }
    explicit ThreeVelocity(const Vec3& v) : v_(v) { validate(); }

    const Vec3& components() const { return v_; }
    double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    double speed() const { return norm3(v_); }

private:
    void validate() const {
        if (!(norm3(v_) < kMaxSpeed))
            throw DomainError("superluminal velocity: |u| must be < 1");
    }
    Vec3 v_;
};

/// Minkowski four-vector; the square t^2 - |x|^2 may have any sign.
struct FourVector {
    double t = 0.0;
    Vec3 x{0.0, 0.0, 0.0};

    FourVector() = default;
    FourVector(double t_, const Vec3& x_) : t(t_), x(x_) {}
    FourVector(double t_, double x1, double x2, double x3) : t(t_), x{x1, x2, x3} {}
};

inline double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - dot3(a.x, b.x);
}
inline double minkowski_square(const FourVector& a) { return minkowski_dot(a, a); }

/// Lorentz factor 1/sqrt(1-u^2).
double gamma(const ThreeVelocity& u);

/// Relativistic composition of velocities: the velocity of an object moving
/// with v in a frame that itself moves with u. Not commutative for
/// non-collinear inputs.
ThreeVelocity compose_velocities(const ThreeVelocity& u, const ThreeVelocity& v);

/// Active pure boost B(u) applied to a four-vector.
FourVector boost(const ThreeVelocity& u, const FourVector& x);

/// Classical dilated lifetime T0 / sqrt(1 - v^2).
double classical_lifetime_velocity(double t0, const ThreeVelocity& v);

/// Classical dilated lifetime T0 * sqrt(m^2 + k^2) / m for momentum k.
double classical_lifetime_momentum(double t0, double m, double k);

/// Classical lifetime of a particle of mass m and momentum k_vec after an
/// additional boost u: Tk * [1 + u.k / sqrt(m^2+k^2)] / sqrt(1-u^2).
double classical_boosted_lifetime(double tk, double m, const Vec3& k_vec,
                                  const ThreeVelocity& u);

/// A future-pointing unit timelike four-vector (eta^2 = 1, eta.t >= 1).
class FourVelocity {
public:
    FourVelocity() : eta_(1.0, {0.0, 0.0, 0.0}) {}
    explicit FourVelocity(const FourVector& eta) : eta_(eta) { validate(); }

    /// The four-velocity B(u)(1, 0) of a frame moving with velocity u.
    static FourVelocity from_boost(const ThreeVelocity& u);

    const FourVector& vector() const { return eta_; }
    double t_component() const { return eta_.t; }
    const Vec3& spatial() const { return eta_.x; }

    /// Three-velocity whose boost produces this four-velocity.
    ThreeVelocity to_three_velocity() const {
        return ThreeVelocity(eta_.x[0] / eta_.t, eta_.x[1] / eta_.t, eta_.x[2] / eta_.t);
    }

private:
    void validate() const {
        // Tolerance scales with t^2: eta^2 = t^2 - |x|^2 loses absolute
        // precision by cancellation for large boosts.
        const double scale = std::max(1.0, eta_.t * eta_.t);
        if (std::abs(minkowski_square(eta_) - 1.0) > 1e-12 * scale)
            throw DomainError("four-velocity must be unit timelike (eta^2 = 1)");
        if (eta_.t < 1.0 - 1e-12)
            throw DomainError("four-velocity must be future pointing (t >= 1)");
    }
    FourVector eta_;
};

/// Space-like hyperplane labeled by its unit normal eta and offset tau: the
/// set of points x with eta.x = tau.
struct Hyperplane {
    FourVelocity orientation;
    double offset = 0.0;
};

} // namespace qdecay::kinematics

#endif
