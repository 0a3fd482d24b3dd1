#include "qdecay/kinematics.hpp"

namespace qdecay::kinematics {

double gamma(const ThreeVelocity& u) {
    const double u2 = dot3(u.components(), u.components());
    return 1.0 / std::sqrt(1.0 - u2);
}

ThreeVelocity compose_velocities(const ThreeVelocity& u, const ThreeVelocity& v) {
    const Vec3& uv = u.components();
    const Vec3& vv = v.components();
    const double u2 = dot3(uv, uv);
    if (u2 == 0.0) return v;

    // Split v into components parallel and perpendicular to u.
    const double udotv = dot3(uv, vv);
    const double denom = 1.0 + udotv;
    const double root = std::sqrt(1.0 - u2);
    Vec3 w{};
    for (int i = 0; i < 3; ++i) {
        const double vpar = udotv / u2 * uv[i];
        const double vperp = vv[i] - vpar;
        w[i] = (vperp * root + vpar + uv[i]) / denom;
    }
    return ThreeVelocity(w);
}

FourVector boost(const ThreeVelocity& u, const FourVector& x) {
    const Vec3& uv = u.components();
    const double u2 = dot3(uv, uv);
    if (u2 == 0.0) return x;
    const double g = 1.0 / std::sqrt(1.0 - u2);

    const double udotx = dot3(uv, x.x);
    FourVector out;
    out.t = g * (x.t + udotx);
    // x_perp + gamma*(x_par + u t); the (g-1)/u^2 form avoids dividing by |u|.
    const double c = (g - 1.0) / u2;
    for (int i = 0; i < 3; ++i)
        out.x[i] = x.x[i] + c * udotx * uv[i] + g * uv[i] * x.t;
    return out;
}

double classical_lifetime_velocity(double t0, const ThreeVelocity& v) {
    if (!(t0 > 0.0)) throw DomainError("rest lifetime must be positive");
    return t0 * gamma(v);
}

double classical_lifetime_momentum(double t0, double m, double k) {
    if (!(t0 > 0.0)) throw DomainError("rest lifetime must be positive");
    if (!(m > 0.0)) throw DomainError("mass must be positive");
    if (k < 0.0) throw DomainError("momentum magnitude must be nonnegative");
    return t0 * std::sqrt(m * m + k * k) / m;
}

double classical_boosted_lifetime(double tk, double m, const Vec3& k_vec,
                                  const ThreeVelocity& u) {
    if (!(tk > 0.0)) throw DomainError("lifetime must be positive");
    if (!(m > 0.0)) throw DomainError("mass must be positive");
    const double k2 = dot3(k_vec, k_vec);
    const double energy = std::sqrt(m * m + k2);
    return tk * (1.0 + dot3(u.components(), k_vec) / energy) * gamma(u);
}

FourVelocity FourVelocity::from_boost(const ThreeVelocity& u) {
    const double g = gamma(u);
    const Vec3& uv = u.components();
    return FourVelocity(FourVector(g, {g * uv[0], g * uv[1], g * uv[2]}));
}

} // namespace qdecay::kinematics
