#ifndef QDECAY_STATES_HPP
#define QDECAY_STATES_HPP

#include <vector>

#include "qdecay/kinematics.hpp"

// Finite-norm single-quanton momentum-space wavepackets. Profiles are
// isotropic Gaussians (closed-form moments, axial symmetry); spin enters
// only as per-component weights because every implemented kernel is
// m-independent.

namespace qdecay::states {

using kinematics::Vec3;

enum class Symmetry { EvenInK, AxialAboutZ, General };

/// Isotropic Gaussian amplitude profile: |g(k)|^2 is a normal density with
/// the given center and standard deviation `width` per axis.
struct GaussianProfile {
    Vec3 center{0.0, 0.0, 0.0};
    double width = 1.0;
};

class Wavepacket {
public:
    /// Builds a unit-norm packet whose 2s+1 spin components share one
    /// Gaussian profile and carry the given nonnegative weights (normalized
    /// to sum 1). spin_doubled = 2s, so spin_doubled+1 = weights.size().
    static Wavepacket make_gaussian_state(const Vec3& k0, double width,
                                          int spin_doubled,
                                          const std::vector<double>& weights);

    /// Sum over spin components of |psi_m(k)|^2; integrates to 1.
    double momentum_density(const Vec3& k) const;

    /// Probability density of |k| (radial marginal); integrates to 1 on
    /// [0, inf).
    double radial_momentum_density(double k) const;

    /// <k> = sum of weighted component centers; exactly zero when the
    /// symmetry flag is EvenInK.
    Vec3 mean_momentum() const;

    Symmetry symmetry() const { return symmetry_; }
    double spin() const { return 0.5 * spin_doubled_; }
    int spin_doubled() const { return spin_doubled_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<GaussianProfile>& profiles() const { return profiles_; }

    /// Radius beyond which the density is negligible (8 sigma past the
    /// farthest center).
    double momentum_support_radius() const;

    /// True when every component center lies on the given axis (or at the
    /// origin); required by the axial 2D integral reductions.
    bool is_axial_about(const Vec3& axis) const;

private:
    Wavepacket() = default;

    int spin_doubled_ = 0;
    std::vector<double> weights_;            // one per m, sum = 1
    std::vector<GaussianProfile> profiles_;  // one per m
    Symmetry symmetry_ = Symmetry::General;
};

} // namespace qdecay::states

#endif
