#ifndef QDECAY_SURVIVAL_HPP
#define QDECAY_SURVIVAL_HPP

#include <string>
#include <vector>

#include "qdecay/kinematics.hpp"
#include "qdecay/quadrature.hpp"
#include "qdecay/spectral.hpp"
#include "qdecay/states.hpp"

// Survival amplitudes and probabilities: momentum eigenstates, finite-norm
// wavepackets, naively boosted amplitudes, and the generalized survival
// probability of a boosted state on instantaneous hyperplanes.

namespace qdecay::survival {

using kinematics::ThreeVelocity;
using quadrature::Complex;
using quadrature::QuadResult;
using spectral::SpectralFunction;
using states::Wavepacket;

/// Survival amplitude I_k(t) = int dmu sigma(mu) exp(-i sqrt(mu^2+k^2) t).
/// For the analytic full-line shape the dispersion is sign(mu) *
/// sqrt(mu^2+k^2) (linear in mu at k = 0, so a pure Lorentzian decays
/// exactly exponentially) and the truncated Lorentzian tails are reattached
/// in closed form.
QuadResult survival_amplitude(const SpectralFunction& sf, double k, double t,
                              double tol = 1e-8);

/// P_k(t) = |I_k(t)|^2.
double survival_probability_momentum(const SpectralFunction& sf, double k,
                                     double t, double tol = 1e-8);

/// P_psi(t) = int d^3k rho(k) P_|k|(t), reduced to the radial marginal.
double survival_probability_state(const SpectralFunction& sf, const Wavepacket& wp,
                                  double t, double tol = 1e-6);

/// |I_k(t / sqrt(1-u^2))|: the modulus of the amplitude obtained by treating
/// the boosted matrix element as if it defined a survival amplitude. The
/// time-contraction is definitional; u is the boost speed collinear with k.
double naive_boosted_amplitude_modulus(const SpectralFunction& sf, double k,
                                       double u, double t, double tol = 1e-8);

/// Node counts for the axial (q_perp, q_par) outer integral of the boosted
/// survival probability.
struct BoostedGrid {
    int n_perp = 24;
    int n_par = 48;
    double inner_tol_factor = 1e-3;
};

/// Generalized survival probability of a boosted wavepacket on the
/// instantaneous hyperplane family, as a function of the single invariant
/// time argument xi = tau' - (eta.eta') tau. The packet must be axial about
/// the boost axis. Requires a finite-threshold spectrum.
double boosted_survival_probability(const SpectralFunction& sf, const Wavepacket& wp,
                                    const ThreeVelocity& u, double xi,
                                    double tol = 1e-3,
                                    const BoostedGrid& grid = {});

enum class CurveKind { MomentumEigenstate, WavepacketState, BoostedWavepacket };

struct SurvivalCurve {
    std::vector<double> times;
    std::vector<double> values;
    CurveKind kind = CurveKind::MomentumEigenstate;
    double k = 0.0;   // momentum magnitude (momentum kind)
    double u = 0.0;   // boost speed (boosted kind)
    double accuracy = 0.0;
};

/// Batched survival curves. The momentum-eigenstate kind uses the dense
/// Fourier transform when every |t| fits the grid bandwidth and falls back
/// to per-point amplitudes otherwise (long-time tails).
SurvivalCurve survival_curve_momentum(const SpectralFunction& sf, double k,
                                      const std::vector<double>& t_grid,
                                      double tol = 1e-6);
SurvivalCurve survival_curve_state(const SpectralFunction& sf, const Wavepacket& wp,
                                   const std::vector<double>& t_grid,
                                   double tol = 1e-5);
SurvivalCurve survival_curve_boosted(const SpectralFunction& sf, const Wavepacket& wp,
                                     const ThreeVelocity& u,
                                     const std::vector<double>& xi_grid,
                                     double tol = 1e-3);

namespace detail {

/// Energy-space density g(E) = sigma(mu(E)) E / mu(E) used by every
/// momentum-eigenstate integral, with mu(E) = sqrt(E^2 - k^2).
double energy_density(const SpectralFunction& sf, double k, double e);

/// Coefficient of the (E - E_th)^alpha behavior of energy_density at the
/// threshold energy; zero for the analytic shape.
double energy_threshold_amplitude(const SpectralFunction& sf, double k);

} // namespace detail

} // namespace qdecay::survival

#endif
