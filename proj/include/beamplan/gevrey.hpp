#pragma once

#include <cstddef>
#include <vector>

#include "beamplan/bigfloat.hpp"
#include "beamplan/jet.hpp"

namespace beamplan {

// Transition of the parametrizing output: y(t) = y_start for t <= 0,
// y_end for t >= T, and y_start + (y_end - y_start) * Phi_sigma(t/T)
// in between, with the bump
//   phi_sigma(tau) = exp(-1 / ((1 - tau) tau)^sigma).
struct TrajectorySpec {
    double T;
    double sigma;
    double y_start = 0.0;
    double y_end = 1.0;

    TrajectorySpec(double T_, double sigma_, double y_start_ = 0.0, double y_end_ = 1.0)
        : T(T_), sigma(sigma_), y_start(y_start_), y_end(y_end_) {
        if (T <= 0) throw std::invalid_argument("TrajectorySpec: T > 0 required");
        if (sigma <= 0) throw std::invalid_argument("TrajectorySpec: sigma > 0 required");
    }
};

// phi_sigma(tau) as a scalar; zero outside (0, 1).
BigFloat phi_scalar(const BigFloat& tau, const BigFloat& sigma, const PrecisionContext& ctx);

// Taylor jet of phi_sigma at tau0 in [0, 1]. At tau0 = 0 or 1 every
// one-sided derivative vanishes and the all-zero jet is returned.
// Throws std::domain_error for tau0 outside [0, 1].
Jet phi_jet(const BigFloat& tau0, const BigFloat& sigma, std::size_t M,
            const PrecisionContext& ctx);

// C_sigma = integral of phi_sigma over [0, 1], via level-doubling
// tanh-sinh quadrature run until two consecutive levels agree to
// rel_tol (default well beyond 30 significant digits at 512 bits).
BigFloat normalization_constant(double sigma, const PrecisionContext& ctx,
                                double log10_rel_tol = 40.0);

// integral of phi_sigma over [0, tau], same quadrature.
BigFloat phi_partial_integral(const BigFloat& tau, const BigFloat& sigma,
                              const PrecisionContext& ctx, double log10_rel_tol = 40.0);

// y^{(m)}(t) for m = 0..M. Outside (0, T) the value is the endpoint
// constant and all derivatives of order >= 1 are exactly zero. The
// normalization constant is recomputed per call unless supplied.
std::vector<BigFloat> y_derivatives(const TrajectorySpec& spec, double t, std::size_t M,
                                    const PrecisionContext& ctx);
std::vector<BigFloat> y_derivatives(const TrajectorySpec& spec, double t, std::size_t M,
                                    const PrecisionContext& ctx, const BigFloat& c_sigma);

// Least-squares fit of log sup_t |y^{(m)}(t)| against
//   log M + gamma log m! - m log R
// over m in [max(2, M/2), M]; the lower orders are excluded because the
// growth exponent is an asymptotic property and the small-m data biases
// it upward. sup is taken over the supplied time grid.
struct GevreyFit {
    double gamma = 0.0;
    double log_R = 0.0;
    double log_M_const = 0.0;
    double rms_residual = 0.0;
    std::size_t m_lo = 0;
    std::size_t m_hi = 0;
    std::vector<double> log_sup;  // index m, natural log of sup |y^{(m)}|; -inf where zero
};

GevreyFit gevrey_bound_probe(const TrajectorySpec& spec, std::size_t M,
                             const std::vector<double>& grid, const PrecisionContext& ctx);

}  // namespace beamplan
