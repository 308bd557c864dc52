#include "beamplan/gevrey.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace beamplan {

BigFloat phi_scalar(const BigFloat& tau, const BigFloat& sigma, const PrecisionContext& ctx) {
    const BigFloat zero(0.0, ctx);
    const BigFloat one(1.0, ctx);
    if (tau <= zero || tau >= one) return zero;
    const BigFloat base = tau * (one - tau);
    return exp(-pow(base, -sigma));
}

Jet phi_jet(const BigFloat& tau0, const BigFloat& sigma, std::size_t M,
            const PrecisionContext& ctx) {
    const BigFloat zero(0.0, ctx);
    const BigFloat one(1.0, ctx);
    if (tau0 < zero || tau0 > one)
        throw std::domain_error("phi_jet: tau0 must lie in [0, 1]");
    if (tau0 == zero || tau0 == one) return Jet::zero(tau0, M, ctx);

    // h(tau) = tau (1 - tau), expanded at tau0.
    Jet h = Jet::zero(tau0, M, ctx);
    h.coeffs[0] = tau0 * (one - tau0);
    if (M >= 1) h.coeffs[1] = one - BigFloat(2.0, ctx) * tau0;
    if (M >= 2) h.coeffs[2] = BigFloat(-1.0, ctx);

    const Jet g = jet_real_power(h, -sigma);
    return jet_exp(jet_negate(g));
}

namespace {

// Level-doubling tanh-sinh rule on [0, b] for the endpoint-flat phi
// integrand. |u| <= 7 covers weights far below 2^-512.
BigFloat tanh_sinh_phi(const BigFloat& b, const BigFloat& sigma, const PrecisionContext& ctx,
                       double log10_rel_tol) {
    const BigFloat zero(0.0, ctx);
    if (b <= zero) return zero;

    BigFloat pi_half(0.0, ctx);
    mpfr_const_pi(pi_half.raw(), MPFR_RNDN);
    pi_half.div_si(2);

    const BigFloat half_b = b / BigFloat(2.0, ctx);
    const BigFloat tol = pow(BigFloat(10.0, ctx), BigFloat(-log10_rel_tol, ctx));

    auto integrand_at = [&](const BigFloat& u) {
        // x = b/2 (1 + tanh(pi/2 sinh u)), weight = b/2 (pi/2) cosh u / cosh^2(pi/2 sinh u)
        BigFloat sh(0.0, ctx), ch(0.0, ctx);
        mpfr_sinh_cosh(sh.raw(), ch.raw(), u.raw(), MPFR_RNDN);
        BigFloat arg = pi_half * sh;
        BigFloat th(0.0, ctx), ch2(0.0, ctx);
        mpfr_tanh(th.raw(), arg.raw(), MPFR_RNDN);
        mpfr_cosh(ch2.raw(), arg.raw(), MPFR_RNDN);
        const BigFloat x = half_b * (BigFloat(1.0, ctx) + th);
        const BigFloat w = half_b * pi_half * ch / (ch2 * ch2);
        return w * phi_scalar(x, sigma, ctx);
    };

    const double u_max = 7.0;
    BigFloat previous(0.0, ctx);
    BigFloat current(0.0, ctx);
    int agreements = 0;
    for (int level = 2; level <= 12; ++level) {
        const double h = 1.0 / static_cast<double>(1 << level);
        const long J = static_cast<long>(std::ceil(u_max / h));
        BigFloat sum = integrand_at(BigFloat(0.0, ctx));
        for (long j = 1; j <= J; ++j) {
            BigFloat u(static_cast<double>(j) * h, ctx);
            sum += integrand_at(u) + integrand_at(-u);
        }
        sum *= BigFloat(h, ctx);
        current = sum;
        if (level > 2) {
            const BigFloat diff = abs(current - previous);
            if (diff <= tol * abs(current)) {
                if (++agreements >= 1) return current;
            } else {
                agreements = 0;
            }
        }
        previous = current;
    }
    return current;
}

}  // namespace

BigFloat normalization_constant(double sigma, const PrecisionContext& ctx,
                                double log10_rel_tol) {
    if (sigma <= 0) throw std::invalid_argument("normalization_constant: sigma > 0 required");
    return tanh_sinh_phi(BigFloat(1.0, ctx), BigFloat(sigma, ctx), ctx, log10_rel_tol);
}

BigFloat phi_partial_integral(const BigFloat& tau, const BigFloat& sigma,
                              const PrecisionContext& ctx, double log10_rel_tol) {
    return tanh_sinh_phi(tau, sigma, ctx, log10_rel_tol);
}

std::vector<BigFloat> y_derivatives(const TrajectorySpec& spec, double t, std::size_t M,
                                    const PrecisionContext& ctx) {
    return y_derivatives(spec, t, M, ctx, normalization_constant(spec.sigma, ctx));
}

std::vector<BigFloat> y_derivatives(const TrajectorySpec& spec, double t, std::size_t M,
                                    const PrecisionContext& ctx, const BigFloat& c_sigma) {
    std::vector<BigFloat> out(M + 1, BigFloat(ctx));

    const BigFloat T(spec.T, ctx);
    const BigFloat tau = BigFloat(t, ctx) / T;
    if (tau <= BigFloat(0.0, ctx)) {
        out[0] = BigFloat(spec.y_start, ctx);
        return out;
    }
    if (tau >= BigFloat(1.0, ctx)) {
        out[0] = BigFloat(spec.y_end, ctx);
        return out;
    }

    const BigFloat sigma(spec.sigma, ctx);
    const BigFloat amplitude = BigFloat(spec.y_end, ctx) - BigFloat(spec.y_start, ctx);

    const BigFloat big_phi = phi_partial_integral(tau, sigma, ctx) / c_sigma;
    out[0] = BigFloat(spec.y_start, ctx) + amplitude * big_phi;
    if (M == 0) return out;

    // y^{(m)}(t) = amplitude * phi^{(m-1)}(tau) / (C T^m)
    const Jet jet = phi_jet(tau, sigma, M > 0 ? M - 1 : 0, ctx);
    BigFloat T_pow = T;
    for (std::size_t m = 1; m <= M; ++m) {
        out[m] = amplitude * jet.derivative(m - 1) / (c_sigma * T_pow);
        T_pow *= T;
    }
    return out;
}

GevreyFit gevrey_bound_probe(const TrajectorySpec& spec, std::size_t M,
                             const std::vector<double>& grid, const PrecisionContext& ctx) {
    if (M < 2) throw std::invalid_argument("gevrey_bound_probe: M >= 2 required");

    const BigFloat c_sigma = normalization_constant(spec.sigma, ctx);
    std::vector<BigFloat> sup(M + 1, BigFloat(0.0, ctx));
    for (double t : grid) {
        const auto derivs = y_derivatives(spec, t, M, ctx, c_sigma);
        for (std::size_t m = 1; m <= M; ++m) {
            const BigFloat mag = abs(derivs[m]);
            if (mag > sup[m]) sup[m] = mag;
        }
    }

    GevreyFit fit;
    fit.log_sup.assign(M + 1, -std::numeric_limits<double>::infinity());
    for (std::size_t m = 1; m <= M; ++m)
        if (!sup[m].is_zero()) fit.log_sup[m] = log(sup[m]).to_double();

    fit.m_lo = std::max<std::size_t>(2, M / 2);
    fit.m_hi = M;

    // Normal equations for [1, log m!, -m] over the fit window.
    std::array<std::array<double, 3>, 3> A{};
    std::array<double, 3> rhs{};
    std::size_t n_used = 0;
    for (std::size_t m = fit.m_lo; m <= fit.m_hi; ++m) {
        if (!std::isfinite(fit.log_sup[m])) continue;
        const double row[3] = {1.0, std::lgamma(static_cast<double>(m) + 1.0),
                               -static_cast<double>(m)};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) A[i][j] += row[i] * row[j];
            rhs[i] += row[i] * fit.log_sup[m];
        }
        ++n_used;
    }
    if (n_used < 3) {
        // Degenerate data (e.g. constant trajectory): report zeros.
        return fit;
    }

    // 3x3 Gaussian elimination with partial pivoting.
    std::array<std::array<double, 4>, 3> aug{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) aug[i][j] = A[i][j];
        aug[i][3] = rhs[i];
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(aug[r][col]) > std::fabs(aug[pivot][col])) pivot = r;
        std::swap(aug[col], aug[pivot]);
        for (int r = col + 1; r < 3; ++r) {
            const double f = aug[r][col] / aug[col][col];
            for (int j = col; j < 4; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    std::array<double, 3> x{};
    for (int r = 2; r >= 0; --r) {
        double s = aug[r][3];
        for (int j = r + 1; j < 3; ++j) s -= aug[r][j] * x[j];
        x[r] = s / aug[r][r];
    }
    fit.log_M_const = x[0];
    fit.gamma = x[1];
    fit.log_R = x[2];

    double ss = 0.0;
    for (std::size_t m = fit.m_lo; m <= fit.m_hi; ++m) {
        if (!std::isfinite(fit.log_sup[m])) continue;
        const double pred = fit.log_M_const +
                            fit.gamma * std::lgamma(static_cast<double>(m) + 1.0) -
                            static_cast<double>(m) * fit.log_R;
        ss += (pred - fit.log_sup[m]) * (pred - fit.log_sup[m]);
    }
    fit.rms_residual = std::sqrt(ss / static_cast<double>(n_used));
    return fit;
}

}  // namespace beamplan
