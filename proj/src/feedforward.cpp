#include "beamplan/feedforward.hpp"

#include <stdexcept>

namespace beamplan {

namespace {

// Truncated sum of coeff[k] * y^{(2k)}(t) over the grid under one policy.
// steady_value(endpoint_y) supplies the exact k = 0-only value used
// outside the transition window.
FeedforwardResult eval_series(const std::vector<BigFloat>& coeffs, const TrajectorySpec& spec,
                              const std::vector<double>& grid, const SummationPolicy& policy,
                              const PrecisionContext& ctx) {
    const std::size_t K = policy.K_max;
    if (coeffs.size() != K + 1) throw std::invalid_argument("eval_series: coefficient count");

    const BigFloat c_sigma = normalization_constant(spec.sigma, ctx);
    const BigFloat eps(policy.eps_tail, ctx);

    FeedforwardResult result;
    result.times = grid;
    result.u_values.reserve(grid.size());
    result.n_t.reserve(grid.size());
    result.term_log.reserve(grid.size());
    result.scan_exhausted.assign(grid.size(), false);

    for (std::size_t g = 0; g < grid.size(); ++g) {
        const double t = grid[g];
        if (t <= 0.0 || t >= spec.T) {
            // Exact equilibrium: only the k = 0 term survives.
            const double y_end = (t <= 0.0) ? spec.y_start : spec.y_end;
            result.u_values.push_back(coeffs[0] * BigFloat(y_end, ctx));
            result.n_t.push_back(policy.mode == SummationPolicy::Mode::least_term ? 2 : 0);
            std::vector<BigFloat> mags(K + 1, BigFloat(0.0, ctx));
            mags[0] = abs(result.u_values.back());
            result.term_log.push_back(std::move(mags));
            continue;
        }

        const auto derivs = y_derivatives(spec, t, 2 * K, ctx, c_sigma);
        std::vector<BigFloat> terms;
        terms.reserve(K + 1);
        for (std::size_t k = 0; k <= K; ++k) terms.push_back(coeffs[k] * derivs[2 * k]);

        std::size_t n_t = K;
        switch (policy.mode) {
            case SummationPolicy::Mode::fixed_K:
                n_t = K;
                break;
            case SummationPolicy::Mode::tail_epsilon: {
                BigFloat partial = terms[0];
                n_t = K;
                for (std::size_t k = 1; k <= K; ++k) {
                    partial += terms[k];
                    if (abs(terms[k]) <= eps * abs(partial)) {
                        n_t = k;
                        break;
                    }
                }
                break;
            }
            case SummationPolicy::Mode::least_term: {
                n_t = K;
                bool found = false;
                for (std::size_t k = 2; k + 1 <= K; ++k) {
                    if (abs(terms[k + 1]) > abs(terms[k])) {
                        n_t = k;
                        found = true;
                        break;
                    }
                }
                if (!found) result.scan_exhausted[g] = true;
                break;
            }
        }

        BigFloat sum(0.0, ctx);
        for (std::size_t k = 0; k <= n_t; ++k) sum += terms[k];
        result.u_values.push_back(sum);
        result.n_t.push_back(n_t);

        std::vector<BigFloat> mags;
        mags.reserve(K + 1);
        for (const auto& term : terms) mags.push_back(abs(term));
        result.term_log.push_back(std::move(mags));
    }
    return result;
}

std::vector<BigFloat> flat_beta_coeffs(const Rational& c00, std::size_t K,
                                       const PrecisionContext& ctx) {
    std::vector<BigFloat> beta;
    beta.reserve(K + 1);
    beta.emplace_back(Rational(2 * c00), ctx);
    for (std::size_t k = 1; k <= K; ++k)
        beta.emplace_back(Rational(c00 * ratio(int_pow(4, k), factorial(4 * k))), ctx);
    return beta;
}

// alpha_{2k}(z) for k = 0..K, evaluated at z in big-float precision.
std::vector<BigFloat> alpha_values_at(const CoefficientTable& table, double z,
                                      const PrecisionContext& ctx) {
    const BigFloat zb(z, ctx);
    std::vector<BigFloat> values;
    values.reserve(table.K + 1);
    for (std::size_t k = 0; k <= table.K; ++k) {
        const SpatialPolynomial alpha = alpha_polynomial(table, k);
        BigFloat v(0.0, ctx);
        for (const auto& [power, coeff] : alpha.terms()) {
            BigFloat zp(1.0, ctx);
            for (unsigned i = 0; i < power; ++i) zp *= zb;
            v += BigFloat(coeff, ctx) * zp;
        }
        values.push_back(v);
    }
    return values;
}

}  // namespace

FeedforwardResult eval_u_flat(const Rational& c00, const TrajectorySpec& spec,
                              const std::vector<double>& grid, const SummationPolicy& policy,
                              const PrecisionContext& ctx) {
    return eval_series(flat_beta_coeffs(c00, policy.K_max, ctx), spec, grid, policy, ctx);
}

FeedforwardResult eval_w_flat(const Rational& c00, const TrajectorySpec& spec, double z,
                              const std::vector<double>& grid, const SummationPolicy& policy,
                              const PrecisionContext& ctx) {
    if (z < 0.0 || z > 1.0) throw std::invalid_argument("eval_w_flat: z must lie in [0, 1]");
    const CoefficientTable table = build_parametrization(flat_choice(c00, policy.K_max));
    return eval_series(alpha_values_at(table, z, ctx), spec, grid, policy, ctx);
}

FeedforwardResult eval_u_least_term(const TrajectorySpec& spec, const std::vector<double>& grid,
                                    std::size_t K_max, const PrecisionContext& ctx) {
    if (K_max < 3) throw std::invalid_argument("eval_u_least_term: K_max >= 3 required");
    const RationalSeq mu = mu_recursive(K_max);
    std::vector<BigFloat> coeffs;
    coeffs.reserve(K_max + 1);
    for (std::size_t k = 0; k <= K_max; ++k)
        coeffs.emplace_back(Rational(mu.entries[k] / 2), ctx);
    return eval_series(coeffs, spec, grid,
                       SummationPolicy(SummationPolicy::Mode::least_term, K_max), ctx);
}

FeedforwardResult eval_w_bending(const CoefficientTable& table, const TrajectorySpec& spec,
                                 double z, const std::vector<double>& grid,
                                 const SummationPolicy& policy, const PrecisionContext& ctx) {
    if (z < 0.0 || z > 1.0) throw std::invalid_argument("eval_w_bending: z must lie in [0, 1]");
    if (table.K < policy.K_max)
        throw std::invalid_argument("eval_w_bending: table order below policy K_max");
    auto alpha = alpha_values_at(table, z, ctx);
    alpha.resize(policy.K_max + 1, BigFloat(0.0, ctx));
    return eval_series(alpha, spec, grid, policy, ctx);
}

DivergenceReport divergence_report(const TrajectorySpec& spec, double t, std::size_t K,
                                   const PrecisionContext& ctx) {
    if (K < 5) throw std::invalid_argument("divergence_report: K >= 5 required");
    const RationalSeq mu = mu_recursive(K);
    DivergenceReport report;
    report.t = t;
    report.magnitudes.reserve(K + 1);

    const auto derivs = y_derivatives(spec, t, 2 * K, ctx);
    for (std::size_t k = 0; k <= K; ++k)
        report.magnitudes.push_back(abs(BigFloat(Rational(mu.entries[k] / 2), ctx) * derivs[2 * k]));

    for (std::size_t n = 2; n + 1 <= K; ++n) {
        if (report.magnitudes[n + 1] > report.magnitudes[n]) {
            report.growth_index = n;
            break;
        }
    }
    return report;
}

}  // namespace beamplan
