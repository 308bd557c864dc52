#pragma once

#include <cstddef>
#include <vector>

#include "beamplan/bigfloat.hpp"
#include "beamplan/gevrey.hpp"
#include "beamplan/paramgen.hpp"

namespace beamplan {

// How a series evaluation is truncated:
//   fixed_K      - always sum k = 0..K_max
//   tail_epsilon - stop once |term_k| <= eps_tail * |partial sum|
//   least_term   - per-time scan for the first k >= 2 whose successor
//                  term grows in magnitude; sum k = 0..n_t (the rule for
//                  the divergent bending-moment series)
struct SummationPolicy {
    enum class Mode { tail_epsilon, least_term, fixed_K };

    Mode mode = Mode::fixed_K;
    std::size_t K_max = 40;
    double eps_tail = 1e-30;

    SummationPolicy(Mode mode_, std::size_t K_max_, double eps_tail_ = 1e-30)
        : mode(mode_), K_max(K_max_), eps_tail(eps_tail_) {
        if (K_max < 2) throw std::invalid_argument("SummationPolicy: K_max >= 2 required");
        if (eps_tail <= 0) throw std::invalid_argument("SummationPolicy: eps_tail > 0 required");
    }
};

struct FeedforwardResult {
    std::vector<double> times;
    std::vector<BigFloat> u_values;              // series values (input u, or w for the
                                                 // deflection evaluators)
    std::vector<std::size_t> n_t;                // truncation index used per time
    std::vector<std::vector<BigFloat>> term_log; // |term_k| per time, k = 0..K_max
    std::vector<bool> scan_exhausted;            // least-term scan found no growth up to K_max
};

// Flat input series u(t) = sum_k beta_{2k} y^{(2k)}(t) with
// beta_0 = 2 c00, beta_{2k} = 4^k c00 / (4k)!. Outside (0, T) the exact
// equilibrium beta_0 * y is returned with no truncation error.
FeedforwardResult eval_u_flat(const Rational& c00, const TrajectorySpec& spec,
                              const std::vector<double>& grid, const SummationPolicy& policy,
                              const PrecisionContext& ctx);

// Flat deflection series w(z,t) = sum_k alpha_{2k}(z) y^{(2k)}(t) for the
// same choice; equilibrium c00 z^2 y outside the window.
FeedforwardResult eval_w_flat(const Rational& c00, const TrajectorySpec& spec, double z,
                              const std::vector<double>& grid, const SummationPolicy& policy,
                              const PrecisionContext& ctx);

// Divergent bending-moment input series u(t) = sum_k (mu_k / 2) y^{(2k)}(t),
// truncated per time by the least-term rule. If no growth is seen up to
// K_max, the full sum is used and the point is flagged.
FeedforwardResult eval_u_least_term(const TrajectorySpec& spec, const std::vector<double>& grid,
                                    std::size_t K_max, const PrecisionContext& ctx);

// Deflection series of a bending-moment table at position z, truncated by
// the given policy (least-term applied to the z-dependent magnitudes).
FeedforwardResult eval_w_bending(const CoefficientTable& table, const TrajectorySpec& spec,
                                 double z, const std::vector<double>& grid,
                                 const SummationPolicy& policy, const PrecisionContext& ctx);

// Term-magnitude table |mu_k y^{(2k)}(t) / 2| for k = 0..K at one time,
// with the first growth index marked (npos if magnitudes never grow).
struct DivergenceReport {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    double t = 0.0;
    std::vector<BigFloat> magnitudes;
    std::size_t growth_index = npos;  // first n >= 2 with |term_{n+1}| > |term_n|
};

DivergenceReport divergence_report(const TrajectorySpec& spec, double t, std::size_t K,
                                   const PrecisionContext& ctx);

}  // namespace beamplan
