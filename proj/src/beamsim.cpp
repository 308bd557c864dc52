#include "beamplan/beamsim.hpp"

#include <algorithm>
#include <cmath>

namespace beamplan {

BeamOperator::BeamOperator(const BeamGrid& grid, double mass_density, double flexural_rigidity,
                           double length)
    : grid_(grid), spacing_(length / static_cast<double>(grid.N)) {
    if (mass_density <= 0 || flexural_rigidity <= 0 || length <= 0)
        throw std::invalid_argument("BeamOperator: physical parameters must be positive");

    const auto n = static_cast<Eigen::Index>(grid_.N);
    const double dz = spacing_;
    const double scale = flexural_rigidity / (mass_density * dz * dz * dz * dz);

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(5 * grid_.N);
    auto put = [&](std::size_t node_row, std::size_t node_col, double v) {
        trip.emplace_back(static_cast<Eigen::Index>(node_row - 1),
                          static_cast<Eigen::Index>(node_col - 1), v * scale);
    };

    const std::size_t N = grid_.N;
    // Clamped end: w_0 = 0 eliminated, ghost w_{-1} = w_1 from w'(0) = 0.
    put(1, 1, 7.0);
    put(1, 2, -4.0);
    put(1, 3, 1.0);
    put(2, 1, -4.0);
    put(2, 2, 6.0);
    put(2, 3, -4.0);
    put(2, 4, 1.0);
    for (std::size_t j = 3; j <= N - 2; ++j) {
        put(j, j - 2, 1.0);
        put(j, j - 1, -4.0);
        put(j, j, 6.0);
        put(j, j + 1, -4.0);
        put(j, j + 2, 1.0);
    }
    // Free end: ghosts w_{N+1}, w_{N+2} from w''(1) = u and w'''(1) = 0.
    put(N - 1, N - 3, 1.0);
    put(N - 1, N - 2, -4.0);
    put(N - 1, N - 1, 5.0);
    put(N - 1, N, -2.0);
    put(N, N - 2, 2.0);
    put(N, N - 1, -4.0);
    put(N, N, 2.0);

    A_.resize(n, n);
    A_.setFromTriplets(trip.begin(), trip.end());
    A_.makeCompressed();

    mass_ = Eigen::VectorXd::Ones(n);
    mass_(n - 1) = 0.5;  // half cell at the free boundary node

    S_ = mass_.asDiagonal() * A_;
    S_.makeCompressed();

    load_ = Eigen::VectorXd::Zero(n);
    const double moment_scale = flexural_rigidity / (mass_density * dz * dz);
    load_(n - 2) = -moment_scale;
    load_(n - 1) = 2.0 * moment_scale;
}

Eigen::VectorXd BeamOperator::apply(const Eigen::VectorXd& w_interior) const {
    return A_ * w_interior;
}

BeamOperator assemble_operator(const BeamGrid& grid) { return BeamOperator(grid); }

namespace {

Eigen::VectorXd interior(const std::vector<double>& nodes) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(nodes.size() - 1));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = nodes[static_cast<std::size_t>(i) + 1];
    return v;
}

void write_back(const Eigen::VectorXd& v, std::vector<double>& nodes) {
    nodes[0] = 0.0;  // clamped
    for (Eigen::Index i = 0; i < v.size(); ++i) nodes[static_cast<std::size_t>(i) + 1] = v(i);
}

}  // namespace

NewmarkStepper::NewmarkStepper(const BeamOperator& op, const SimConfig& cfg)
    : op_(op), cfg_(cfg) {
    Eigen::SparseMatrix<double> effective =
        cfg.newmark_beta * cfg.dt * cfg.dt * op.stiffness_matrix();
    for (Eigen::Index i = 0; i < effective.rows(); ++i)
        effective.coeffRef(i, i) += op.mass_weights()(i);
    effective.makeCompressed();
    effective_.compute(effective);
    if (effective_.info() != Eigen::Success)
        throw std::runtime_error("NewmarkStepper: effective matrix factorization failed");
}

void NewmarkStepper::step(SimState& state, double u_now, double u_next) const {
    if (state.w.size() != op_.unknowns() + 1 || state.wdot.size() != op_.unknowns() + 1)
        throw std::invalid_argument("step: state dimension mismatch");
    const double dt = cfg_.dt;
    const double beta = cfg_.newmark_beta;
    const double gamma = cfg_.newmark_gamma;

    Eigen::VectorXd w = interior(state.w);
    Eigen::VectorXd v = interior(state.wdot);

    // Acceleration consistent with the equation of motion at step start.
    Eigen::VectorXd a_now = -op_.apply(w) + op_.load_vector() * u_now;

    // Predictor and implicit solve in the mass-weighted (symmetric) form:
    //   (M + beta dt^2 S) a_next = -S w_pred + M b u_next
    Eigen::VectorXd w_pred = w + dt * v + dt * dt * (0.5 - beta) * a_now;
    Eigen::VectorXd rhs = -(op_.stiffness_matrix() * w_pred) +
                          op_.mass_weights().cwiseProduct(op_.load_vector()) * u_next;
    Eigen::VectorXd a_next = effective_.solve(rhs);
    if (effective_.info() != Eigen::Success)
        throw std::runtime_error("step: linear solve failed");

    Eigen::VectorXd w_new = w_pred + beta * dt * dt * a_next;
    Eigen::VectorXd v_new = v + dt * ((1.0 - gamma) * a_now + gamma * a_next);

    write_back(w_new, state.w);
    write_back(v_new, state.wdot);
    state.wdot[0] = 0.0;
    state.t += dt;
}

SimState step_newmark(const SimState& state, double u_now, double u_next, const SimConfig& cfg,
                      const BeamOperator& op) {
    NewmarkStepper stepper(op, cfg);
    SimState next = state;
    stepper.step(next, u_now, u_next);
    return next;
}

namespace {

double interp_series(const std::vector<std::pair<double, double>>& series, double t) {
    if (series.empty()) throw std::invalid_argument("input series is empty");
    if (t <= series.front().first) return series.front().second;
    if (t >= series.back().first) return series.back().second;
    auto it = std::lower_bound(series.begin(), series.end(), t,
                               [](const auto& s, double value) { return s.first < value; });
    const auto& [t1, v1] = *it;
    const auto& [t0, v0] = *(it - 1);
    if (t1 == t0) return v1;
    const double theta = (t - t0) / (t1 - t0);
    return v0 + theta * (v1 - v0);
}

}  // namespace

SimOutput simulate(const std::vector<std::pair<double, double>>& u_series, const BeamGrid& grid,
                   const SimConfig& cfg, const SimState& initial) {
    if (u_series.empty()) throw std::invalid_argument("simulate: empty input series");

    const BeamOperator op(grid);
    const NewmarkStepper stepper(op, cfg);

    const double t_end = u_series.back().first;
    const auto n_steps = static_cast<std::size_t>(
        std::llround(std::max(0.0, t_end - initial.t) / cfg.dt));
    std::size_t stride = cfg.snapshot_stride;
    if (stride == 0) stride = std::max<std::size_t>(1, (n_steps + 499) / 500);

    SimOutput out;
    out.z_nodes.reserve(grid.N + 1);
    for (std::size_t j = 0; j <= grid.N; ++j) out.z_nodes.push_back(grid.z(j));

    SimState state = initial;
    state.w[0] = 0.0;

    auto record = [&](bool force_snapshot, std::size_t step_index) {
        out.clamped_moment.emplace_back(state.t, clamped_moment(state, grid));
        out.input_echo.emplace_back(state.t, interp_series(u_series, state.t));
        if (force_snapshot || step_index % stride == 0)
            out.snapshots.emplace_back(state.t, state.w);
    };

    record(true, 0);
    for (std::size_t step = 1; step <= n_steps; ++step) {
        const double t_now = state.t;
        const double t_next = t_now + cfg.dt;
        stepper.step(state, interp_series(u_series, t_now), interp_series(u_series, t_next));
        record(step == n_steps, step);
    }
    return out;
}

double clamped_moment(const SimState& state, const BeamGrid& grid) {
    return 2.0 * state.w[1] / (grid.dz * grid.dz);
}

double discrete_energy(const SimState& state, const BeamOperator& op) {
    const Eigen::VectorXd w = interior(state.w);
    const Eigen::VectorXd v = interior(state.wdot);
    const double kinetic = 0.5 * v.dot(op.mass_weights().cwiseProduct(v));
    const double strain = 0.5 * w.dot(op.stiffness_matrix() * w);
    return kinetic + strain;
}

TransitionMetrics transition_error(const SimOutput& output, const SpatialPolynomial& target,
                                   double T,
                                   const std::vector<std::pair<double, double>>& y_ref) {
    if (output.snapshots.empty()) throw std::invalid_argument("transition_error: no snapshots");

    // Snapshot closest to T.
    const auto best = std::min_element(
        output.snapshots.begin(), output.snapshots.end(), [T](const auto& a, const auto& b) {
            return std::fabs(a.first - T) < std::fabs(b.first - T);
        });

    TransitionMetrics metrics;
    const long N = static_cast<long>(output.z_nodes.size()) - 1;
    for (std::size_t j = 0; j < output.z_nodes.size(); ++j) {
        const double want = target.evaluate(ratio(static_cast<long>(j), N)).get_d();
        metrics.final_profile_error_inf =
            std::max(metrics.final_profile_error_inf, std::fabs(best->second[j] - want));
    }

    for (const auto& [t, y_sim] : output.clamped_moment) {
        if (t > T + 1e-12) continue;
        const double err = std::fabs(y_sim - interp_series(y_ref, t));
        metrics.moment_tracking_error_inf = std::max(metrics.moment_tracking_error_inf, err);
    }
    return metrics;
}

}  // namespace beamplan
