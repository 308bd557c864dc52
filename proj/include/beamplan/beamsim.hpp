#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "beamplan/polynomial.hpp"

namespace beamplan {

struct BeamGrid {
    std::size_t N;  // number of spatial intervals; nodes 0..N
    double dz;

    explicit BeamGrid(std::size_t N_) : N(N_), dz(1.0 / static_cast<double>(N_)) {
        if (N < 20) throw std::invalid_argument("BeamGrid: N >= 20 required");
    }

    double z(std::size_t j) const { return static_cast<double>(j) * dz; }
};

struct SimState {
    std::vector<double> w;     // deflection at nodes 0..N, w[0] = 0 (clamped)
    std::vector<double> wdot;  // velocity at nodes 0..N
    double t = 0.0;

    static SimState rest(const BeamGrid& grid) {
        SimState s;
        s.w.assign(grid.N + 1, 0.0);
        s.wdot.assign(grid.N + 1, 0.0);
        return s;
    }
};

struct SimConfig {
    double dt;
    double newmark_beta = 0.25;   // average acceleration
    double newmark_gamma = 0.5;
    std::size_t snapshot_stride = 0;  // 0: chosen so that <= 500 snapshots

    explicit SimConfig(double dt_) : dt(dt_) {
        if (dt <= 0) throw std::invalid_argument("SimConfig: dt > 0 required");
    }
};

// Semi-discrete form  wdd = -A w + b u  on the interior unknowns w_1..w_N.
// Second-order central differences; the clamped end is eliminated through
// w_0 = 0 and a mirror ghost for w'(0) = 0, the free end through two ghost
// values enforcing w''(1) = u and w'''(1) = 0. The last row carries a
// half-cell mass weight, which makes S = M A symmetric so that the
// discrete energy  E = (1/2) wdot' M wdot + (1/2) w' S w  is well defined.
//
// The optional physical parameters simulate  mu w_tt = -EI w_zzzz  on
// [0, L]; the defaults give the normalized beam.
class BeamOperator {
public:
    BeamOperator(const BeamGrid& grid, double mass_density = 1.0,
                 double flexural_rigidity = 1.0, double length = 1.0);

    const BeamGrid& grid() const { return grid_; }
    std::size_t unknowns() const { return grid_.N; }
    double spacing() const { return spacing_; }

    // A w for the interior vector (length N).
    Eigen::VectorXd apply(const Eigen::VectorXd& w_interior) const;

    const Eigen::SparseMatrix<double>& evolution_matrix() const { return A_; }
    const Eigen::SparseMatrix<double>& stiffness_matrix() const { return S_; }
    const Eigen::VectorXd& mass_weights() const { return mass_; }
    const Eigen::VectorXd& load_vector() const { return load_; }

    Eigen::MatrixXd dense_evolution_matrix() const { return Eigen::MatrixXd(A_); }

private:
    BeamGrid grid_;
    double spacing_;
    Eigen::SparseMatrix<double> A_;  // evolution operator
    Eigen::SparseMatrix<double> S_;  // symmetric stiffness (mass-weighted A)
    Eigen::VectorXd mass_;
    Eigen::VectorXd load_;
};

BeamOperator assemble_operator(const BeamGrid& grid);

// Implicit Newmark step; the effective matrix M + beta dt^2 S is factored
// once (Cholesky) and reused across steps.
class NewmarkStepper {
public:
    NewmarkStepper(const BeamOperator& op, const SimConfig& cfg);

    void step(SimState& state, double u_now, double u_next) const;

private:
    const BeamOperator& op_;
    SimConfig cfg_;
    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> effective_;
};

// One-off step (factors the effective matrix per call; simulate() and the
// stepper above amortize it).
SimState step_newmark(const SimState& state, double u_now, double u_next, const SimConfig& cfg,
                      const BeamOperator& op);

struct SimOutput {
    std::vector<double> z_nodes;
    std::vector<std::pair<double, std::vector<double>>> snapshots;  // (t, w at nodes 0..N)
    std::vector<std::pair<double, double>> clamped_moment;          // (t, d2w/dz2 at z=0)
    std::vector<std::pair<double, double>> input_echo;              // (t, u as applied)
};

// Integrates from initial.t to the last input sample time. The input is
// linearly interpolated between samples.
SimOutput simulate(const std::vector<std::pair<double, double>>& u_series, const BeamGrid& grid,
                   const SimConfig& cfg, const SimState& initial);

// 2 w_1 / dz^2: second-order accurate given w(0) = w'(0) = 0.
double clamped_moment(const SimState& state, const BeamGrid& grid);

// (1/2) wdot' M wdot + (1/2) w' S w.
double discrete_energy(const SimState& state, const BeamOperator& op);

struct TransitionMetrics {
    double final_profile_error_inf = 0.0;
    double moment_tracking_error_inf = 0.0;
};

// Sup-norm errors of the final profile against the target polynomial and
// of the clamped-moment trace against the reference output samples.
TransitionMetrics transition_error(const SimOutput& output, const SpatialPolynomial& target,
                                   double T,
                                   const std::vector<std::pair<double, double>>& y_ref);

}  // namespace beamplan
