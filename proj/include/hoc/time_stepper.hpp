#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string_view>

#include <Eigen/Core>

#include "hoc/linear_solver.hpp"
#include "hoc/schemes.hpp"

namespace hoc {

using State = Eigen::VectorXd;

/// Equidistant BDF4 grid on [0, T] with a Crank-Nicolson startup that
/// covers the first `startup_levels` BDF4 intervals using `substeps` CN
/// steps per interval.
struct TimeGrid {
    double T = 0.0;
    double k = 0.0;        // BDF4 step
    double k_prime = 0.0;  // CN substep
    std::size_t steps = 0;           // T / k
    std::size_t startup_levels = 0;  // min(3, steps)
    std::size_t substeps = 0;        // k / k_prime
    double ratio_bdf = 0.0;          // k / h actually used
    double ratio_cn = 0.0;           // k_prime / h^2 actually used

    std::size_t cn_steps() const noexcept { return startup_levels * substeps; }
    std::size_t bdf_steps() const noexcept { return steps - startup_levels; }
};

/// k = T / ceil(T / (ratio_bdf h)) and k' = k / ceil(k / (ratio_cn h^2)), so that both
/// steps stay at or below their nominal size and CN lands on multiples of k.
TimeGrid make_time_grid(double T, double h, double ratio_bdf, double ratio_cn);

struct StepTrace {
    std::string_view phase;  // "cn" or "bdf4"
    std::size_t step = 0;
    double time = 0.0;
    double residual = 0.0;  // ||A x - b|| of the step's linear system
};

using TraceSink = std::function<void(const StepTrace&)>;

/// alpha M + beta K with Dirichlet rows replaced by identity rows, solved
/// repeatedly with one factorisation.
class ImplicitSystem {
public:
    ImplicitSystem(const OperatorPair& ops, double alpha, double beta, LinearSolveContract contract);

    /// Solves for the new state; Dirichlet entries of `rhs` are overwritten
    /// with the boundary data and pinned exactly in the result.
    State solve(State rhs, double* residual = nullptr);

private:
    const OperatorPair* ops_;
    SparseMatrix matrix_;
    LinearSolver solver_;
};

/// (M + k'/2 K) U_new = (M - k'/2 K) U.
State cn_step(const OperatorPair& ops, const State& u, double k_prime,
              LinearSolveContract contract = {});

/// (25/12 M + k K) U_{n+1} = M (4 U_n - 3 U_{n-1} + 4/3 U_{n-2} - 1/4 U_{n-3});
/// history = {U_n, U_{n-1}, U_{n-2}, U_{n-3}}.
State bdf4_step(const OperatorPair& ops, const std::array<State, 4>& history, double k,
                LinearSolveContract contract = {});

/// CN substeps over [0, startup_levels * k], then BDF4 to T. Each system
/// matrix is factorised once.
State integrate(const OperatorPair& ops, const State& u0, const TimeGrid& tg,
                LinearSolveContract contract = {}, const TraceSink& trace = {});

}  // namespace hoc
