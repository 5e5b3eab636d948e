#pragma once

#include <memory>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace hoc {

enum class SolveMode {
    DirectReuse,  // sparse LU, factorised once per matrix
    Iterative,    // BiCGSTAB with an incomplete-LU preconditioner
};

struct LinearSolveContract {
    SolveMode mode = SolveMode::DirectReuse;
    double rel_tol = 1e-12;       // ||A x - b|| <= rel_tol ||b|| in iterative mode
    int max_iterations = 2000;
    bool reuse_factorization = true;  // false: refactor before every solve
};

/// Solves A x = b for a fixed sparse A. Non-copyable; the factorisation (or
/// preconditioner) is computed once in the constructor.
class LinearSolver {
public:
    LinearSolver(const Eigen::SparseMatrix<double>& a, LinearSolveContract contract);
    ~LinearSolver();
    LinearSolver(LinearSolver&&) noexcept;
    LinearSolver& operator=(LinearSolver&&) noexcept;

    /// Throws NumericalError on a singular factor or Krylov non-convergence.
    Eigen::VectorXd solve(const Eigen::VectorXd& b);

    const LinearSolveContract& contract() const noexcept { return contract_; }

private:
    struct Impl;
    LinearSolveContract contract_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace hoc
