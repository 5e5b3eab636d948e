#include "hoc/linear_solver.hpp"

#include <string>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseLU>

#include "hoc/errors.hpp"

namespace hoc {

using Matrix = Eigen::SparseMatrix<double>;

struct LinearSolver::Impl {
    Matrix a;
    Eigen::SparseLU<Matrix, Eigen::COLAMDOrdering<int>> lu;
    Eigen::BiCGSTAB<Matrix, Eigen::IncompleteLUT<double>> krylov;

    void factorize(const LinearSolveContract& c) {
        if (c.mode == SolveMode::DirectReuse) {
            lu.analyzePattern(a);
            lu.factorize(a);
            if (lu.info() != Eigen::Success) {
                throw NumericalError("sparse LU factorisation failed: " + lu.lastErrorMessage());
            }
        } else {
            krylov.setTolerance(c.rel_tol);
            krylov.setMaxIterations(c.max_iterations);
            krylov.preconditioner().setDroptol(1e-6);
            krylov.preconditioner().setFillfactor(10);
            krylov.compute(a);
            if (krylov.info() != Eigen::Success) {
                throw NumericalError("incomplete LU preconditioner construction failed");
            }
        }
    }
};

LinearSolver::LinearSolver(const Matrix& a, LinearSolveContract contract)
    : contract_(contract), impl_(std::make_unique<Impl>()) {
    if (a.rows() != a.cols()) throw InvalidArgument("linear solver: matrix is not square");
    impl_->a = a;
    impl_->a.makeCompressed();
    impl_->factorize(contract_);
}

LinearSolver::~LinearSolver() = default;
LinearSolver::LinearSolver(LinearSolver&&) noexcept = default;
LinearSolver& LinearSolver::operator=(LinearSolver&&) noexcept = default;

Eigen::VectorXd LinearSolver::solve(const Eigen::VectorXd& b) {
    if (b.size() != impl_->a.rows()) throw InvalidArgument("linear solver: rhs size mismatch");
    if (!contract_.reuse_factorization) impl_->factorize(contract_);
    if (contract_.mode == SolveMode::DirectReuse) {
        Eigen::VectorXd x = impl_->lu.solve(b);
        if (impl_->lu.info() != Eigen::Success) throw NumericalError("sparse LU solve failed");
        return x;
    }
    // The recursive BiCGSTAB residual can drift from the true one; restart from
    // the current iterate until the true residual meets the contract.
    const double bnorm = b.norm();
    Eigen::VectorXd x = impl_->krylov.solve(b);
    double rnorm = (impl_->a * x - b).norm();
    for (int restart = 0; restart < 3 && rnorm > contract_.rel_tol * bnorm; ++restart) {
        x = impl_->krylov.solveWithGuess(b, x);
        rnorm = (impl_->a * x - b).norm();
    }
    if (rnorm > contract_.rel_tol * bnorm) {
        throw NumericalError("BiCGSTAB did not converge: relative residual " +
                             std::to_string(bnorm > 0 ? rnorm / bnorm : rnorm) + " after " +
                             std::to_string(impl_->krylov.iterations()) + " iterations");
    }
    return x;
}

}  // namespace hoc
