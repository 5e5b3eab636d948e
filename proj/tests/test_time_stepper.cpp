#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoc/coefficients.hpp"
#include "hoc/errors.hpp"
#include "hoc/time_stepper.hpp"
#include "support/manufactured.hpp"

namespace {

namespace ht = hoc::testing;

// M = I, K = diag(lambda); optional Dirichlet row at index 0.
hoc::OperatorPair diagonal_pair(const std::vector<double>& lambda, bool dirichlet0 = false,
                                double g = 0.0) {
    const auto n = static_cast<Eigen::Index>(lambda.size());
    hoc::OperatorPair ops;
    ops.mass.resize(n, n);
    ops.space.resize(n, n);
    std::vector<Eigen::Triplet<double>> m, k;
    for (Eigen::Index r = 0; r < n; ++r) {
        if (dirichlet0 && r == 0) {
            k.emplace_back(r, r, 1.0);
            continue;
        }
        m.emplace_back(r, r, 1.0);
        k.emplace_back(r, r, lambda[static_cast<std::size_t>(r)]);
    }
    ops.mass.setFromTriplets(m.begin(), m.end());
    ops.space.setFromTriplets(k.begin(), k.end());
    if (dirichlet0) {
        ops.dirichlet_rows = {0};
        ops.dirichlet_values = {g};
    }
    return ops;
}

hoc::TimeGrid manual_grid(double T, std::size_t steps, std::size_t startup, std::size_t substeps) {
    hoc::TimeGrid tg;
    tg.T = T;
    tg.steps = steps;
    tg.k = T / static_cast<double>(steps);
    tg.startup_levels = startup;
    tg.substeps = substeps;
    tg.k_prime = tg.k / static_cast<double>(substeps);
    return tg;
}

TEST_CASE("TimeStepper.ZeroOperatorKeepsState") {
    const auto ops = diagonal_pair({0.0, 0.0, 0.0});
    hoc::State u(3);
    u << 1.0, -2.0, 0.5;
    CHECK(hoc::cn_step(ops, u, 0.1) == u);
    CHECK((hoc::bdf4_step(ops, {u, u, u, u}, 0.1) - u).norm() < 1e-14);
    CHECK((hoc::integrate(ops, u, manual_grid(1.0, 10, 3, 4)) - u).norm() < 1e-13);
}

TEST_CASE("TimeStepper.ScalarCrankNicolsonClosedForm") {
    const double lambda = 2.5, k = 0.1;
    const auto ops = diagonal_pair({lambda});
    hoc::State u(1);
    u << 1.0;
    const hoc::State v = hoc::cn_step(ops, u, k);
    CHECK(std::abs((v[0]) - ((1 - k * lambda / 2) / (1 + k * lambda / 2))) <= 1e-15);
}

TEST_CASE("TimeStepper.ScalarBdf4ClosedForm") {
    const double lambda = 1.5, k = 0.05;
    const auto ops = diagonal_pair({lambda});
    hoc::State a(1), b(1), c(1), d(1);
    a << 1.0;
    b << 1.1;
    c << 1.2;
    d << 1.3;
    const hoc::State v = hoc::bdf4_step(ops, {a, b, c, d}, k);
    CHECK(std::abs((v[0]) - ((4 * 1.0 - 3 * 1.1 + 4.0 / 3 * 1.2 - 0.25 * 1.3) / (25.0 / 12 + k * lambda))) <= 1e-15);
}

TEST_CASE("TimeStepper.CrankNicolsonSecondOrder") {
    const auto ops = diagonal_pair({1.0});
    hoc::State u0(1);
    u0 << 1.0;
    std::vector<double> errs;
    for (std::size_t s : {4u, 8u, 16u, 32u}) {
        const auto u = hoc::integrate(ops, u0, manual_grid(1.0, 3, 3, s));
        errs.push_back(std::abs(u[0] - std::exp(-1.0)));
    }
    for (double p : ht::observed_orders(errs)) CHECK(p >= 1.9);
}

TEST_CASE("TimeStepper.Bdf4FourthOrder") {
    const auto ops = diagonal_pair({1.0});
    hoc::State u0(1);
    u0 << 1.0;
    std::vector<double> errs;
    for (std::size_t n : {10u, 20u, 40u, 80u}) {
        const auto u = hoc::integrate(ops, u0, manual_grid(1.0, n, 3, n));
        errs.push_back(std::abs(u[0] - std::exp(-1.0)));
    }
    for (double p : ht::observed_orders(errs)) CHECK(p >= 3.7);
}

TEST_CASE("TimeStepper.ZeroHorizon") {
    const auto tg = hoc::make_time_grid(0.0, 0.1, 0.1, 0.4);
    CHECK(tg.steps == 0u);
    const auto ops = diagonal_pair({3.0, 1.0});
    hoc::State u(2);
    u << 0.3, 0.4;
    CHECK(hoc::integrate(ops, u, tg) == u);
}

TEST_CASE("TimeStepper.StepCounts") {
    const auto tg = hoc::make_time_grid(0.25, 0.1, 0.1, 0.4);
    CHECK(tg.steps == 25u);
    CHECK(tg.cn_steps() == 9u);
    CHECK(tg.bdf_steps() == 22u);
    CHECK(tg.k == doctest::Approx(0.01));
    CHECK(std::abs((tg.k_prime * static_cast<double>(tg.substeps)) - (tg.k)) <= 1e-16);
    CHECK_THROWS_AS(hoc::make_time_grid(0.25, 0.0, 0.1, 0.4), hoc::InvalidArgument);
    CHECK_THROWS_AS(hoc::make_time_grid(-1.0, 0.1, 0.1, 0.4), hoc::InvalidArgument);
}

TEST_CASE("TimeStepper.DirichletRowsPinned") {
    const auto ops = diagonal_pair({0.0, 2.0, 5.0}, true, 0.75);
    hoc::State u(3);
    u << 0.75, 1.0, 1.0;
    const auto v = hoc::integrate(ops, u, manual_grid(0.5, 10, 3, 5));
    CHECK(v[0] == 0.75);
    CHECK(std::abs((v[1]) - (std::exp(-1.0))) <= 1e-4);
}

class PdeStepping {
protected:
    PdeStepping() {
        const auto g = hoc::Grid2D(20, 20, hoc::Bounds2D::unit_square());
        cf_ = std::make_unique<hoc::CoefficientField>(hoc::sample_coefficients(ht::variable_general(), g));
        u0_.resize(static_cast<Eigen::Index>(g.size()));
        hoc::DirichletX bc{std::vector<double>(21), std::vector<double>(21)};
        for (std::size_t j = 0; j <= 20; ++j) {
            for (std::size_t i = 0; i <= 20; ++i) {
                const double val = std::sin(3 * g.x(i) + 0.2) * std::cos(2 * g.y(j));
                u0_[static_cast<Eigen::Index>(g.index(i, j))] = val;
                if (i == 0) bc.left[j] = val;
                if (i == 20) bc.right[j] = val;
            }
        }
        ops_ = hoc::assemble_system(hoc::SchemeVersion::V3, *cf_, bc);
        tg_ = hoc::make_time_grid(0.1, 0.05, 0.1, 0.4);
    }
    std::unique_ptr<hoc::CoefficientField> cf_;
    hoc::OperatorPair ops_;
    hoc::State u0_;
    hoc::TimeGrid tg_;
};

TEST_CASE_FIXTURE(PdeStepping, "PdeStepping.IterativeAgreesWithDirect") {
    const auto direct = hoc::integrate(ops_, u0_, tg_);
    hoc::LinearSolveContract it;
    it.mode = hoc::SolveMode::Iterative;
    const auto iter = hoc::integrate(ops_, u0_, tg_, it);
    CHECK((direct - iter).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE_FIXTURE(PdeStepping, "PdeStepping.ReuseMatchesRefactor") {
    const auto reuse = hoc::integrate(ops_, u0_, tg_);
    hoc::LinearSolveContract fresh;
    fresh.reuse_factorization = false;
    const auto again = hoc::integrate(ops_, u0_, tg_, fresh);
    CHECK((reuse - again).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE_FIXTURE(PdeStepping, "PdeStepping.TraceReportsEveryStep") {
    std::size_t cn = 0, bdf = 0;
    double worst = 0.0;
    hoc::integrate(ops_, u0_, tg_, {}, [&](const hoc::StepTrace& t) {
        (t.phase == "cn" ? cn : bdf)++;
        worst = std::max(worst, t.residual);
    });
    CHECK(cn == tg_.cn_steps());
    CHECK(bdf == tg_.bdf_steps());
    CHECK(worst < 1e-8);
}

TEST_CASE("TimeStepper.ShapeMismatchRejected") {
    const auto ops = diagonal_pair({1.0, 1.0});
    hoc::State u(3);
    u.setZero();
    CHECK_THROWS_AS(hoc::cn_step(ops, u, 0.1), hoc::InvalidArgument);
}

}  // namespace
