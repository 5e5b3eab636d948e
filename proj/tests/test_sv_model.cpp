#include <algorithm>
#include <cmath>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoc/errors.hpp"
#include "hoc/sv_model.hpp"

namespace {

hoc::SVParams params(double rho = 0.0, double alpha = 0.5) {
    hoc::SVParams p;
    p.rho = rho;
    p.alpha = alpha;
    return p;
}

TEST_CASE("SvModel.YRangeIsOneUnit") {
    const auto p = params();
    CHECK(std::abs((p.y_max() - p.y_min()) - (1.0)) <= 1e-15);
    const auto prob = hoc::build_problem(p, 7.5, 10);
    CHECK(prob.grid.n1() == 10u);
    CHECK(prob.grid.n2() == 10u);
    CHECK(prob.grid.y(0) == doctest::Approx(0.5));
    CHECK(prob.grid.y(10) == doctest::Approx(1.5));
}

TEST_CASE("SvModel.CrossTermVanishesWithoutCorrelation") {
    const auto prob = hoc::build_problem(params(0.0), 7.5, 20);
    for (std::size_t k = 0; k < prob.cf.size(); ++k) CHECK(prob.cf[k].b12.v == 0.0);
}

TEST_CASE("SvModel.EllipticOnTheGrid") {
    for (double rho : {-0.9, -0.4, 0.0, 0.5}) {
        const auto prob = hoc::build_problem(params(rho), 7.5, 20);
        for (std::size_t k = 0; k < prob.cf.size(); ++k) {
            const auto& c = prob.cf[k];
            CHECK(c.b12.v * c.b12.v <= 4 * c.a1.v * c.a2.v * (1 + 1e-14));
            CHECK(c.a1.v < 0.0);
            CHECK(c.a2.v < 0.0);
            CHECK(c.d.v > 0.0);
        }
    }
}

// Log-spot pricing generator pushed through s = phi(x), v = sigma y.
TEST_CASE("SvModel.CoefficientsFollowChainRule") {
    const auto p = params(-0.4, 1.0);
    const hoc::SinhTransform t(7.5, std::log(p.S_min / p.strike), std::log(p.S_max / p.strike));
    const auto fn = hoc::sv_coefficients(p, t);
    const double x = 0.37, y = 1.2, v = p.sigma * y;
    const auto td = t.derivatives(x);
    const auto c = fn(x, y);
    // Divide out d = phi_x^3 to get the generator in (x, y) form.
    const double g = td.phi_x * td.phi_x * td.phi_x;
    CHECK(std::abs((-c.a1.v / g) - (0.5 * v / (td.phi_x * td.phi_x))) <= 1e-13);
    CHECK(std::abs((-c.a2.v / g) - (0.5 * p.sigma * p.sigma * v / (p.sigma * p.sigma))) <= 1e-13);
    CHECK(std::abs((-c.b12.v / g) - (p.rho * p.sigma * v / (td.phi_x * p.sigma))) <= 1e-13);
    const double c1 = (0.5 * v) * (-td.phi_xx / (td.phi_x * td.phi_x * td.phi_x)) +
                      (p.r - 0.5 * v) / td.phi_x;
    CHECK(std::abs((-c.c1.v / g) - (c1)) <= 1e-12);
    const double c2 = p.kappa * std::pow(v, p.alpha) * (p.theta - v) / p.sigma;
    CHECK(std::abs((-c.c2.v / g) - (c2)) <= 1e-12);
}

TEST_CASE("SvModel.KernelValues") {
    // Frozen from tests/oracles/smoothing_mpmath.py.
    CHECK(std::abs(hoc::smoothing_kernel(0.0) - 0.83333333333333333) <= 1e-15);
    CHECK(std::abs(hoc::smoothing_kernel(0.5) - 0.55555555555555556) <= 1e-15);
    CHECK(std::abs((hoc::smoothing_kernel(-1.0)) - (0.11111111111111111)) <= 1e-15);
    CHECK(std::abs(hoc::smoothing_kernel(1.5) - -0.052083333333333333) <= 1e-15);
    CHECK(std::abs((hoc::smoothing_kernel(-2.5)) - (-0.0034722222222222222)) <= 1e-15);
    CHECK(hoc::smoothing_kernel(3.0) == 0.0);
    CHECK(hoc::smoothing_kernel(-3.5) == 0.0);
}

TEST_CASE("SvModel.SmoothingMatchesQuadratureOracle") {
    const auto payoff = [](double x) { return std::max(1.0 - std::exp(x), 0.0); };
    const std::vector<double> xs{-0.25, -0.1, 0.0, 0.07, 0.29};
    const auto r = hoc::smooth_initial(payoff, 0.0, xs, 0.1);
    const double expect[] = {0.2211971150747809, 0.092263137635498119, 0.014145247264859056,
                             -0.0025641415271826515, -1.3865773768233714e-9};
    REQUIRE(r.kink_inside);
    CHECK(r.smoothed_nodes == 5u);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK_MESSAGE(std::abs(r.values[i] - expect[i]) <= 1e-13,
        xs[i]);
}

TEST_CASE("SvModel.SmoothingSupport") {
    const auto payoff = [](double x) { return std::max(0.5 - x, 0.0); };
    std::vector<double> xs;
    for (int i = 0; i <= 20; ++i) xs.push_back(i / 20.0);
    const auto r = hoc::smooth_initial(payoff, 0.5, xs, 0.05);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (std::abs(xs[i] - 0.5) > 3 * 0.05 + 1e-12) CHECK(r.values[i] == payoff(xs[i]));
    }
    CHECK(r.values[10] > payoff(0.5));

    const auto outside = hoc::smooth_initial(payoff, 1.5, xs, 0.05);
    CHECK_FALSE(outside.kink_inside);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(outside.values[i] == payoff(xs[i]));
}

// Sup-norm over a dense sample of the smoothing window; nodal maxima alone
// depend on where the kink falls between nodes.
TEST_CASE("SvModel.SmoothedDataConvergesToPayoff") {
    const auto p = params();
    const hoc::SinhTransform t(7.5, std::log(p.S_min / p.strike), std::log(p.S_max / p.strike));
    const auto payoff = [&t](double x) { return std::max(1.0 - std::exp(t(x)), 0.0); };
    const double kink = t.inverse(0.0);
    double prev = 1e9;
    for (double n : {10.0, 20.0, 40.0, 80.0, 160.0}) {
        const double h = 1.0 / n;
        std::vector<double> xs;
        for (int k = -300; k <= 300; ++k) xs.push_back(kink + k * 0.01 * h);
        const auto r = hoc::smooth_initial(payoff, kink, xs, h);
        double diff = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) diff = std::max(diff, std::abs(r.values[i] - payoff(xs[i])));
        CHECK_MESSAGE(diff < prev, n);
        prev = diff;
    }
}

TEST_CASE("SvModel.SmoothedValueAtKink") {
    const auto p = params();
    const auto prob = hoc::build_problem(p, 7.5, 40);
    const double kink = prob.transform.inverse(0.0);
    const auto payoff = [&](double x) { return std::max(1.0 - std::exp(prob.transform(x)), 0.0); };
    const std::vector<double> xs{kink};
    const double v = hoc::smooth_initial(payoff, kink, xs, prob.grid.h()).values[0];
    CHECK(std::abs(payoff(kink) - 0.0) <= 1e-15);
    CHECK(v > 0.0);
    CHECK(v < 0.05);
}

TEST_CASE("SvModel.BoundaryDataAndUntransform") {
    const auto p = params();
    const auto prob = hoc::build_problem(p, 7.5, 10);
    CHECK(std::abs((prob.bc.left.front()) - (1.0 - p.S_min / p.strike)) <= 1e-14);
    CHECK(prob.bc.right.front() == 0.0);
    CHECK(std::abs(hoc::spot_at(prob.transform, p, 0.0) - p.S_min) <= 1e-12);
    CHECK(std::abs(hoc::spot_at(prob.transform, p, 1.0) - p.S_max) <= 1e-11);
    CHECK(std::abs((hoc::untransform(1.0, 0.25, p)) - (100.0 * std::exp(-0.05 * 0.25))) <= 1e-12);
    // At tau = T, the raw payoff untransforms to the discounted intrinsic value.
    CHECK(std::abs((hoc::price_at(prob, prob.payoff, p.S_min, 0.2)) - (std::exp(-p.r * p.T) * (p.strike - p.S_min))) <= 1e-10);
    CHECK_THROWS_AS(hoc::price_at(prob, prob.u0, 300.0, 0.2), hoc::InvalidArgument);
    CHECK_THROWS_AS(hoc::price_at(prob, prob.u0, 100.0, 0.05), hoc::InvalidArgument);
}

TEST_CASE("SvModel.RejectsBadParameters") {
    auto p = params();
    p.sigma = 0.0;
    CHECK_THROWS_AS(p.validate(), hoc::InvalidArgument);
    p = params();
    p.rho = 1.2;
    CHECK_THROWS_AS(p.validate(), hoc::InvalidArgument);
    p = params();
    p.v_max = 0.35;  // y-range 1.25
    CHECK_THROWS_AS(hoc::build_problem(p, 7.5, 10), hoc::InvalidArgument);
    CHECK_NOTHROW(hoc::build_problem(p, 7.5, 8));
}

}  // namespace
