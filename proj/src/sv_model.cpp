#include "hoc/sv_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hoc/errors.hpp"

namespace hoc {

void SVParams::validate() const {
    auto require = [](bool ok, const char* msg) {
        if (!ok) throw InvalidArgument(std::string("sv parameters: ") + msg);
    };
    require(std::isfinite(alpha) && alpha >= 0.0, "alpha must be >= 0");
    require(kappa > 0.0 && theta > 0.0 && sigma > 0.0, "kappa, theta, sigma must be positive");
    require(std::abs(rho) <= 1.0, "rho must lie in [-1, 1]");
    require(std::isfinite(r), "r must be finite");
    require(strike > 0.0, "strike must be positive");
    require(T >= 0.0 && std::isfinite(T), "T must be finite and >= 0");
    require(S_min > 0.0 && S_min < S_max, "need 0 < S_min < S_max");
    require(v_min > 0.0 && v_min < v_max, "need 0 < v_min < v_max");
}

CoefficientFunction sv_coefficients(const SVParams& p, const SinhTransform& t) {
    return [p, t](double x, double y) {
        const TransformDerivatives phi = t.derivatives(x);
        const Jet2 yj = Jet2::variable_x2(y);
        const Jet2 px{phi.phi_x, phi.phi_xx, 0.0, phi.phi_xxx, 0.0, 0.0};
        const Jet2 pxx{phi.phi_xx, phi.phi_xxx, 0.0, phi.phi_xxxx, 0.0, 0.0};
        const Jet2 px2 = px * px;
        const Jet2 px3 = px2 * px;
        const double hs = 0.5 * p.sigma;

        PdeCoefficients c;
        c.d = px3;
        c.a1 = -hs * (yj * px);
        c.a2 = -hs * (yj * px3);
        c.b12 = (-p.rho * p.sigma) * (yj * px2);
        c.c1 = hs * (yj * pxx) + (hs * yj - p.r) * px2;
        const Jet2 drift = pow(yj, p.alpha) * (p.theta - p.sigma * yj);
        c.c2 = (-p.kappa * std::pow(p.sigma, p.alpha - 1.0)) * (drift * px3);
        return c;
    };
}

TransformedProblem build_problem(const SVParams& p, double zeta, std::size_t n) {
    p.validate();
    const double K = p.strike;
    SinhTransform t(zeta, std::log(p.S_min / K), std::log(p.S_max / K));
    const double ly = p.y_max() - p.y_min();
    const double n2_real = ly * static_cast<double>(n);
    const auto n2 = static_cast<std::size_t>(std::llround(n2_real));
    if (std::abs(n2_real - static_cast<double>(n2)) > 1e-9 * std::max(1.0, n2_real)) {
        throw InvalidArgument("build_problem: y-range " + std::to_string(ly) +
                              " is not a multiple of h = 1/" + std::to_string(n));
    }
    Grid2D grid = build_grid(n, n2, Bounds2D{0.0, 1.0, p.y_min(), p.y_max()});

    for (std::size_t i = 0; i < grid.nodes_x(); ++i) {
        if (!(t.derivatives(grid.x(i)).phi_x > 0.0)) {
            throw NumericalError("build_problem: stretching map is not strictly monotone");
        }
    }
    CoefficientField cf = sample_coefficients(sv_coefficients(p, t), grid);

    const auto payoff = [&t](double x) { return std::max(1.0 - std::exp(t(x)), 0.0); };
    std::vector<double> xs(grid.nodes_x());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = grid.x(i);
    const SmoothingResult smooth = smooth_initial(payoff, t.inverse(0.0), xs, grid.h());

    State u0(static_cast<Eigen::Index>(grid.size()));
    State raw(static_cast<Eigen::Index>(grid.size()));
    DirichletX bc;
    bc.left.resize(grid.nodes_y());
    bc.right.resize(grid.nodes_y());
    for (std::size_t j = 0; j < grid.nodes_y(); ++j) {
        for (std::size_t i = 0; i < grid.nodes_x(); ++i) {
            const auto k = static_cast<Eigen::Index>(grid.index(i, j));
            u0[k] = smooth.values[i];
            raw[k] = payoff(xs[i]);
        }
        bc.left[j] = smooth.values.front();
        bc.right[j] = smooth.values.back();
    }
    return TransformedProblem{p, t, grid, std::move(cf), std::move(u0), std::move(raw), std::move(bc)};
}

double untransform(double u, double tau, const SVParams& p) noexcept {
    return p.strike * std::exp(-p.r * tau) * u;
}

double spot_at(const SinhTransform& t, const SVParams& p, double x) {
    return p.strike * std::exp(t(x));
}

double price_at(const TransformedProblem& prob, const State& u, double S, double v) {
    const Grid2D& g = prob.grid;
    if (static_cast<std::size_t>(u.size()) != g.size()) {
        throw InvalidArgument("price_at: state does not match the problem grid");
    }
    if (!(S > 0.0)) throw InvalidArgument("price_at: spot must be positive");
    const double x = prob.transform.inverse(std::log(S / prob.params.strike));
    const double y = v / prob.params.sigma;
    const auto& b = g.bounds();
    const double tol = 1e-12;
    if (x < b.x_min - tol || x > b.x_max + tol || y < b.y_min - tol || y > b.y_max + tol) {
        throw InvalidArgument("price_at: query (S=" + std::to_string(S) + ", v=" + std::to_string(v) +
                              ") lies outside the computational domain");
    }
    const double fx = std::clamp((x - b.x_min) / g.h(), 0.0, static_cast<double>(g.n1()));
    const double fy = std::clamp((y - b.y_min) / g.h(), 0.0, static_cast<double>(g.n2()));
    const auto i = std::min(static_cast<std::size_t>(fx), g.n1() - 1);
    const auto j = std::min(static_cast<std::size_t>(fy), g.n2() - 1);
    const double tx = fx - static_cast<double>(i);
    const double ty = fy - static_cast<double>(j);
    auto at = [&](std::size_t a, std::size_t c) { return u[static_cast<Eigen::Index>(g.index(a, c))]; };
    const double val = (1 - tx) * (1 - ty) * at(i, j) + tx * (1 - ty) * at(i + 1, j) +
                       (1 - tx) * ty * at(i, j + 1) + tx * ty * at(i + 1, j + 1);
    return untransform(val, prob.params.T, prob.params);
}

}  // namespace hoc
