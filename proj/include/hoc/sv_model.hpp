#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hoc/coefficients.hpp"
#include "hoc/grid.hpp"
#include "hoc/schemes.hpp"
#include "hoc/time_stepper.hpp"

namespace hoc {

/// Stochastic volatility family
///     dS = mu S dt + sqrt(v) S dW1,  dv = kappa v^alpha (theta - v) dt + sigma sqrt(v) dW2,
/// with corr(dW1, dW2) = rho, priced for a European put on the truncated
/// domain [S_min, S_max] x [v_min, v_max]. alpha = 0 is Heston, alpha = 1
/// the SQRN model.
struct SVParams {
    double alpha = 0.5;
    double kappa = 1.1;
    double theta = 0.2;
    double sigma = 0.2;
    double rho = 0.0;
    double r = 0.05;
    double strike = 100.0;
    double T = 0.25;
    double S_min = 1.5;
    double S_max = 250.0;
    double v_min = 0.1;
    double v_max = 0.3;

    double y_min() const noexcept { return v_min / sigma; }
    double y_max() const noexcept { return v_max / sigma; }

    /// Throws InvalidArgument on kappa, theta, sigma <= 0, alpha < 0,
    /// |rho| > 1, v_min <= 0, S_min <= 0 or empty ranges.
    void validate() const;
};

/// Coefficients of the transformed pricing PDE in log-moneyness x-coordinates
/// phi(x) and scaled variance y = v / sigma, written as
///     d u_tau + a1 u_xx + a2 u_yy + b12 u_xy + c1 u_x + c2 u_y = 0
/// with u = e^{r tau} V / K and
///     d   = phi_x^3,
///     a1  = -(sigma y / 2) phi_x,         a2 = -(sigma y / 2) phi_x^3,
///     b12 = -rho sigma y phi_x^2,
///     c1  = (sigma y / 2) phi_xx + (sigma y / 2 - r) phi_x^2,
///     c2  = -kappa sigma^(alpha-1) y^alpha (theta - sigma y) phi_x^3.
CoefficientFunction sv_coefficients(const SVParams& p, const SinhTransform& t);

struct TransformedProblem {
    SVParams params;
    SinhTransform transform;
    Grid2D grid;
    CoefficientField cf;
    State u0;        // smoothed payoff on every node
    State payoff;    // raw payoff on every node
    DirichletX bc;   // u0 on x = x_min and x = x_max
};

/// Grid is [0, 1] x [y_min, y_max] with n intervals in x and the matching
/// count in y (the y-range must be an integer multiple of 1/n).
TransformedProblem build_problem(const SVParams& p, double zeta, std::size_t n);

/// Fourth-order smoothing kernel with support [-3, 3]: the cubic B-spline
/// M4 combined as (4/3) M4(t) - (M4(t - 1) + M4(t + 1)) / 6.
double smoothing_kernel(double t) noexcept;

struct SmoothingResult {
    std::vector<double> values;
    bool kink_inside = true;
    std::size_t smoothed_nodes = 0;
};

/// Replaces payoff values at nodes within 3h of `kink` by the convolution
/// of the payoff with the smoothing kernel scaled to h (piecewise
/// Gauss-Legendre quadrature split at the kernel knots and at the kink).
/// Nodes farther away keep the raw payoff. A kink outside [xs.front(),
/// xs.back()] leaves everything untouched and clears `kink_inside`.
SmoothingResult smooth_initial(const std::function<double(double)>& payoff, double kink,
                               std::span<const double> xs, double h);

/// European put under Heston (alpha = 0) by characteristic-function
/// integration. Throws NumericalError when the quadrature fails.
double heston_reference_price(const SVParams& p, double S, double v, double tau);
double heston_reference_call(const SVParams& p, double S, double v, double tau);

/// V = K e^{-r tau} u.
double untransform(double u, double tau, const SVParams& p) noexcept;

/// Spot price at computational coordinate x.
double spot_at(const SinhTransform& t, const SVParams& p, double x);

/// Option value at (S, v) from a solution at tau = T by bilinear
/// interpolation in (x, y).
double price_at(const TransformedProblem& prob, const State& u, double S, double v);

}  // namespace hoc
