#pragma once

// Manufactured solutions and coefficient sets shared by the unit and
// acceptance suites.

#include <array>
#include <complex>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hoc/coefficients.hpp"
#include "hoc/schemes.hpp"

namespace hoc::testing {

/// u(x1, x2) given by all its partial derivatives.
struct Manufactured {
    std::string name;
    std::function<double(int p, int q, double x1, double x2)> partial;
};

/// sin(x1 + 0.3) sin(x2 + 0.7), no symmetry zeros on the unit square.
Manufactured sine_product();
/// sin(x1 + 0.3), constant in x2.
Manufactured sine_x1();
/// exp(0.7 x1 - 0.4 x2) cos(1.3 x1 + 0.5 x2 + 0.2).
Manufactured exp_cos();
/// Polynomial with the given coefficient table c[p][q] for x1^p x2^q.
Manufactured polynomial(std::vector<std::vector<double>> coeffs, std::string name);

/// Compact u-derivatives (slots of CompactForm) at a point.
std::array<double, 9> compact_u(const Manufactured& u, double x1, double x2);

/// w = u_tau = -(a1 u11 + a2 u22 + b12 u12 + c1 u1 + c2 u2) / d as a jet.
Jet2 exact_w(const CoefficientFunction& cf, const Manufactured& u, double x1, double x2);

/// Compact w-derivatives (those of total order <= 2) at a point.
std::array<double, 9> compact_w(const CoefficientFunction& cf, const Manufactured& u, double x1,
                                double x2);

// Coefficient sets on the unit square (all with a1, a2 < 0, d > 0).
CoefficientFunction constant_heat();         // a1 = a2 = -1, d = 1, rest 0
CoefficientFunction variable_general();      // b12 != 0, a1 != a2
CoefficientFunction variable_no_cross();     // b12 == 0, a1 != a2
CoefficientFunction variable_equal_diffusion();  // a1 == a2, b12 != 0

/// Applies a node stencil at (x1, x2) to exact u and w values on the
/// 3x3 neighbourhood with step h.
double apply_exact(const DualStencil& s, const CoefficientFunction& cf, const Manufactured& u,
                   double x1, double x2, double h);

/// max over interior nodes of the unit square (h = 1/n) of the scheme row
/// residual on the manufactured solution.
double max_residual(SchemeVersion v, const CoefficientFunction& cf, const Manufactured& u,
                    std::size_t n);

/// Observed orders log2(e_k / e_{k+1}).
std::vector<double> observed_orders(const std::vector<double>& errors);

}  // namespace hoc::testing
