#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hoc/errors.hpp"
#include "hoc/sv_model.hpp"

namespace hoc {
namespace {

using cd = std::complex<double>;

// Probability P_j of the classical two-integral Heston formula, using the
// rotation-count-free ("little trap") form of the characteristic function.
double heston_probability(const SVParams& p, double S, double v, double tau, int j) {
    const double x = std::log(S);
    const double lnk = std::log(p.strike);
    const double u = (j == 1) ? 0.5 : -0.5;
    const double b = (j == 1) ? p.kappa - p.rho * p.sigma : p.kappa;
    const double a = p.kappa * p.theta;
    const double s2 = p.sigma * p.sigma;
    const cd i(0.0, 1.0);

    auto integrand = [&](double phi) {
        const cd rsi = p.rho * p.sigma * i * phi;
        const cd d = std::sqrt((rsi - b) * (rsi - b) - s2 * (2.0 * u * i * phi - phi * phi));
        const cd g = (b - rsi - d) / (b - rsi + d);
        const cd e = std::exp(-d * tau);
        const cd C = p.r * i * phi * tau +
                     a / s2 * ((b - rsi - d) * tau - 2.0 * std::log((1.0 - g * e) / (1.0 - g)));
        const cd D = (b - rsi - d) / s2 * (1.0 - e) / (1.0 - g * e);
        const cd f = std::exp(C + D * v + i * phi * x);
        return std::real(std::exp(-i * phi * lnk) * f / (i * phi));
    };

    double err = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-12, &err);
    if (!std::isfinite(integral) || err > 1e-9) {
        throw NumericalError("Heston quadrature did not converge (error estimate " +
                             std::to_string(err) + ")");
    }
    return 0.5 + integral / std::numbers::pi;
}

void check_heston(const SVParams& p, double S, double v, double tau) {
    if (p.alpha != 0.0) throw InvalidArgument("Heston reference requires alpha = 0");
    if (!(tau > 0.0)) throw InvalidArgument("Heston reference requires tau > 0");
    if (!(S > 0.0) || !(v >= 0.0)) throw InvalidArgument("Heston reference requires S > 0, v >= 0");
}

}  // namespace

double heston_reference_call(const SVParams& p, double S, double v, double tau) {
    check_heston(p, S, v, tau);
    const double p1 = heston_probability(p, S, v, tau, 1);
    const double p2 = heston_probability(p, S, v, tau, 2);
    return S * p1 - p.strike * std::exp(-p.r * tau) * p2;
}

double heston_reference_price(const SVParams& p, double S, double v, double tau) {
    return heston_reference_call(p, S, v, tau) - S + p.strike * std::exp(-p.r * tau);
}

}  // namespace hoc
