#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "hoc/sv_model.hpp"

namespace hoc {
namespace {

// Centred cubic B-spline, support [-2, 2], unit integral.
double bspline4(double t) noexcept {
    const double a = std::abs(t);
    if (a >= 2.0) return 0.0;
    if (a >= 1.0) {
        const double b = 2.0 - a;
        return b * b * b / 6.0;
    }
    return (4.0 - 6.0 * a * a + 3.0 * a * a * a) / 6.0;
}

}  // namespace

double smoothing_kernel(double t) noexcept {
    return (4.0 / 3.0) * bspline4(t) - (bspline4(t - 1.0) + bspline4(t + 1.0)) / 6.0;
}

SmoothingResult smooth_initial(const std::function<double(double)>& payoff, double kink,
                               std::span<const double> xs, double h) {
    SmoothingResult out;
    out.values.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out.values[i] = payoff(xs[i]);
    if (xs.empty() || !(kink >= xs.front() && kink <= xs.back())) {
        out.kink_inside = false;
        return out;
    }
    using Gauss = boost::math::quadrature::gauss<double, 20>;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const double s_kink = (x - kink) / h;  // kink position in kernel units
        if (std::abs(s_kink) > 3.0) continue;
        std::vector<double> knots{-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0};
        if (std::abs(s_kink) < 3.0) knots.push_back(s_kink);
        std::sort(knots.begin(), knots.end());
        knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
        double acc = 0.0;
        for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
            acc += Gauss::integrate(
                [&](double t) { return smoothing_kernel(t) * payoff(x - t * h); }, knots[k],
                knots[k + 1]);
        }
        out.values[i] = acc;
        ++out.smoothed_nodes;
    }
    return out;
}

}  // namespace hoc
