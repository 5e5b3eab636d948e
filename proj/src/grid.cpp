#include "hoc/grid.hpp"

#include <cmath>
#include <string>

#include "hoc/errors.hpp"

namespace hoc {

SinhTransform::SinhTransform(double zeta, double s_hat_min, double s_hat_max)
    : zeta_(zeta), s_hat_min_(s_hat_min), s_hat_max_(s_hat_max) {
    if (!std::isfinite(zeta) || !std::isfinite(s_hat_min) || !std::isfinite(s_hat_max)) {
        throw InvalidArgument("sinh transform: non-finite parameter");
    }
    if (zeta <= 0.0) {
        throw InvalidArgument("sinh transform: zeta must be positive");
    }
    if (!(s_hat_min < s_hat_max)) {
        throw InvalidArgument("sinh transform: degenerate interval, need s_hat_min < s_hat_max");
    }
    gamma1_ = std::asinh(zeta * s_hat_min);
    gamma2_ = std::asinh(zeta * s_hat_max);
}

double SinhTransform::operator()(double x) const {
    // Endpoints are returned exactly; sinh(asinh(z)) / zeta can be off by an ulp.
    if (x == 0.0) return s_hat_min_;
    if (x == 1.0) return s_hat_max_;
    return std::sinh(gamma2_ * x + gamma1_ * (1.0 - x)) / zeta_;
}

TransformDerivatives SinhTransform::derivatives(double x) const {
    if (!std::isfinite(x)) {
        throw InvalidArgument("sinh transform: non-finite evaluation point");
    }
    const double slope = gamma2_ - gamma1_;
    const double arg = gamma2_ * x + gamma1_ * (1.0 - x);
    const double s = std::sinh(arg) / zeta_;
    const double c = std::cosh(arg) / zeta_;
    const double s2 = slope * slope;
    TransformDerivatives d;
    d.phi = (*this)(x);
    d.phi_x = slope * c;
    d.phi_xx = s2 * s;
    d.phi_xxx = s2 * slope * c;
    d.phi_xxxx = s2 * s2 * s;
    return d;
}

double SinhTransform::inverse(double s_hat) const {
    return (std::asinh(zeta_ * s_hat) - gamma1_) / (gamma2_ - gamma1_);
}

SinhTransform make_transform(double zeta, double s_hat_min, double s_hat_max) {
    return SinhTransform(zeta, s_hat_min, s_hat_max);
}

TransformDerivatives transform_derivatives(const SinhTransform& t, double x) {
    return t.derivatives(x);
}

Grid2D::Grid2D(std::size_t n1, std::size_t n2, Bounds2D bounds)
    : n1_(n1), n2_(n2), bounds_(bounds), h_(0.0) {
    if (n1 < 4 || n2 < 4) {
        throw InvalidArgument("grid: need at least 4 intervals per direction, got " +
                              std::to_string(n1) + "x" + std::to_string(n2));
    }
    const double lx = bounds.x_max - bounds.x_min;
    const double ly = bounds.y_max - bounds.y_min;
    if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly)) {
        throw InvalidArgument("grid: empty or non-finite domain");
    }
    const double h1 = lx / static_cast<double>(n1);
    const double h2 = ly / static_cast<double>(n2);
    if (std::abs(h1 - h2) > 1e-12 * std::max(h1, h2)) {
        throw InvalidArgument("grid: unequal steps (h1=" + std::to_string(h1) +
                              ", h2=" + std::to_string(h2) + "); schemes assume h1 == h2");
    }
    h_ = h1;
}

Grid2D build_grid(std::size_t n1, std::size_t n2, Bounds2D bounds) {
    return Grid2D(n1, n2, bounds);
}

bool is_nested(const Grid2D& coarse, const Grid2D& fine) {
    const auto& a = coarse.bounds();
    const auto& b = fine.bounds();
    if (a.x_min != b.x_min || a.x_max != b.x_max || a.y_min != b.y_min || a.y_max != b.y_max) {
        return false;
    }
    if (fine.n1() < coarse.n1() || fine.n2() < coarse.n2()) return false;
    if (fine.n1() % coarse.n1() != 0 || fine.n2() % coarse.n2() != 0) return false;
    return fine.n1() / coarse.n1() == fine.n2() / coarse.n2();
}

}  // namespace hoc
