#pragma once

#include <cstddef>

namespace hoc {

/// Analytic derivatives of the stretching map at one point.
struct TransformDerivatives {
    double phi = 0.0;
    double phi_x = 0.0;
    double phi_xx = 0.0;
    double phi_xxx = 0.0;
    double phi_xxxx = 0.0;
};

/// Sinh stretching map from the computational coordinate x in [0, 1] to
/// log-moneyness,
///
///     phi(x) = sinh(gamma2 * x + gamma1 * (1 - x)) / zeta,
///
/// with gamma1 = asinh(zeta * s_min) and gamma2 = asinh(zeta * s_max) so that
/// phi(0) = s_min and phi(1) = s_max. Larger zeta concentrates nodes around
/// phi = 0 (the strike). The anchoring constants are often written c1, c2;
/// they are named gamma here because c1, c2 denote convection coefficients.
class SinhTransform {
public:
    SinhTransform(double zeta, double s_hat_min, double s_hat_max);

    double zeta() const noexcept { return zeta_; }
    double s_hat_min() const noexcept { return s_hat_min_; }
    double s_hat_max() const noexcept { return s_hat_max_; }
    double gamma1() const noexcept { return gamma1_; }
    double gamma2() const noexcept { return gamma2_; }

    double operator()(double x) const;
    TransformDerivatives derivatives(double x) const;

    /// Inverse map: computational x for a given log-moneyness.
    double inverse(double s_hat) const;

private:
    double zeta_;
    double s_hat_min_;
    double s_hat_max_;
    double gamma1_;
    double gamma2_;
};

SinhTransform make_transform(double zeta, double s_hat_min, double s_hat_max);
TransformDerivatives transform_derivatives(const SinhTransform& t, double x);

struct Bounds2D {
    double x_min = 0.0;
    double x_max = 1.0;
    double y_min = 0.0;
    double y_max = 1.0;

    static constexpr Bounds2D unit_square() { return {0.0, 1.0, 0.0, 1.0}; }
};

/// Uniform tensor grid with n1 x n2 intervals (so (n1+1) x (n2+1) nodes) and
/// a common step h in both directions. Node (i, j) has linear index
/// i + (n1 + 1) * j, i.e. lexicographic with x fastest.
class Grid2D {
public:
    Grid2D(std::size_t n1, std::size_t n2, Bounds2D bounds);

    std::size_t n1() const noexcept { return n1_; }
    std::size_t n2() const noexcept { return n2_; }
    std::size_t nodes_x() const noexcept { return n1_ + 1; }
    std::size_t nodes_y() const noexcept { return n2_ + 1; }
    std::size_t size() const noexcept { return nodes_x() * nodes_y(); }
    double h() const noexcept { return h_; }
    const Bounds2D& bounds() const noexcept { return bounds_; }

    // i / n1 is rounded once, so nested grids produce bit-identical shared nodes.
    double x(std::size_t i) const noexcept {
        return bounds_.x_min + (bounds_.x_max - bounds_.x_min) *
                                   (static_cast<double>(i) / static_cast<double>(n1_));
    }
    double y(std::size_t j) const noexcept {
        return bounds_.y_min + (bounds_.y_max - bounds_.y_min) *
                                   (static_cast<double>(j) / static_cast<double>(n2_));
    }
    std::size_t index(std::size_t i, std::size_t j) const noexcept { return i + nodes_x() * j; }

private:
    std::size_t n1_;
    std::size_t n2_;
    Bounds2D bounds_;
    double h_;
};

/// Requires n1, n2 >= 4 and equal steps in both directions.
Grid2D build_grid(std::size_t n1, std::size_t n2, Bounds2D bounds = Bounds2D::unit_square());

/// True when every node of `coarse` is a node of `fine` (same bounds, fine
/// step an integer fraction of the coarse one).
bool is_nested(const Grid2D& coarse, const Grid2D& fine);

}  // namespace hoc
