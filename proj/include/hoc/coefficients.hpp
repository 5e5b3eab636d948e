#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hoc/grid.hpp"
#include "hoc/jet.hpp"

namespace hoc {

/// Coefficients of
///
///     d u_tau + a1 u_x1x1 + a2 u_x2x2 + b12 u_x1x2 + c1 u_x1 + c2 u_x2 = 0
///
/// at one point, each carried as a Jet2 (value, gradient, Hessian).
struct PdeCoefficients {
    Jet2 a1;
    Jet2 a2;
    Jet2 b12;
    Jet2 c1;
    Jet2 c2;
    Jet2 d;
};

/// Coefficient closure over the closed domain. Derivatives must be exact
/// (build the result from Jet2 arithmetic), never differenced.
using CoefficientFunction = std::function<PdeCoefficients(double x1, double x2)>;

/// Coefficients sampled at every node of a grid. Immutable after
/// construction.
class CoefficientField {
public:
    CoefficientField(const Grid2D& grid, std::vector<PdeCoefficients> nodes);

    const Grid2D& grid() const noexcept { return grid_; }
    const PdeCoefficients& at(std::size_t i, std::size_t j) const { return nodes_[grid_.index(i, j)]; }
    const PdeCoefficients& operator[](std::size_t k) const { return nodes_[k]; }
    std::size_t size() const noexcept { return nodes_.size(); }

    /// max |a1|, |a2| over the grid; scales the zero-denominator floor.
    double max_diffusion() const noexcept { return max_diffusion_; }

    /// max over nodes of b12^2 / (4 a1 a2). Values above 1 mean the
    /// cross term dominates the diffusion somewhere.
    double max_cross_ratio() const noexcept { return max_cross_ratio_; }

private:
    Grid2D grid_;
    std::vector<PdeCoefficients> nodes_;
    double max_diffusion_ = 0.0;
    double max_cross_ratio_ = 0.0;
};

/// Samples `fn` at every node. Throws NumericalError on non-finite values,
/// on a1 >= 0 or a2 >= 0 (the diffusion must be negative in this sign
/// convention) and on d == 0.
CoefficientField sample_coefficients(const CoefficientFunction& fn, const Grid2D& grid);

}  // namespace hoc
