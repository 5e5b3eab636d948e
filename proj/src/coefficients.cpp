#include "hoc/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hoc/errors.hpp"

namespace hoc {
namespace {

bool finite(const Jet2& j) {
    return std::isfinite(j.v) && std::isfinite(j.d1) && std::isfinite(j.d2) &&
           std::isfinite(j.d11) && std::isfinite(j.d12) && std::isfinite(j.d22);
}

std::string where(const Grid2D& g, std::size_t k) {
    const std::size_t i = k % g.nodes_x();
    const std::size_t j = k / g.nodes_x();
    return " at node (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

CoefficientField::CoefficientField(const Grid2D& grid, std::vector<PdeCoefficients> nodes)
    : grid_(grid), nodes_(std::move(nodes)) {
    if (nodes_.size() != grid_.size()) {
        throw InvalidArgument("coefficient field: expected " + std::to_string(grid_.size()) +
                              " nodes, got " + std::to_string(nodes_.size()));
    }
    for (const auto& c : nodes_) {
        max_diffusion_ = std::max({max_diffusion_, std::abs(c.a1.v), std::abs(c.a2.v)});
        const double denom = 4.0 * c.a1.v * c.a2.v;
        if (denom > 0.0) {
            max_cross_ratio_ = std::max(max_cross_ratio_, c.b12.v * c.b12.v / denom);
        }
    }
}

CoefficientField sample_coefficients(const CoefficientFunction& fn, const Grid2D& grid) {
    std::vector<PdeCoefficients> nodes;
    nodes.reserve(grid.size());
    for (std::size_t j = 0; j < grid.nodes_y(); ++j) {
        for (std::size_t i = 0; i < grid.nodes_x(); ++i) {
            const PdeCoefficients c = fn(grid.x(i), grid.y(j));
            const std::size_t k = grid.index(i, j);
            if (!finite(c.a1) || !finite(c.a2) || !finite(c.b12) || !finite(c.c1) ||
                !finite(c.c2) || !finite(c.d)) {
                throw NumericalError("coefficients: non-finite sample" + where(grid, k));
            }
            if (!(c.a1.v < 0.0) || !(c.a2.v < 0.0)) {
                throw NumericalError("coefficients: diffusion a1, a2 must be negative" + where(grid, k));
            }
            if (c.d.v == 0.0) {
                throw NumericalError("coefficients: mass coefficient d vanishes" + where(grid, k));
            }
            nodes.push_back(c);
        }
    }
    return CoefficientField(grid, std::move(nodes));
}

}  // namespace hoc
