#include "hoc/stencil.hpp"

#include <cmath>
#include <string>

#include "hoc/errors.hpp"

namespace hoc {
namespace {

// 1D central operators of order 0, 1, 2 on offsets -1, 0, 1 (unscaled).
constexpr std::array<std::array<double, 3>, 3> kCentral1D{{
    {0.0, 1.0, 0.0},
    {-0.5, 0.0, 0.5},
    {1.0, -2.0, 1.0},
}};

}  // namespace

std::array<int, 2> orders_of(DerivativeKind kind) noexcept {
    switch (kind) {
        case DerivativeKind::Identity: return {0, 0};
        case DerivativeKind::D1: return {1, 0};
        case DerivativeKind::D2: return {0, 1};
        case DerivativeKind::D11: return {2, 0};
        case DerivativeKind::D22: return {0, 2};
        case DerivativeKind::D12: return {1, 1};
        case DerivativeKind::D112: return {2, 1};
        case DerivativeKind::D122: return {1, 2};
        case DerivativeKind::D1122: return {2, 2};
    }
    return {0, 0};
}

DerivativeKind kind_of(int p, int q) {
    if (p < 0 || q < 0 || p > 2 || q > 2) {
        throw InvalidArgument("derivative of order (" + std::to_string(p) + "," +
                              std::to_string(q) +
                              ") has no compact central stencil; use an auxiliary relation");
    }
    static constexpr DerivativeKind table[3][3] = {
        {DerivativeKind::Identity, DerivativeKind::D2, DerivativeKind::D22},
        {DerivativeKind::D1, DerivativeKind::D12, DerivativeKind::D122},
        {DerivativeKind::D11, DerivativeKind::D112, DerivativeKind::D1122},
    };
    return table[p][q];
}

Stencil3x3 central_stencil(DerivativeKind kind) {
    const auto [p, q] = orders_of(kind);
    Stencil3x3 s;
    s.power1 = p;
    s.power2 = q;
    for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
            s.at(dx, dy) = kCentral1D[p][dx + 1] * kCentral1D[q][dy + 1];
        }
    }
    return s;
}

Stencil3x3 Stencil3x3::scaled(double h1, double h2) const {
    Stencil3x3 out = *this;
    const double scale = 1.0 / (std::pow(h1, power1) * std::pow(h2, power2));
    for (auto& x : out.w) x *= scale;
    out.power1 = 0;
    out.power2 = 0;
    return out;
}

double Stencil3x3::sum() const noexcept {
    double s = 0.0;
    for (double x : w) s += x;
    return s;
}

Stencil3x3& Stencil3x3::operator+=(const Stencil3x3& o) {
    if (power1 != o.power1 || power2 != o.power2) {
        throw InvalidArgument("stencil sum with mismatched h-powers");
    }
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += o.w[k];
    return *this;
}

Stencil3x3& Stencil3x3::operator*=(double s) noexcept {
    for (auto& x : w) x *= s;
    return *this;
}

double apply_dual(const DualStencil& s, std::span<const double> u, std::span<const double> u_tau,
                  const Grid2D& grid, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i + 1 >= grid.nodes_x() || j + 1 >= grid.nodes_y()) {
        throw InvalidArgument("apply_dual: node (" + std::to_string(i) + "," + std::to_string(j) +
                              ") has no full 3x3 neighbourhood");
    }
    if (u.size() != grid.size() || u_tau.size() != grid.size()) {
        throw InvalidArgument("apply_dual: grid function size mismatch");
    }
    double acc = 0.0;
    for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
            const std::size_t k = grid.index(i + dx, j + dy);
            acc += s.mass.at(dx, dy) * u_tau[k] + s.space.at(dx, dy) * u[k];
        }
    }
    return acc;
}

CompactForm& CompactForm::operator+=(const CompactForm& o) noexcept {
    for (std::size_t k = 0; k < 9; ++k) {
        u[k] += o.u[k];
        w[k] += o.w[k];
    }
    return *this;
}

CompactForm& CompactForm::operator*=(double s) noexcept {
    for (std::size_t k = 0; k < 9; ++k) {
        u[k] *= s;
        w[k] *= s;
    }
    return *this;
}

CompactForm operator+(CompactForm a, const CompactForm& b) noexcept { return a += b; }
CompactForm operator*(double s, CompactForm a) noexcept { return a *= s; }

DualStencil CompactForm::discretise(double h1, double h2) const {
    DualStencil out;
    for (int p = 0; p <= 2; ++p) {
        for (int q = 0; q <= 2; ++q) {
            const double cu = u_at(p, q);
            const double cw = w_at(p, q);
            if (cu == 0.0 && cw == 0.0) continue;
            const Stencil3x3 base = central_stencil(kind_of(p, q)).scaled(h1, h2);
            for (std::size_t k = 0; k < 9; ++k) {
                out.space.w[k] += cu * base.w[k];
                out.mass.w[k] += cw * base.w[k];
            }
        }
    }
    return out;
}

double CompactForm::evaluate(const std::array<double, 9>& du,
                             const std::array<double, 9>& dw) const noexcept {
    double acc = 0.0;
    for (std::size_t k = 0; k < 9; ++k) acc += u[k] * du[k] + w[k] * dw[k];
    return acc;
}

}  // namespace hoc
