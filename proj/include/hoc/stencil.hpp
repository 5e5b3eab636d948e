#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "hoc/grid.hpp"

namespace hoc {

/// Central-difference operators representable on the 3x3 compact stencil.
/// Mixed kinds are tensor products of the 1D operators {I, D, DD}.
enum class DerivativeKind { Identity, D1, D2, D11, D22, D12, D112, D122, D1122 };

/// Derivative orders (p, q) in (x1, x2) of a kind.
std::array<int, 2> orders_of(DerivativeKind kind) noexcept;

/// Kind for orders (p, q); throws InvalidArgument when p > 2 or q > 2, i.e.
/// the derivative is not compact and must come from an auxiliary relation.
DerivativeKind kind_of(int p, int q);

/// Nine weights on offsets (dx, dy) in {-1, 0, 1}^2. The weights are kept
/// unscaled; the operator value is sum(w * U) / (h1^power1 * h2^power2).
struct Stencil3x3 {
    std::array<double, 9> w{};
    int power1 = 0;
    int power2 = 0;

    static constexpr std::size_t slot(int dx, int dy) noexcept {
        return static_cast<std::size_t>((dx + 1) + 3 * (dy + 1));
    }
    double& at(int dx, int dy) noexcept { return w[slot(dx, dy)]; }
    double at(int dx, int dy) const noexcept { return w[slot(dx, dy)]; }

    /// Weights with the h-powers folded in (power1 = power2 = 0).
    Stencil3x3 scaled(double h1, double h2) const;

    double sum() const noexcept;

    Stencil3x3& operator+=(const Stencil3x3& o);
    Stencil3x3& operator*=(double s) noexcept;

    bool operator==(const Stencil3x3&) const = default;
};

Stencil3x3 central_stencil(DerivativeKind kind);

/// Weights multiplying U (space) and U_tau (mass) at one node, already
/// scaled to the grid step.
struct DualStencil {
    Stencil3x3 mass;
    Stencil3x3 space;

    bool operator==(const DualStencil&) const = default;
};

/// sum(mass * U_tau) + sum(space * U) over the 3x3 neighbourhood of (i, j);
/// the neighbourhood must lie inside the grid.
double apply_dual(const DualStencil& s, std::span<const double> u, std::span<const double> u_tau,
                  const Grid2D& grid, std::size_t i, std::size_t j);

/// Linear combination of compact derivatives of u and of w = u_tau at one
/// node, indexed by derivative orders (p, q) with p, q <= 2. The symbolic
/// form of an auxiliary relation before discretisation.
struct CompactForm {
    std::array<double, 9> u{};
    std::array<double, 9> w{};

    static constexpr std::size_t slot(int p, int q) noexcept {
        return static_cast<std::size_t>(p * 3 + q);
    }

    double& u_at(int p, int q) noexcept { return u[slot(p, q)]; }
    double& w_at(int p, int q) noexcept { return w[slot(p, q)]; }
    double u_at(int p, int q) const noexcept { return u[slot(p, q)]; }
    double w_at(int p, int q) const noexcept { return w[slot(p, q)]; }

    CompactForm& operator+=(const CompactForm& o) noexcept;
    CompactForm& operator*=(double s) noexcept;

    /// Replace every derivative by its central stencil at step (h1, h2).
    DualStencil discretise(double h1, double h2) const;

    /// Evaluate with exact derivative values (du[slot], dw[slot]).
    double evaluate(const std::array<double, 9>& du, const std::array<double, 9>& dw) const noexcept;
};

CompactForm operator+(CompactForm a, const CompactForm& b) noexcept;
CompactForm operator*(double s, CompactForm a) noexcept;

}  // namespace hoc
