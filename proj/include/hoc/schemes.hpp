#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/SparseCore>

#include "hoc/coefficients.hpp"
#include "hoc/stencil.hpp"

namespace hoc {

// ---------------------------------------------------------------------------
// Auxiliary relations
//
// Differentiating the PDE (with f = -d u_tau) once or twice expresses the
// non-compact third and fourth derivatives of u through compact ones:
//
//   u_x1x1x1   = A1,                       u_x2x2x2 = A2,
//   u_x1x1x1x1 = B1 - (b12/a1) u_x1x1x1x2,  u_x2x2x2x2 = B2 - (b12/a2) u_x1x2x2x2,
//   u_x1x1x1x2 = C1 - (a2/a1) u_x1x2x2x2,   u_x1x2x2x2 = C2 - (a1/a2) u_x1x1x1x2.
//
// The relations are built term by term from the Leibniz expansion of the
// differentiated PDE; pure third derivatives appearing inside B/C are
// replaced by A1/A2, and f-derivatives become mass (u_tau) terms.
// ---------------------------------------------------------------------------

enum class AuxTarget { A1, A2, B1, B2, C1, C2 };

std::string_view to_string(AuxTarget t) noexcept;

struct AuxRelation {
    AuxTarget target;
    CompactForm form;  // symbolic right-hand side
    DualStencil dual;  // form discretised at (h1, h2)
};

/// Node-level construction. `denominator_floor` rejects |a_k| <= floor.
AuxRelation derive_aux_third(const PdeCoefficients& c, int direction, double h1, double h2,
                             double denominator_floor = 0.0);
AuxRelation derive_aux_fourth(const PdeCoefficients& c, AuxTarget which, double h1, double h2,
                              double denominator_floor = 0.0);

AuxRelation derive_aux_third(const CoefficientField& cf, std::size_t i, std::size_t j, int direction);
AuxRelation derive_aux_fourth(const CoefficientField& cf, std::size_t i, std::size_t j, AuxTarget which);

// ---------------------------------------------------------------------------
// Scheme versions
// ---------------------------------------------------------------------------

/// Standard is the second-order central scheme. V1..V4 each drop exactly
/// one fourth derivative as a formally second-order remainder:
/// V1 u_x1x1x1x1, V2 u_x2x2x2x2, V3 u_x1x1x1x2, V4 u_x1x2x2x2.
enum class SchemeVersion { Standard, V1, V2, V3, V4 };

std::string_view to_string(SchemeVersion v) noexcept;
SchemeVersion parse_scheme(std::string_view name);

/// Orders (p, q) of the dropped fourth derivative; {0, 0} for Standard.
std::array<int, 2> remainder_orders(SchemeVersion v) noexcept;

/// Node stencil of the semi-discrete equation
///     sum(mass * U_tau) + sum(space * U) = 0.
/// HOC versions carry a centre mass weight d plus the f-contributions of
/// the auxiliary relations. The Standard row is divided by d so its mass
/// stencil is the centre identity.
DualStencil assemble_version(SchemeVersion v, const PdeCoefficients& c, double h1, double h2,
                             double denominator_floor = 0.0);
DualStencil assemble_version(SchemeVersion v, const CoefficientField& cf, std::size_t i,
                             std::size_t j);

/// The same node equation in symbolic (undiscretised) form.
CompactForm version_form(SchemeVersion v, const PdeCoefficients& c, double h1, double h2,
                         double denominator_floor = 0.0);

/// |prefactor| of the dropped fourth derivative. Requires an HOC version.
double remainder_coefficient(SchemeVersion v, const PdeCoefficients& c, double h1, double h2);
double max_remainder_coefficient(SchemeVersion v, const CoefficientField& cf);

// ---------------------------------------------------------------------------
// Boundary rows and global assembly
// ---------------------------------------------------------------------------

/// One column of an assembled row, relative to the row's node.
struct RowEntry {
    int di;
    int dj;
    double mass;
    double space;
};

/// Folds ghost weights of a 3x3 stencil into interior columns using
///     U_{i,-1}  = 3 U_{i,0} - 3 U_{i,1} + U_{i,2}      (ghost below, row j = 0)
///     U_{i,M+1} = 3 U_{i,M} - 3 U_{i,M-1} + U_{i,M-2}  (ghost above, row j = M)
/// for mass and space weights alike. Entries are sorted by (dj, di). A row
/// touching ghosts on both sides is rejected.
std::vector<RowEntry> eliminate_ghosts(const DualStencil& s, bool ghost_below, bool ghost_above);

/// Dirichlet data on the x-boundaries, one value per y-node.
struct DirichletX {
    std::vector<double> left;
    std::vector<double> right;
};

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Semi-discrete system M U_tau + K U = 0 over all grid nodes (lexicographic,
/// x fastest). Dirichlet rows have a zero M row, a unit K diagonal and the
/// boundary value recorded in `dirichlet_values`.
struct OperatorPair {
    SparseMatrix mass;
    SparseMatrix space;
    std::vector<std::size_t> dirichlet_rows;
    std::vector<double> dirichlet_values;
    std::vector<std::size_t> ghost_rows;  // rows folded at y_min / y_max

    std::size_t size() const noexcept { return static_cast<std::size_t>(mass.rows()); }
};

OperatorPair assemble_system(SchemeVersion v, const CoefficientField& cf, const DirichletX& bc);

/// Writes one line per assembled node: linear index, 9 mass weights then 9
/// space weights (offsets ordered dy = -1..1 outer, dx = -1..1 inner), in
/// full precision.
void write_stencil_dump(std::ostream& os, SchemeVersion v, const CoefficientField& cf);

}  // namespace hoc
