#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "hoc/errors.hpp"
#include "hoc/schemes.hpp"

namespace hoc {

std::vector<RowEntry> eliminate_ghosts(const DualStencil& s, bool ghost_below, bool ghost_above) {
    if (ghost_below && ghost_above) {
        throw InvalidArgument("eliminate_ghosts: row touches ghost nodes on both y-boundaries");
    }
    std::map<std::pair<int, int>, std::pair<double, double>> acc;  // (dj, di) -> (mass, space)
    auto put = [&](int di, int dj, double factor, double m, double k) {
        auto& e = acc[{dj, di}];
        e.first += factor * m;
        e.second += factor * k;
    };
    for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
            const double m = s.mass.at(dx, dy);
            const double k = s.space.at(dx, dy);
            if (dy == -1 && ghost_below) {
                put(dx, 0, 3.0, m, k);
                put(dx, 1, -3.0, m, k);
                put(dx, 2, 1.0, m, k);
            } else if (dy == 1 && ghost_above) {
                put(dx, 0, 3.0, m, k);
                put(dx, -1, -3.0, m, k);
                put(dx, -2, 1.0, m, k);
            } else {
                put(dx, dy, 1.0, m, k);
            }
        }
    }
    std::vector<RowEntry> row;
    row.reserve(acc.size());
    for (const auto& [key, val] : acc) {
        row.push_back({key.second, key.first, val.first, val.second});
    }
    return row;
}

OperatorPair assemble_system(SchemeVersion v, const CoefficientField& cf, const DirichletX& bc) {
    const Grid2D& g = cf.grid();
    const std::size_t nx = g.nodes_x(), ny = g.nodes_y();
    if (bc.left.size() != ny || bc.right.size() != ny) {
        throw InvalidArgument("assemble_system: Dirichlet data must have one value per y-node");
    }
    using Triplet = Eigen::Triplet<double>;
    std::vector<Triplet> mass_t, space_t;
    mass_t.reserve(g.size() * 12);
    space_t.reserve(g.size() * 12);

    OperatorPair ops;
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const auto row = static_cast<int>(g.index(i, j));
            if (i == 0 || i + 1 == nx) {
                space_t.emplace_back(row, row, 1.0);
                ops.dirichlet_rows.push_back(static_cast<std::size_t>(row));
                ops.dirichlet_values.push_back(i == 0 ? bc.left[j] : bc.right[j]);
                continue;
            }
            DualStencil s;
            try {
                s = assemble_version(v, cf, i, j);
            } catch (const Error& e) {
                throw NumericalError(std::string(e.what()) + " (node " + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
            }
            const bool below = (j == 0);
            const bool above = (j + 1 == ny);
            if (below || above) ops.ghost_rows.push_back(static_cast<std::size_t>(row));
            for (const RowEntry& e : eliminate_ghosts(s, below, above)) {
                const auto col = static_cast<int>(g.index(i + e.di, j + e.dj));
                if (e.mass != 0.0) mass_t.emplace_back(row, col, e.mass);
                if (e.space != 0.0) space_t.emplace_back(row, col, e.space);
            }
        }
    }
    const auto n = static_cast<Eigen::Index>(g.size());
    ops.mass.resize(n, n);
    ops.space.resize(n, n);
    ops.mass.setFromTriplets(mass_t.begin(), mass_t.end());
    ops.space.setFromTriplets(space_t.begin(), space_t.end());
    ops.mass.makeCompressed();
    ops.space.makeCompressed();
    return ops;
}

void write_stencil_dump(std::ostream& os, SchemeVersion v, const CoefficientField& cf) {
    const Grid2D& g = cf.grid();
    char buf[32];
    for (std::size_t j = 0; j < g.nodes_y(); ++j) {
        for (std::size_t i = 1; i + 1 < g.nodes_x(); ++i) {
            const DualStencil s = assemble_version(v, cf, i, j);
            os << g.index(i, j);
            for (double w : s.mass.w) {
                std::snprintf(buf, sizeof buf, " %.17g", w);
                os << buf;
            }
            for (double w : s.space.w) {
                std::snprintf(buf, sizeof buf, " %.17g", w);
                os << buf;
            }
            os << '\n';
        }
    }
}

}  // namespace hoc
