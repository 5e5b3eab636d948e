#include "hoc/time_stepper.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hoc/errors.hpp"

namespace hoc {

TimeGrid make_time_grid(double T, double h, double ratio_bdf, double ratio_cn) {
    if (!(T >= 0.0) || !std::isfinite(T)) throw InvalidArgument("time grid: T must be finite and >= 0");
    if (!(h > 0.0)) throw InvalidArgument("time grid: h must be positive");
    if (!(ratio_bdf > 0.0) || !(ratio_cn > 0.0)) {
        throw InvalidArgument("time grid: step ratios must be positive");
    }
    TimeGrid tg;
    tg.T = T;
    if (T == 0.0) return tg;
    const double k_nominal = ratio_bdf * h;
    tg.steps = static_cast<std::size_t>(std::max(1.0, std::ceil(T / k_nominal - 1e-9)));
    tg.k = T / static_cast<double>(tg.steps);
    tg.startup_levels = std::min<std::size_t>(3, tg.steps);
    const double kp_nominal = ratio_cn * h * h;
    tg.substeps = static_cast<std::size_t>(std::max(1.0, std::ceil(tg.k / kp_nominal - 1e-9)));
    tg.k_prime = tg.k / static_cast<double>(tg.substeps);
    tg.ratio_bdf = tg.k / h;
    tg.ratio_cn = tg.k_prime / (h * h);
    return tg;
}

ImplicitSystem::ImplicitSystem(const OperatorPair& ops, double alpha, double beta,
                               LinearSolveContract contract)
    : ops_(&ops),
      matrix_([&] {
          SparseMatrix a = alpha * ops.mass + beta * ops.space;
          std::vector<char> pinned(static_cast<std::size_t>(a.rows()), 0);
          for (std::size_t r : ops.dirichlet_rows) pinned[r] = 1;
          for (Eigen::Index col = 0; col < a.outerSize(); ++col) {
              for (SparseMatrix::InnerIterator it(a, col); it; ++it) {
                  if (pinned[static_cast<std::size_t>(it.row())]) {
                      it.valueRef() = (it.row() == it.col()) ? 1.0 : 0.0;
                  }
              }
          }
          a.prune(0.0);
          a.makeCompressed();
          return a;
      }()),
      solver_(matrix_, contract) {}

State ImplicitSystem::solve(State rhs, double* residual) {
    const auto& rows = ops_->dirichlet_rows;
    const auto& vals = ops_->dirichlet_values;
    for (std::size_t n = 0; n < rows.size(); ++n) rhs[static_cast<Eigen::Index>(rows[n])] = vals[n];
    State x = solver_.solve(rhs);
    if (residual != nullptr) *residual = (matrix_ * x - rhs).norm();
    for (std::size_t n = 0; n < rows.size(); ++n) x[static_cast<Eigen::Index>(rows[n])] = vals[n];
    return x;
}

namespace {

void check_shape(const OperatorPair& ops, const State& u) {
    if (static_cast<std::size_t>(u.size()) != ops.size()) {
        throw InvalidArgument("time stepper: state size " + std::to_string(u.size()) +
                              " does not match operator size " + std::to_string(ops.size()));
    }
}

State cn_rhs(const OperatorPair& ops, const State& u, double k_prime) {
    return ops.mass * u - (0.5 * k_prime) * (ops.space * u);
}

State bdf4_rhs(const OperatorPair& ops, const State& u0, const State& u1, const State& u2,
               const State& u3) {
    const State combo = 4.0 * u0 - 3.0 * u1 + (4.0 / 3.0) * u2 - 0.25 * u3;
    return ops.mass * combo;
}

constexpr double kBdf4Lead = 25.0 / 12.0;

}  // namespace

State cn_step(const OperatorPair& ops, const State& u, double k_prime, LinearSolveContract contract) {
    check_shape(ops, u);
    ImplicitSystem sys(ops, 1.0, 0.5 * k_prime, contract);
    return sys.solve(cn_rhs(ops, u, k_prime));
}

State bdf4_step(const OperatorPair& ops, const std::array<State, 4>& history, double k,
                LinearSolveContract contract) {
    for (const auto& h : history) check_shape(ops, h);
    ImplicitSystem sys(ops, kBdf4Lead, k, contract);
    return sys.solve(bdf4_rhs(ops, history[0], history[1], history[2], history[3]));
}

State integrate(const OperatorPair& ops, const State& u0, const TimeGrid& tg,
                LinearSolveContract contract, const TraceSink& trace) {
    check_shape(ops, u0);
    if (tg.steps == 0) return u0;

    double res = 0.0;
    double* res_ptr = trace ? &res : nullptr;

    // levels[n] holds U at time n k for the last four levels (ring buffer).
    std::array<State, 4> ring;
    ring[0] = u0;
    {
        ImplicitSystem cn(ops, 1.0, 0.5 * tg.k_prime, contract);
        State u = u0;
        std::size_t step = 0;
        for (std::size_t level = 1; level <= tg.startup_levels; ++level) {
            for (std::size_t s = 0; s < tg.substeps; ++s, ++step) {
                try {
                    u = cn.solve(cn_rhs(ops, u, tg.k_prime), res_ptr);
                } catch (const Error& e) {
                    throw NumericalError(std::string(e.what()) + " (CN substep " +
                                         std::to_string(step + 1) + ")");
                }
                if (trace) {
                    trace({"cn", step + 1, static_cast<double>(step + 1) * tg.k_prime, res});
                }
            }
            ring[level % 4] = u;
        }
        if (tg.steps == tg.startup_levels) return u;
    }

    ImplicitSystem bdf(ops, kBdf4Lead, tg.k, contract);
    for (std::size_t n = tg.startup_levels; n < tg.steps; ++n) {
        // ring[n % 4] = U_n, ring[(n - 1) % 4] = U_{n-1}, ...
        const State rhs = bdf4_rhs(ops, ring[n % 4], ring[(n + 3) % 4], ring[(n + 2) % 4],
                                   ring[(n + 1) % 4]);
        try {
            ring[(n + 1) % 4] = bdf.solve(rhs, res_ptr);
        } catch (const Error& e) {
            throw NumericalError(std::string(e.what()) + " (BDF4 step " + std::to_string(n + 1) + ")");
        }
        if (trace) trace({"bdf4", n + 1, static_cast<double>(n + 1) * tg.k, res});
    }
    return ring[tg.steps % 4];
}

}  // namespace hoc
