#include "hoc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "hoc/errors.hpp"

namespace hoc {

double l2_error(const State& u, const Grid2D& grid, const State& u_ref, const Grid2D& grid_ref) {
    if (!is_nested(grid, grid_ref)) {
        throw InvalidArgument("l2_error: grids are not nested");
    }
    if (static_cast<std::size_t>(u.size()) != grid.size() ||
        static_cast<std::size_t>(u_ref.size()) != grid_ref.size()) {
        throw InvalidArgument("l2_error: grid function size mismatch");
    }
    const std::size_t r = grid_ref.n1() / grid.n1();
    double acc = 0.0;
    for (std::size_t j = 1; j < grid.n2(); ++j) {
        for (std::size_t i = 1; i < grid.n1(); ++i) {
            const double e = u[static_cast<Eigen::Index>(grid.index(i, j))] -
                             u_ref[static_cast<Eigen::Index>(grid_ref.index(r * i, r * j))];
            acc += e * e;
        }
    }
    return std::sqrt(grid.h() * grid.h() * acc);
}

double fit_order(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw InvalidArgument("fit_order: need at least two points");
    double sx = 0, sy = 0;
    for (const auto& [h, e] : points) {
        if (!(h > 0.0) || !(e > 0.0) || !std::isfinite(e)) {
            throw InvalidArgument("fit_order: step sizes and errors must be positive and finite");
        }
        sx += std::log(h);
        sy += std::log(e);
    }
    const double n = static_cast<double>(points.size());
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (const auto& [h, e] : points) {
        const double dx = std::log(h) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(e) - my);
    }
    if (sxx == 0.0) throw InvalidArgument("fit_order: all step sizes are equal");
    return sxy / sxx;
}

bool diverged(const State& u) {
    for (Eigen::Index k = 0; k < u.size(); ++k) {
        if (!std::isfinite(u[k]) || std::abs(u[k]) > 1e3) return true;
    }
    return false;
}

SolveOutcome solve(const ProblemConfig& cfg, SchemeVersion scheme, std::size_t n,
                   const TraceSink& trace) {
    const auto start = std::chrono::steady_clock::now();
    TransformedProblem prob = build_problem(cfg.params, cfg.zeta, n);
    const OperatorPair ops = assemble_system(scheme, prob.cf, prob.bc);
    const TimeGrid tg = make_time_grid(cfg.params.T, prob.grid.h(), cfg.ratio_bdf, cfg.ratio_cn);
    State u = integrate(ops, prob.u0, tg, cfg.solver, trace);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return SolveOutcome{std::move(prob), tg, std::move(u), secs};
}

bool LevelResult::usable() const noexcept {
    if (!(l2_error > 0.0) || !std::isfinite(l2_error)) return false;
    for (const auto& f : flags) {
        if (f == "diverged" || f.rfind("failed", 0) == 0) return false;
    }
    return true;
}

namespace {

void run_jobs(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& work) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, count);
    if (jobs <= 1) {
        for (std::size_t k = 0; k < count; ++k) work(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++) work(k);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

ConvergenceReport run_convergence(const StudyConfig& cfg) {
    cfg.validate();
    ConvergenceReport report;
    report.config = cfg;
    report.reference_scheme = cfg.reference_scheme.value_or(SchemeVersion::V3);

    const SolveOutcome ref = solve(cfg.problem, report.reference_scheme, cfg.ref_level);
    if (diverged(ref.u)) {
        throw NumericalError("reference solution diverged at h = 1/" + std::to_string(cfg.ref_level));
    }
    report.reference_walltime_s = cfg.record_walltime ? ref.walltime_s : 0.0;

    const std::size_t nl = cfg.levels.size();
    report.schemes.resize(cfg.schemes.size());
    for (std::size_t s = 0; s < cfg.schemes.size(); ++s) {
        report.schemes[s].scheme = cfg.schemes[s];
        report.schemes[s].levels.resize(nl);
    }

    run_jobs(cfg.schemes.size() * nl, cfg.jobs, [&](std::size_t job) {
        const std::size_t s = job / nl, l = job % nl;
        const SchemeVersion v = cfg.schemes[s];
        LevelResult& lr = report.schemes[s].levels[l];
        lr.n = cfg.levels[l];
        lr.h = 1.0 / static_cast<double>(lr.n);
        try {
            const SolveOutcome out = solve(cfg.problem, v, lr.n);
            lr.walltime_s = cfg.record_walltime ? out.walltime_s : 0.0;
            if (v != SchemeVersion::Standard) lr.max_remainder = max_remainder_coefficient(v, out.problem.cf);
            if (diverged(out.u)) {
                lr.flags.push_back("diverged");
                lr.l2_error = std::numeric_limits<double>::quiet_NaN();
            } else {
                lr.l2_error = l2_error(out.u, out.problem.grid, ref.u, ref.problem.grid);
            }
        } catch (const Error& e) {
            lr.flags.push_back(std::string("failed-") + to_string(e.category()));
            lr.l2_error = std::numeric_limits<double>::quiet_NaN();
        }
    });

    for (SchemeResult& sr : report.schemes) {
        std::sort(sr.levels.begin(), sr.levels.end(),
                  [](const LevelResult& a, const LevelResult& b) { return a.n < b.n; });
        std::vector<std::pair<double, double>> pts;
        const LevelResult* prev = nullptr;
        for (LevelResult& lr : sr.levels) {
            if (!lr.usable()) continue;
            if (prev != nullptr && !(lr.l2_error < prev->l2_error)) lr.flags.push_back("non-monotone");
            pts.emplace_back(lr.h, lr.l2_error);
            prev = &lr;
        }
        bool unstable = false;
        for (const auto& lr : sr.levels) {
            for (const auto& f : lr.flags) unstable = unstable || f == "diverged";
        }
        if (unstable) sr.flags.push_back("unstable");
        if (pts.size() >= 2) {
            sr.order = fit_order(pts);
        } else {
            sr.flags.push_back("insufficient-points");
        }
    }
    return report;
}

}  // namespace hoc
