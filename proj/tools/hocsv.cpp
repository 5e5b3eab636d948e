// Command-line front end: single pricing solves, convergence studies and
// stencil dumps for the stochastic volatility problem.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hoc/config.hpp"
#include "hoc/errors.hpp"
#include "hoc/harness.hpp"

namespace {

// Exit codes by error category.
int exit_code(hoc::ErrorCategory c) {
    switch (c) {
        case hoc::ErrorCategory::InvalidArgument: return 2;
        case hoc::ErrorCategory::Config: return 3;
        case hoc::ErrorCategory::Numerical: return 4;
        case hoc::ErrorCategory::Io: return 5;
    }
    return 1;
}

struct CommonOptions {
    std::string config;
    std::string scheme;
    std::string levels;
    std::optional<std::size_t> ref_level;
    std::optional<std::size_t> n;
    std::string out;
    bool fine_reference = false;
    bool no_timing = false;
    bool trace = false;
    std::optional<std::size_t> jobs;
};

hoc::StudyConfig resolve(const CommonOptions& o) {
    hoc::StudyConfig cfg = o.config.empty() ? hoc::StudyConfig{} : hoc::load_study_config(o.config);
    if (!o.scheme.empty()) {
        cfg.schemes = hoc::parse_schemes(o.scheme);
        cfg.problem.scheme = cfg.schemes.front();
    }
    if (!o.levels.empty()) cfg.levels = hoc::parse_levels(o.levels);
    if (o.fine_reference) cfg.ref_level = 320;
    if (o.ref_level) cfg.ref_level = *o.ref_level;
    if (o.n) cfg.problem.n = *o.n;
    if (o.no_timing) cfg.record_walltime = false;
    if (o.jobs) cfg.jobs = *o.jobs;
    return cfg;
}

int run_price(const CommonOptions& o) {
    const hoc::StudyConfig cfg = resolve(o);
    const hoc::ProblemConfig& pc = cfg.problem;
    hoc::TraceSink sink;
    if (o.trace) {
        sink = [](const hoc::StepTrace& t) {
            std::fprintf(stderr, "%s %zu %.12g %.6e\n", std::string(t.phase).c_str(), t.step, t.time,
                         t.residual);
        };
    }
    const hoc::SolveOutcome out = hoc::solve(pc, pc.scheme, pc.n, sink);
    const double price = hoc::price_at(out.problem, out.u, pc.query_S, pc.query_v);
    std::printf("scheme=%s n=%zu S=%.12g v=%.12g tau=%.12g price=%.12g\n",
                std::string(hoc::to_string(pc.scheme)).c_str(), pc.n, pc.query_S, pc.query_v,
                pc.params.T, price);
    if (pc.params.alpha == 0.0 && pc.params.T > 0.0) {
        const double ref = hoc::heston_reference_price(pc.params, pc.query_S, pc.query_v, pc.params.T);
        std::printf("heston_reference=%.12g abs_diff=%.6e\n", ref, std::abs(price - ref));
    }
    std::printf("cn_substeps=%zu bdf4_steps=%zu walltime_s=%.3f\n", out.time.cn_steps(),
                out.time.bdf_steps(), out.walltime_s);
    return 0;
}

int run_converge(const CommonOptions& o) {
    const hoc::StudyConfig cfg = resolve(o);
    const hoc::ConvergenceReport report = hoc::run_convergence(cfg);
    const std::string csv = hoc::report_csv(report);
    if (!o.out.empty()) {
        hoc::emit_report(report, o.out);
        std::fprintf(stderr, "wrote report to %s\n", o.out.c_str());
    }
    std::fputs(csv.c_str(), stdout);
    return 0;
}

int run_dump(const CommonOptions& o) {
    const hoc::StudyConfig cfg = resolve(o);
    const hoc::ProblemConfig& pc = cfg.problem;
    const hoc::TransformedProblem prob = hoc::build_problem(pc.params, pc.zeta, pc.n);
    if (o.out.empty()) {
        hoc::write_stencil_dump(std::cout, pc.scheme, prob.cf);
        return 0;
    }
    std::ofstream file(o.out);
    if (!file) throw hoc::IoError("cannot open " + o.out);
    hoc::write_stencil_dump(file, pc.scheme, prob.cf);
    return 0;
}

void add_common(CLI::App* app, CommonOptions& o) {
    app->add_option("--config", o.config, "JSON configuration file")->check(CLI::ExistingFile);
    app->add_option("--scheme", o.scheme, "Scheme(s): Standard, V1, V2, V3, V4 (comma separated)");
    app->add_option("--n", o.n, "Intervals per unit length (h = 1/n)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-order compact solver for stochastic volatility option pricing"};
    app.require_subcommand(1);
    CommonOptions opts;

    auto* price = app.add_subcommand("price", "Single solve; prints V at the query (S, v)");
    add_common(price, opts);
    price->add_flag("--trace", opts.trace, "Per-step trace (phase, step, time, residual) on stderr");

    auto* converge = app.add_subcommand("converge", "Convergence study against a fine reference");
    add_common(converge, opts);
    converge->add_option("--levels", opts.levels, "Grid levels as n values, e.g. 10,20,40,80");
    converge->add_option("--ref-level", opts.ref_level, "Reference level n (default 160)");
    converge->add_flag("--fine-reference", opts.fine_reference, "Use the h = 1/320 reference");
    converge->add_option("--out", opts.out, "Output directory for report files");
    converge->add_flag("--no-timing", opts.no_timing, "Write 0 for wall times (reproducible CSV)");
    converge->add_option("--jobs", opts.jobs, "Worker threads (default: hardware concurrency)");

    auto* dump = app.add_subcommand("stencil-dump", "Write node stencils (index, 9 mass, 9 space)");
    add_common(dump, opts);
    dump->add_option("--out", opts.out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*price) return run_price(opts);
        if (*converge) return run_converge(opts);
        if (*dump) return run_dump(opts);
    } catch (const hoc::Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", hoc::to_string(e.category()), e.what());
        return exit_code(e.category());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error [internal]: %s\n", e.what());
        return 1;
    }
    return 1;
}
