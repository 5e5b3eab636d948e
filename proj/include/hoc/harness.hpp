#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hoc/config.hpp"
#include "hoc/sv_model.hpp"
#include "hoc/time_stepper.hpp"

namespace hoc {

/// Absolute discrete l2 error sqrt(h^2 * sum (U - U_ref)^2) over the
/// interior nodes of the coarse grid, with U_ref restricted by node
/// matching. Throws InvalidArgument for non-nested grids.
double l2_error(const State& u, const Grid2D& grid, const State& u_ref, const Grid2D& grid_ref);

inline constexpr const char* kNormDescription =
    "absolute l2 error sqrt(h^2 * sum_{interior coarse nodes} (U - U_ref)^2)";

/// Least-squares slope of log(error) against log(h). Needs at least two
/// points with positive errors.
double fit_order(std::span<const std::pair<double, double>> points);

struct SolveOutcome {
    TransformedProblem problem;
    TimeGrid time;
    State u;
    double walltime_s = 0.0;
};

/// Builds, assembles and integrates one configuration to tau = T.
SolveOutcome solve(const ProblemConfig& cfg, SchemeVersion scheme, std::size_t n,
                   const TraceSink& trace = {});

/// Divergence test: any non-finite value or max |u| above 1e3.
bool diverged(const State& u);

struct LevelResult {
    std::size_t n = 0;
    double h = 0.0;
    double l2_error = 0.0;
    double walltime_s = 0.0;
    double max_remainder = 0.0;  // EHOC diagnostic, 0 for Standard
    std::vector<std::string> flags;
    bool usable() const noexcept;  // finite positive error, not diverged or failed
};

struct SchemeResult {
    SchemeVersion scheme = SchemeVersion::V3;
    std::vector<LevelResult> levels;
    std::optional<double> order;
    std::vector<std::string> flags;
};

struct ConvergenceReport {
    StudyConfig config;
    SchemeVersion reference_scheme = SchemeVersion::V3;
    double reference_walltime_s = 0.0;
    std::vector<SchemeResult> schemes;
};

/// Runs every (scheme, level) pair against one reference solution.
/// Reference failures propagate; per-level failures are flagged and
/// excluded from the fit.
ConvergenceReport run_convergence(const StudyConfig& cfg);

std::string report_csv(const ConvergenceReport& report);
std::string report_plot_data(const SchemeResult& scheme);
std::string report_metadata(const ConvergenceReport& report);

/// Writes report.csv, <scheme>.dat per scheme and run_metadata.json into
/// `dir` (created if missing). Each file is written to a temporary name
/// and renamed into place.
void emit_report(const ConvergenceReport& report, const std::filesystem::path& dir);

/// Atomic file write (temp file + rename).
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

const char* code_version() noexcept;

}  // namespace hoc
