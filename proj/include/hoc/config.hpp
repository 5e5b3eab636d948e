#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hoc/linear_solver.hpp"
#include "hoc/schemes.hpp"
#include "hoc/sv_model.hpp"

namespace hoc {

/// One pricing problem: model, grid stretching, time ratios, solver and
/// query point. Defaults are the experiment setup of the convergence
/// studies (sigma = 0.2 gives a unit y-range for v in [0.1, 0.3]).
struct ProblemConfig {
    SVParams params;
    double zeta = 7.5;
    std::size_t n = 40;        // intervals per unit length, h = 1 / n
    double ratio_bdf = 0.1;    // k / h
    double ratio_cn = 0.4;     // k' / h^2
    double query_S = 100.0;
    double query_v = 0.3;
    SchemeVersion scheme = SchemeVersion::V3;
    LinearSolveContract solver;
};

struct StudyConfig {
    ProblemConfig problem;
    std::vector<SchemeVersion> schemes{SchemeVersion::Standard, SchemeVersion::V1, SchemeVersion::V2,
                                       SchemeVersion::V3, SchemeVersion::V4};
    std::vector<std::size_t> levels{10, 20, 40, 80};  // each h = 1 / level
    std::size_t ref_level = 160;
    std::optional<SchemeVersion> reference_scheme;  // default V3
    bool record_walltime = true;  // false writes 0 so CSVs are byte-reproducible
    std::size_t jobs = 0;         // worker threads; 0 = hardware concurrency

    /// Throws ConfigError unless levels are nested and strictly coarser than
    /// the reference level.
    void validate() const;
};

/// Flat JSON object; see README for the key list. Unknown keys are rejected.
StudyConfig study_from_json(const nlohmann::json& j);
StudyConfig load_study_config(const std::filesystem::path& path);
nlohmann::json to_json(const StudyConfig& cfg);

std::vector<std::size_t> parse_levels(const std::string& csv);
std::vector<SchemeVersion> parse_schemes(const std::string& csv);

}  // namespace hoc
