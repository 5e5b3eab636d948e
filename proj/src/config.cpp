#include "hoc/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hoc/errors.hpp"
#include "hoc/grid.hpp"

namespace hoc {
namespace {

const std::set<std::string> kKeys{
    "alpha", "kappa", "theta", "sigma", "y_range", "rho", "r", "K", "T",
    "S_min", "S_max", "v_min", "v_max", "zeta", "n", "ratio_bdf", "ratio_cn",
    "query_S", "query_v", "scheme", "solver", "rel_tol", "schemes", "levels",
    "ref_level", "reference_scheme", "record_walltime", "jobs",
};

template <typename T>
void read(const nlohmann::json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

}  // namespace

void StudyConfig::validate() const {
    if (schemes.empty()) throw ConfigError("study: no schemes selected");
    if (levels.empty()) throw ConfigError("study: no grid levels");
    for (std::size_t n : levels) {
        if (n < 4) throw ConfigError("study: level " + std::to_string(n) + " is below 4 intervals");
        if (n >= ref_level) {
            throw ConfigError("study: reference level 1/" + std::to_string(ref_level) +
                              " must be finer than every level (got 1/" + std::to_string(n) + ")");
        }
        if (ref_level % n != 0) {
            throw ConfigError("study: level 1/" + std::to_string(n) +
                              " is not nested in the reference level 1/" + std::to_string(ref_level));
        }
    }
}

StudyConfig study_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        if (!kKeys.count(key)) throw ConfigError("config: unknown key '" + key + "'");
    }
    StudyConfig cfg;
    ProblemConfig& pc = cfg.problem;
    SVParams& p = pc.params;
    read(j, "alpha", p.alpha);
    read(j, "kappa", p.kappa);
    read(j, "theta", p.theta);
    read(j, "rho", p.rho);
    read(j, "r", p.r);
    read(j, "K", p.strike);
    read(j, "T", p.T);
    read(j, "S_min", p.S_min);
    read(j, "S_max", p.S_max);
    read(j, "v_min", p.v_min);
    read(j, "v_max", p.v_max);
    if (j.contains("sigma") && j.contains("y_range")) {
        throw ConfigError("config: give either 'sigma' or 'y_range', not both");
    }
    read(j, "sigma", p.sigma);
    if (j.contains("y_range")) {
        double y_range = 0.0;
        read(j, "y_range", y_range);
        if (!(y_range > 0.0)) throw ConfigError("config: y_range must be positive");
        p.sigma = (p.v_max - p.v_min) / y_range;
    }
    read(j, "zeta", pc.zeta);
    read(j, "n", pc.n);
    read(j, "ratio_bdf", pc.ratio_bdf);
    read(j, "ratio_cn", pc.ratio_cn);
    read(j, "query_S", pc.query_S);
    read(j, "query_v", pc.query_v);
    try {
        if (j.contains("scheme")) pc.scheme = parse_scheme(j.at("scheme").get<std::string>());
        if (j.contains("schemes")) {
            cfg.schemes.clear();
            for (const auto& s : j.at("schemes")) cfg.schemes.push_back(parse_scheme(s.get<std::string>()));
        }
        if (j.contains("reference_scheme")) {
            cfg.reference_scheme = parse_scheme(j.at("reference_scheme").get<std::string>());
        }
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (j.contains("solver")) {
        std::string mode;
        read(j, "solver", mode);
        if (mode == "direct") {
            pc.solver.mode = SolveMode::DirectReuse;
        } else if (mode == "iterative") {
            pc.solver.mode = SolveMode::Iterative;
        } else {
            throw ConfigError("config: solver must be 'direct' or 'iterative'");
        }
    }
    read(j, "rel_tol", pc.solver.rel_tol);
    read(j, "levels", cfg.levels);
    read(j, "ref_level", cfg.ref_level);
    read(j, "record_walltime", cfg.record_walltime);
    read(j, "jobs", cfg.jobs);
    try {
        p.validate();
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

StudyConfig load_study_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file " + path.string() + ": " + e.what());
    }
    return study_from_json(j);
}

nlohmann::json to_json(const StudyConfig& cfg) {
    const ProblemConfig& pc = cfg.problem;
    const SVParams& p = pc.params;
    nlohmann::json j;
    j["alpha"] = p.alpha;
    j["kappa"] = p.kappa;
    j["theta"] = p.theta;
    j["sigma"] = p.sigma;
    j["rho"] = p.rho;
    j["r"] = p.r;
    j["K"] = p.strike;
    j["T"] = p.T;
    j["S_min"] = p.S_min;
    j["S_max"] = p.S_max;
    j["v_min"] = p.v_min;
    j["v_max"] = p.v_max;
    j["zeta"] = pc.zeta;
    j["n"] = pc.n;
    j["ratio_bdf"] = pc.ratio_bdf;
    j["ratio_cn"] = pc.ratio_cn;
    j["query_S"] = pc.query_S;
    j["query_v"] = pc.query_v;
    j["scheme"] = std::string(to_string(pc.scheme));
    j["solver"] = pc.solver.mode == SolveMode::DirectReuse ? "direct" : "iterative";
    j["rel_tol"] = pc.solver.rel_tol;
    auto& schemes = j["schemes"] = nlohmann::json::array();
    for (auto s : cfg.schemes) schemes.push_back(std::string(to_string(s)));
    j["levels"] = cfg.levels;
    j["ref_level"] = cfg.ref_level;
    if (cfg.reference_scheme) j["reference_scheme"] = std::string(to_string(*cfg.reference_scheme));
    j["record_walltime"] = cfg.record_walltime;
    return j;
}

std::vector<std::size_t> parse_levels(const std::string& csv) {
    std::vector<std::size_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item.rfind("1/", 0) == 0) item = item.substr(2);
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception&) {
            throw ConfigError("level '" + item + "' is not a positive integer (use n for h = 1/n)");
        }
        if (pos != item.size() || v == 0) {
            throw ConfigError("level '" + item + "' is not a positive integer (use n for h = 1/n)");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::vector<SchemeVersion> parse_schemes(const std::string& csv) {
    std::vector<SchemeVersion> out;
    std::stringstream ss(csv);
    std::string item;
    try {
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) out.push_back(parse_scheme(item));
        }
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    return out;
}

}  // namespace hoc
