#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <system_error>

#include "hoc/errors.hpp"
#include "hoc/harness.hpp"

#ifndef HOC_VERSION
#define HOC_VERSION "unknown"
#endif

namespace hoc {
namespace {

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += sep;
        out += parts[k];
    }
    return out;
}

}  // namespace

const char* code_version() noexcept { return HOC_VERSION; }

std::string report_csv(const ConvergenceReport& report) {
    std::string out = "scheme,h,l2_error,order_fit,walltime_s,flags\n";
    for (const SchemeResult& sr : report.schemes) {
        const std::string order = sr.order ? num(*sr.order) : "nan";
        for (const LevelResult& lr : sr.levels) {
            std::vector<std::string> flags = sr.flags;
            flags.insert(flags.end(), lr.flags.begin(), lr.flags.end());
            out += std::string(to_string(sr.scheme)) + ',' + num(lr.h) + ',' + num(lr.l2_error) + ',' +
                   order + ',' + num(lr.walltime_s) + ',' + join(flags, '|') + '\n';
        }
    }
    return out;
}

std::string report_plot_data(const SchemeResult& sr) {
    std::string out = "# h l2_error\n";
    for (const LevelResult& lr : sr.levels) {
        if (lr.usable()) out += num(lr.h) + ' ' + num(lr.l2_error) + '\n';
    }
    return out;
}

std::string report_metadata(const ConvergenceReport& report) {
    nlohmann::json j;
    j["code_version"] = code_version();
    j["config"] = to_json(report.config);
    j["norm"] = kNormDescription;
    j["reference_scheme"] = std::string(to_string(report.reference_scheme));
    j["reference_level"] = report.config.ref_level;
    j["reference_walltime_s"] = report.reference_walltime_s;
    auto& schemes = j["schemes"] = nlohmann::json::array();
    for (const SchemeResult& sr : report.schemes) {
        nlohmann::json s;
        s["scheme"] = std::string(to_string(sr.scheme));
        s["order_fit"] = sr.order ? nlohmann::json(*sr.order) : nlohmann::json(nullptr);
        s["flags"] = sr.flags;
        auto& levels = s["levels"] = nlohmann::json::array();
        for (const LevelResult& lr : sr.levels) {
            levels.push_back({{"n", lr.n},
                              {"h", lr.h},
                              {"l2_error", std::isfinite(lr.l2_error) ? nlohmann::json(lr.l2_error)
                                                                      : nlohmann::json(nullptr)},
                              {"walltime_s", lr.walltime_s},
                              {"max_remainder_coefficient", lr.max_remainder},
                              {"flags", lr.flags}});
        }
        schemes.push_back(std::move(s));
    }
    return j.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

void emit_report(const ConvergenceReport& report, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    write_file_atomic(dir / "report.csv", report_csv(report));
    for (const SchemeResult& sr : report.schemes) {
        write_file_atomic(dir / (std::string(to_string(sr.scheme)) + ".dat"), report_plot_data(sr));
    }
    write_file_atomic(dir / "run_metadata.json", report_metadata(report));
}

}  // namespace hoc
