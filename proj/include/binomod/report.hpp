#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "binomod/scan.hpp"

namespace binomod {

struct RunConfig {
    std::vector<i64> primes{2, 3, 5, 7};
    i64 k_max = 300;
    i64 q_max = 256;
    i64 s_max = 2;
    i64 fermat_q_max = 343;
    i64 vertical_ps_max = 625;
    std::string output_format = "json";  // json, csv or text

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct VerificationSummary {
    std::vector<ScanReport> reports;
    bool pass = true;

    friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

inline nlohmann::json to_json(const ScanReport& r) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : r.violations)
        vs.push_back({{"params", v.params}, {"evidence_row", v.evidence}});
    return {{"theorem_id", r.theorem_id},
            {"parameter_space", r.parameter_space},
            {"instances_checked", r.instances_checked},
            {"violations", vs}};
}

inline nlohmann::json to_json(const VerificationSummary& s, const RunConfig& cfg) {
    nlohmann::json summaries = nlohmann::json::array();
    for (const auto& r : s.reports) summaries.push_back(to_json(r));
    nlohmann::json config = {{"primes", cfg.primes},
                             {"k_max", cfg.k_max},
                             {"q_max", cfg.q_max},
                             {"s_max", cfg.s_max},
                             {"fermat_q_max", cfg.fermat_q_max},
                             {"vertical_ps_max", cfg.vertical_ps_max},
                             {"output_format", cfg.output_format}};
    return {{"config", config}, {"summaries", summaries}, {"pass", s.pass}};
}

inline ScanReport scan_report_from_json(const nlohmann::json& j) {
    ScanReport r;
    r.theorem_id = j.at("theorem_id").get<std::string>();
    r.parameter_space = j.at("parameter_space").get<std::string>();
    r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
    for (const auto& v : j.at("violations")) {
        Violation viol;
        viol.params = v.at("params").get<std::map<std::string, i64>>();
        viol.evidence = v.at("evidence_row").get<std::vector<int>>();
        r.violations.push_back(std::move(viol));
    }
    return r;
}

inline VerificationSummary summary_from_json(const nlohmann::json& j) {
    VerificationSummary s;
    for (const auto& r : j.at("summaries")) s.reports.push_back(scan_report_from_json(r));
    s.pass = j.at("pass").get<bool>();
    return s;
}

namespace detail {

inline std::string csv_field(const std::map<std::string, i64>& params, const char* key) {
    auto it = params.find(key);
    return it == params.end() ? std::string{} : std::to_string(it->second);
}

}  // namespace detail

/// Flat CSV, one header plus one row per theorem summary and per violation:
/// theorem_id,p,k,h,s,q,subgroup_order,verdict,detail
inline std::string to_csv(const VerificationSummary& s) {
    std::ostringstream out;
    out << "theorem_id,p,k,h,s,q,subgroup_order,verdict,detail\n";
    for (const auto& r : s.reports) {
        out << r.theorem_id << ",,,,,,,"
            << (r.clean() ? "ok" : "violations") << ","
            << r.parameter_space << " instances=" << r.instances_checked << "\n";
        for (const auto& v : r.violations) {
            out << r.theorem_id << ',' << detail::csv_field(v.params, "p") << ','
                << detail::csv_field(v.params, "k") << ',' << detail::csv_field(v.params, "h")
                << ',' << detail::csv_field(v.params, "s") << ','
                << detail::csv_field(v.params, "q") << ','
                << detail::csv_field(v.params, "subgroup_order") << ",violation,";
            bool first = true;
            for (const auto& [key, val] : v.params) {
                if (key == "p" || key == "k" || key == "h" || key == "s" || key == "q" ||
                    key == "subgroup_order")
                    continue;
                out << (first ? "" : " ") << key << '=' << val;
                first = false;
            }
            out << "\n";
        }
    }
    return out.str();
}

inline std::string to_text(const VerificationSummary& s) {
    std::ostringstream out;
    for (const auto& r : s.reports)
        out << r.theorem_id << ' ' << r.parameter_space << ": " << r.instances_checked
            << " instances, " << r.violations.size() << " violations\n";
    out << (s.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

inline std::string emit_report(const VerificationSummary& s, const RunConfig& cfg) {
    if (cfg.output_format == "json") return to_json(s, cfg).dump(2) + "\n";
    if (cfg.output_format == "csv") return to_csv(s);
    if (cfg.output_format == "text") return to_text(s);
    throw std::invalid_argument("emit_report: unknown output format " + cfg.output_format);
}

}  // namespace binomod
