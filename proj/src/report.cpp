/**
 * @file report.cpp
 * @brief JSON/CSV/text rendering of verification runs.
 */
#include "hwsum/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hwsum {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json case_to_json(const CaseResult& c) {
    ordered_json params = ordered_json::object();
    for (const auto& [name, literal] : c.params) params[name] = literal;
    ordered_json j = ordered_json::object();
    j["identity"] = c.identity;
    j["params"] = std::move(params);
    j["mode"] = mode_name(c.mode);
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["verdict"] = verdict_name(c.verdict);
    j["abs_diff"] = c.abs_diff;
    j["terms_used"] = c.terms_used;
    j["elapsed_ms"] = c.elapsed_ms;
    j["note"] = c.note;
    return j;
}

}  // namespace

RunSummary summarize(const std::vector<CaseResult>& cases, double elapsed_ms) {
    RunSummary s;
    s.total = static_cast<long>(cases.size());
    s.elapsed_ms = elapsed_ms;
    for (const auto& c : cases) {
        switch (c.verdict) {
            case Verdict::equal_exact:
            case Verdict::within_tol:
                ++s.passed;
                break;
            case Verdict::mismatch:
                ++s.failed;
                break;
            case Verdict::skipped_domain:
                ++s.skipped;
                break;
        }
    }
    return s;
}

std::string render_json(const RunOptions& opts, const std::vector<CaseResult>& cases,
                        const RunSummary& summary) {
    ordered_json j = ordered_json::object();
    j["tool"] = "hwsum";
    j["version"] = "1.0.0";
    ordered_json jo = ordered_json::object();
    jo["tol"] = opts.tol;
    jo["max_terms"] = opts.max_terms;
    jo["jobs"] = opts.jobs;
    jo["mutate"] = opts.mutate;
    j["options"] = std::move(jo);
    ordered_json jc = ordered_json::array();
    for (const auto& c : cases) jc.push_back(case_to_json(c));
    j["cases"] = std::move(jc);
    ordered_json js = ordered_json::object();
    js["total"] = summary.total;
    js["passed"] = summary.passed;
    js["failed"] = summary.failed;
    js["skipped"] = summary.skipped;
    js["elapsed_ms"] = summary.elapsed_ms;
    j["summary"] = std::move(js);
    return j.dump(2) + "\n";
}

std::string render_csv(const std::vector<CaseResult>& cases) {
    std::ostringstream out;
    out << "identity,params,mode,lhs,rhs,verdict,abs_diff,terms_used,elapsed_ms\n";
    for (const auto& c : cases) {
        std::string params;
        for (const auto& [name, literal] : c.params) {
            if (!params.empty()) params += ';';
            params += name + "=" + literal;
        }
        char diff[32];
        std::snprintf(diff, sizeof(diff), "%.17g", c.abs_diff);
        char ms[32];
        std::snprintf(ms, sizeof(ms), "%.3f", c.elapsed_ms);
        out << c.identity << ',' << params << ',' << mode_name(c.mode) << ',' << c.lhs << ','
            << c.rhs << ',' << verdict_name(c.verdict) << ',' << diff << ',' << c.terms_used
            << ',' << ms << '\n';
    }
    return out.str();
}

std::string case_line(const CaseResult& c, bool show_values) {
    std::string line = c.identity;
    for (const auto& [name, literal] : c.params) line += " " + name + "=" + literal;
    line += ": ";
    line += verdict_name(c.verdict);
    if (show_values && c.verdict != Verdict::skipped_domain) {
        line += "  lhs=" + c.lhs + " rhs=" + c.rhs;
        if (c.mode == Mode::numeric) {
            char diff[32];
            std::snprintf(diff, sizeof(diff), "%.3g", c.abs_diff);
            line += std::string(" |diff|=") + diff;
        }
    }
    if (!c.note.empty()) line += "  (" + c.note + ")";
    return line;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

}  // namespace hwsum
