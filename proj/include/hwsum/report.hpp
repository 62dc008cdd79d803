/**
 * @file report.hpp
 * @brief Run reports: aggregation, JSON and CSV rendering.
 */
#pragma once

#include <string>
#include <vector>

#include "hwsum/identities.hpp"

namespace hwsum {

/// Echo of the options a run was performed with.
struct RunOptions {
    double tol = 1e-8;
    long max_terms = 100000;
    int jobs = 1;
    std::string mutate;  // mutated identity id, empty for none
};

struct RunSummary {
    long total = 0;
    long passed = 0;   // equal_exact + within_tol
    long failed = 0;   // mismatch
    long skipped = 0;  // skipped_domain
    double elapsed_ms = 0.0;
};

RunSummary summarize(const std::vector<CaseResult>& cases, double elapsed_ms);

/// Full report as JSON text (two-space indent, trailing newline). Stable
/// field order; identical runs differ only in the elapsed_ms fields.
std::string render_json(const RunOptions& opts, const std::vector<CaseResult>& cases,
                        const RunSummary& summary);

/// Case table as CSV (header + one row per case).
std::string render_csv(const std::vector<CaseResult>& cases);

/// One-line textual form of a case, e.g.
///   "thm_a t=0 n=3 x=1/2: equal_exact  lhs=8/3 rhs=8/3".
std::string case_line(const CaseResult& c, bool show_values);

/// Writes `text` to `path`, or to stdout when path is empty. Throws
/// std::runtime_error if the file cannot be opened.
void write_text(const std::string& path, const std::string& text);

}  // namespace hwsum
