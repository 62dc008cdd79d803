/**
 * @file sweep.hpp
 * @brief Case enumeration, sweep configs, and the (optionally parallel)
 *        case runner.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "hwsum/identities.hpp"

namespace hwsum {

/// One case to evaluate: an identity plus a full parameter binding.
struct CaseRequest {
    const IdentityDescriptor* descriptor = nullptr;
    Binding binding;
};

/// Per-parameter value lists. Parameters not named fall back to the
/// identity's default sweep list.
using ValueOverrides = std::map<std::string, std::vector<ExactScalar>>;

/// Cartesian product of the identity's default sweep lists, in parameter
/// declaration order. Inadmissible bindings are kept (they surface as
/// skipped_domain) so that sweeps are reproducible row-for-row.
std::vector<CaseRequest> enumerate_default_cases(const IdentityDescriptor& d);

/// Same, with selected parameter lists replaced. Throws std::runtime_error
/// if an override names a parameter the identity does not have or a list is
/// empty.
std::vector<CaseRequest> enumerate_cases(const IdentityDescriptor& d,
                                         const ValueOverrides& overrides);

/// Evaluates all requests, preserving request order in the result. `jobs` is
/// the worker-thread count (values < 2 run inline).
std::vector<CaseResult> run_cases(const std::vector<CaseRequest>& requests,
                                  const EvalOptions& opts, int jobs);

/// Parses a value list: comma-separated rationals, where an item may also be
/// an inclusive integer range "lo..hi". Throws std::runtime_error on bad
/// syntax.
std::vector<ExactScalar> parse_value_list(const std::string& text);

/// One config section: an identity id and its parameter overrides.
struct ConfigEntry {
    std::string id;
    ValueOverrides overrides;
};

/// Parses a sweep config file:
///   # comment
///   [identity_id]
///   n = 0..12
///   x = 0, 1/2, -1/3
/// Sections may repeat. Throws std::runtime_error on syntax errors or
/// unreadable files.
std::vector<ConfigEntry> parse_config_file(const std::string& path);

/// Resolves a worker count: values >= 1 pass through; 0 means "auto" (the
/// HWSUM_JOBS environment variable if set, else the hardware concurrency,
/// else 1).
int resolve_jobs(int requested);

}  // namespace hwsum
