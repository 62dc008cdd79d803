/**
 * @file main.cpp
 * @brief hwsum: list, verify, sweep, and inspect the identity registry.
 *
 * Exit codes: 0 all verified cases passed, 1 at least one mismatch,
 * 2 usage or input error.
 */
#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hwsum/report.hpp"
#include "hwsum/sweep.hpp"

namespace {

using namespace hwsum;

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

/// Raw per-parameter flag text, parsed lazily into value lists.
using FlagValues = std::map<std::string, std::string>;

const std::vector<std::string>& param_flag_names() {
    static const std::vector<std::string> names = {"t", "n", "p", "x", "y",
                                                   "a", "b", "c", "d", "e"};
    return names;
}

void add_param_flags(CLI::App* cmd, FlagValues& values) {
    for (const auto& name : param_flag_names()) {
        values[name];  // stable storage before add_option captures the reference
    }
    for (const auto& name : param_flag_names()) {
        cmd->add_option("--" + name, values[name],
                        "values for parameter '" + name + "' (list and/or lo..hi ranges)");
    }
}

ValueOverrides parse_overrides(const FlagValues& flags) {
    ValueOverrides out;
    for (const auto& [name, text] : flags) {
        if (text.empty()) continue;
        out[name] = parse_value_list(text);
    }
    return out;
}

struct CommonOptions {
    double tol = 1e-8;
    long max_terms = 100000;
    int jobs = 1;
    bool json = false;
    std::string out_path;
    bool show_values = false;
    std::string mutate;
};

void add_common_flags(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--tol", o.tol, "relative tolerance for numeric comparisons")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-terms", o.max_terms, "series term budget")->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", o.jobs, "worker threads; 0 = auto (HWSUM_JOBS, then hardware)");
    cmd->add_flag("--json", o.json, "emit the full JSON report on stdout");
    cmd->add_option("--out", o.out_path, "write the report to a file (.json or .csv)");
    cmd->add_flag("--show-values", o.show_values, "print one line per case with both sides");
    cmd->add_option("--mutate", o.mutate,
                    "perturb the named identity's right side (sensitivity checks)");
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_and_report(const std::vector<CaseRequest>& requests, const CommonOptions& o) {
    if (!o.mutate.empty()) {
        if (find_identity(o.mutate) == nullptr) {
            std::cerr << "error: unknown identity in --mutate: " << o.mutate << "\n";
            return kExitUsage;
        }
        set_rhs_mutation(o.mutate);
    }
    const EvalOptions opts{o.tol, o.max_terms};
    const int jobs = resolve_jobs(o.jobs);
    const auto start = std::chrono::steady_clock::now();
    const std::vector<CaseResult> results = run_cases(requests, opts, jobs);
    const auto stop = std::chrono::steady_clock::now();
    clear_rhs_mutation();
    const double elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    const RunSummary summary = summarize(results, elapsed_ms);

    const RunOptions ropts{o.tol, o.max_terms, jobs, o.mutate};
    if (!o.out_path.empty()) {
        const std::string text =
            ends_with(o.out_path, ".csv") ? render_csv(results) : render_json(ropts, results, summary);
        write_text(o.out_path, text);
    }
    if (o.json) {
        write_text("", render_json(ropts, results, summary));
    } else {
        // Text mode: per-identity rollup; failures always shown in full.
        std::string current;
        long id_total = 0, id_passed = 0, id_failed = 0, id_skipped = 0;
        std::vector<std::string> failures;
        const auto flush = [&]() {
            if (current.empty()) return;
            std::printf("%-16s %6ld cases  %6ld passed  %4ld failed  %5ld skipped\n",
                        current.c_str(), id_total, id_passed, id_failed, id_skipped);
            id_total = id_passed = id_failed = id_skipped = 0;
        };
        for (const auto& c : results) {
            if (c.identity != current) {
                flush();
                current = c.identity;
            }
            ++id_total;
            switch (c.verdict) {
                case Verdict::equal_exact:
                case Verdict::within_tol:
                    ++id_passed;
                    break;
                case Verdict::mismatch:
                    ++id_failed;
                    failures.push_back(case_line(c, true));
                    break;
                case Verdict::skipped_domain:
                    ++id_skipped;
                    break;
            }
            if (o.show_values) std::puts(case_line(c, true).c_str());
        }
        flush();
        for (const auto& f : failures) std::puts(f.c_str());
        std::printf("total %ld cases: %ld passed, %ld failed, %ld skipped (%.0f ms)\n",
                    summary.total, summary.passed, summary.failed, summary.skipped, elapsed_ms);
    }
    return summary.failed > 0 ? kExitMismatch : kExitPass;
}

int cmd_list(bool as_json) {
    const auto& reg = identity_registry();
    if (as_json) {
        std::string out = "[\n";
        for (std::size_t i = 0; i < reg.size(); ++i) {
            const auto& d = reg[i];
            out += "  {\"id\": \"" + d.id + "\", \"mode\": \"" + mode_name(d.mode) +
                   "\", \"params\": [";
            for (std::size_t j = 0; j < d.params.size(); ++j) {
                if (j) out += ", ";
                out += "\"" + d.params[j].name + "\"";
            }
            out += "], \"summary\": \"" + d.summary + "\"}";
            out += (i + 1 < reg.size()) ? ",\n" : "\n";
        }
        out += "]\n";
        std::cout << out;
        return kExitPass;
    }
    for (const auto& d : reg) {
        std::string params;
        for (const auto& p : d.params) {
            if (!params.empty()) params += ",";
            params += p.name;
        }
        std::printf("%-16s %-8s %-12s %s\n", d.id.c_str(), mode_name(d.mode), params.c_str(),
                    d.summary.c_str());
        if (!d.domain_note.empty()) std::printf("%-16s %-8s %-12s domain: %s\n", "", "", "",
                                                d.domain_note.c_str());
    }
    return kExitPass;
}

int cmd_oracle(const std::string& id, const FlagValues& flags, const CommonOptions& o) {
    const IdentityDescriptor* d = find_identity(id);
    if (!d) {
        std::cerr << "error: unknown identity: " << id << "\n";
        return kExitUsage;
    }
    const auto requests = enumerate_cases(*d, parse_overrides(flags));
    const EvalOptions opts{o.tol, o.max_terms};
    for (const auto& req : requests) {
        std::string line = d->id;
        for (const auto& p : d->params) {
            const auto it = req.binding.find(p.name);
            line += " " + p.name + "=" + (it == req.binding.end() ? "?" : it->second.str());
        }
        if (const auto reason = d->admissible(req.binding)) {
            std::puts((line + ": skipped (" + *reason + ")").c_str());
            continue;
        }
        try {
            const SideResult s = d->lhs(req.binding, opts);
            line += ": " + s.value.str();
            if (!s.value.exact) line += "  terms=" + std::to_string(s.terms);
            std::puts(line.c_str());
        } catch (const std::exception& e) {
            std::puts((line + ": error (" + std::string(e.what()) + ")").c_str());
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification of harmonic-weighted binomial sum identities"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list the identity registry");
    bool list_json = false;
    list_cmd->add_flag("--json", list_json, "machine-readable listing");

    auto* verify_cmd =
        app.add_subcommand("verify", "verify one identity over given or default values");
    std::string verify_id;
    verify_cmd->add_option("id", verify_id, "identity id (see 'list')")->required();
    FlagValues verify_flags;
    CommonOptions verify_opts;
    add_param_flags(verify_cmd, verify_flags);
    add_common_flags(verify_cmd, verify_opts);

    auto* sweep_cmd = app.add_subcommand("sweep", "verify many identities");
    std::string config_path;
    sweep_cmd->add_option("config", config_path, "sweep config file (default: all identities)");
    std::string mode_filter = "all";
    sweep_cmd->add_option("--mode", mode_filter, "restrict to a mode: exact, numeric, all")
        ->check(CLI::IsMember({"exact", "numeric", "all"}));
    CommonOptions sweep_opts;
    add_common_flags(sweep_cmd, sweep_opts);

    auto* oracle_cmd =
        app.add_subcommand("oracle", "print left-hand-side oracle values only");
    std::string oracle_id;
    oracle_cmd->add_option("id", oracle_id, "identity id (see 'list')")->required();
    FlagValues oracle_flags;
    CommonOptions oracle_opts;
    add_param_flags(oracle_cmd, oracle_flags);
    add_common_flags(oracle_cmd, oracle_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // CLI11 returns 0 for --help; anything else is a usage error.
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (list_cmd->parsed()) return cmd_list(list_json);

        if (verify_cmd->parsed()) {
            const IdentityDescriptor* d = find_identity(verify_id);
            if (!d) {
                std::cerr << "error: unknown identity: " << verify_id << "\n";
                return kExitUsage;
            }
            const auto requests = enumerate_cases(*d, parse_overrides(verify_flags));
            return run_and_report(requests, verify_opts);
        }

        if (sweep_cmd->parsed()) {
            std::vector<CaseRequest> requests;
            if (!config_path.empty()) {
                for (const auto& entry : parse_config_file(config_path)) {
                    const IdentityDescriptor* d = find_identity(entry.id);
                    if (!d) {
                        std::cerr << "error: unknown identity in config: " << entry.id << "\n";
                        return kExitUsage;
                    }
                    auto batch = enumerate_cases(*d, entry.overrides);
                    requests.insert(requests.end(), batch.begin(), batch.end());
                }
            } else {
                for (const auto& d : identity_registry()) {
                    if (mode_filter == "exact" && d.mode != Mode::exact) continue;
                    if (mode_filter == "numeric" && d.mode != Mode::numeric) continue;
                    auto batch = enumerate_default_cases(d);
                    requests.insert(requests.end(), batch.begin(), batch.end());
                }
            }
            return run_and_report(requests, sweep_opts);
        }

        if (oracle_cmd->parsed()) return cmd_oracle(oracle_id, oracle_flags, oracle_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
