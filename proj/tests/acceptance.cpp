/**
 * @file acceptance.cpp
 * @brief Release gate for the verification suite. Runs one check per release
 *        criterion and prints exactly one PASS/FAIL line for each; exits
 *        nonzero if any criterion fails.
 *
 * Usage: acceptance <path-to-hwsum-binary> <source-dir>
 *
 * The source dir is needed for the CLI fixtures under tools/.
 */
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hwsum/combinatorics.hpp"
#include "hwsum/derivative_ops.hpp"
#include "hwsum/identities.hpp"
#include "hwsum/report.hpp"
#include "hwsum/series_engine.hpp"
#include "hwsum/sweep.hpp"

using hwsum::Binding;
using hwsum::CaseResult;
using hwsum::EvalOptions;
using hwsum::ExactScalar;
using hwsum::HypergeometricSpec;
using hwsum::IdentityDescriptor;
using hwsum::Mode;
using hwsum::Verdict;

namespace {

using ES = ExactScalar;

int g_failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail) {
    std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", index, name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

const std::vector<ES>& x0_grid() {
    static const std::vector<ES> g = {ES(0),    ES(1),    ES(2),     ES(7),
                                      ES(1, 2), ES(5, 2), ES(-1, 3), ES(22, 7)};
    return g;
}

bool passes(Verdict v) { return v == Verdict::equal_exact || v == Verdict::within_tol; }

// ---- criterion 1: exact identities, default sweeps, bit-identical ----

void criterion_exact_sweep() {
    const EvalOptions opts{1e-8, 100000};
    long cases = 0, equal = 0, skipped = 0, bad = 0;
    std::string first_bad;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& d : hwsum::identity_registry()) {
        if (d.mode != Mode::exact) continue;
        const auto requests = hwsum::enumerate_default_cases(d);
        const auto results = hwsum::run_cases(requests, opts, 1);
        for (const auto& r : results) {
            ++cases;
            if (r.verdict == Verdict::equal_exact) {
                ++equal;
            } else if (r.verdict == Verdict::skipped_domain) {
                ++skipped;
            } else {
                if (++bad == 1) first_bad = hwsum::case_line(r, true);
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << cases << " cases, " << equal << " equal, " << skipped << " skipped, " << bad
       << " mismatches, " << std::fixed << secs << " s single-threaded, limit 60";
    if (bad > 0) os << "; first: " << first_bad;
    report(1, "exact identity sweep", bad == 0 && equal > 0 && secs <= 60.0, os.str());
}

// ---- criterion 2: independently derived spot values ----

void criterion_spot_values() {
    struct Spot {
        const char* id;
        Binding binding;
        const char* value;
    };
    const std::vector<Spot> spots = {
        {"concise_f1_t0", Binding{{"t", ES(0)}, {"n", ES(2)}}, "2"},
        {"thm_d", Binding{{"t", ES(0)}, {"n", ES(1)}, {"x", ES(0)}}, "1"},
        {"thm_b", Binding{{"t", ES(1)}, {"n", ES(3)}, {"x", ES(0)}}, "-32"},
        {"thm_a", Binding{{"t", ES(0)}, {"n", ES(2)}, {"x", ES(1, 2)}}, "8/3"},
    };
    int good = 0;
    std::string first_bad;
    for (const auto& s : spots) {
        const auto* d = hwsum::find_identity(s.id);
        if (!d) {
            first_bad = std::string(s.id) + " not registered";
            continue;
        }
        const auto r = hwsum::verify_case(*d, s.binding, EvalOptions{});
        if (r.verdict == Verdict::equal_exact && r.lhs == s.value && r.rhs == s.value) {
            ++good;
        } else if (first_bad.empty()) {
            first_bad = hwsum::case_line(r, true) + " expected " + s.value;
        }
    }
    std::ostringstream os;
    os << good << "/" << spots.size() << " match";
    if (!first_bad.empty()) os << "; " << first_bad;
    report(2, "hand-derived spot values", good == static_cast<int>(spots.size()), os.str());
}

// ---- criterion 3: non-terminating suite within tolerance ----

void criterion_nonterminating() {
    const EvalOptions opts{1e-8, 100000};
    const std::array<const char*, 6> degenerate_ids = {"eq_watson",  "lem_b",      "lem_c",
                                                       "lem_d",      "eq_watson_a", "eq_watson_b"};
    bool ok = true;
    long ids = 0, in_tol = 0, bad = 0, degenerate_rows = 0;
    std::string why;
    for (const auto& d : hwsum::identity_registry()) {
        if (d.mode != Mode::numeric) continue;
        ++ids;
        const auto requests = hwsum::enumerate_default_cases(d);
        const auto results = hwsum::run_cases(requests, opts, 1);
        long nonskip = 0;
        for (const auto& r : results) {
            if (r.verdict == Verdict::skipped_domain) continue;
            ++nonskip;
            if (r.verdict == Verdict::within_tol) {
                ++in_tol;
            } else {
                ++bad;
                if (why.empty()) why = hwsum::case_line(r, true);
            }
        }
        if (nonskip < 10) {
            ok = false;
            if (why.empty()) why = d.id + " has only " + std::to_string(nonskip) + " live cases";
        }
        const bool check_degenerate =
            std::find_if(degenerate_ids.begin(), degenerate_ids.end(),
                         [&](const char* id) { return d.id == id; }) != degenerate_ids.end();
        if (!check_degenerate) continue;
        long rows = 0;
        for (std::size_t i = 0; i < requests.size(); ++i) {
            if (!requests[i].binding.at("a").is_zero()) continue;
            ++rows;
            if (results[i].verdict != Verdict::within_tol || results[i].abs_diff != 0.0) {
                ok = false;
                if (why.empty())
                    why = "degenerate row not exact: " + hwsum::case_line(results[i], true);
            }
        }
        degenerate_rows += rows;
        if (rows == 0) {
            ok = false;
            if (why.empty()) why = d.id + " sweeps no degenerate a = 0 row";
        }
    }
    ok = ok && bad == 0 && ids == 10;
    std::ostringstream os;
    os << ids << " identities, " << in_tol << " within 1e-8, " << bad << " mismatches, "
       << degenerate_rows << " degenerate rows exactly 0";
    if (!why.empty()) os << "; " << why;
    report(3, "non-terminating series suite", ok, os.str());
}

// ---- criterion 4: closed-form derivatives against dual numbers ----

void criterion_derivatives() {
    bool ok = true;
    std::string why;
    const auto note = [&](const std::string& msg) {
        ok = false;
        if (why.empty()) why = msg;
    };

    // (a) random linear-fractional products
    std::mt19937 rng(987654321u);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<int> nfactors(1, 8);
    long products = 0, attempts = 0;
    while (products < 1000 && attempts < 200000) {
        ++attempts;
        const ES& x0 = x0_grid()[products % x0_grid().size()];
        const int s = nfactors(rng);
        std::vector<hwsum::LinFracFactor> factors;
        factors.reserve(s);
        bool degenerate = false;
        for (int j = 0; j < s; ++j) {
            ES a(coeff(rng)), b(coeff(rng)), c(coeff(rng)), d(coeff(rng));
            while (c.is_zero() && d.is_zero()) {
                c = ES(coeff(rng));
                d = ES(coeff(rng));
            }
            if ((a * x0 + b).is_zero() || (c * x0 + d).is_zero()) degenerate = true;
            factors.push_back(hwsum::LinFracFactor{a, b, c, d});
        }
        if (degenerate) continue;
        const hwsum::LinFracProduct p(factors);
        if (hwsum::lemma1_derivative(p, x0) != hwsum::eval_dual(p, x0).deriv)
            note("product derivative disagreement at trial " + std::to_string(products));
        ++products;
    }
    if (products < 1000) note("generated only " + std::to_string(products) + " products");

    // (b) binomial-coefficient derivative
    long binom = 0;
    for (long r = 0; r <= 12; ++r)
        for (long s = 0; s <= r; ++s)
            for (const auto& x0 : x0_grid()) {
                ++binom;
                if (hwsum::binom_derivative(r, s, x0) !=
                    hwsum::eval_dual(hwsum::binom_as_product(r, s), x0).deriv)
                    note("binomial derivative disagreement at r=" + std::to_string(r) +
                         " s=" + std::to_string(s));
            }

    // (c) harmonic-number derivative lowers the order
    long harmonic = 0;
    for (long n = 0; n <= 30; ++n)
        for (long l = 1; l <= 2; ++l)
            for (const auto& x0 : x0_grid()) {
                ++harmonic;
                const hwsum::DualScalar h = hwsum::harmonic_dual(n, l, x0);
                if (h.value != hwsum::harmonic(n, l, x0) ||
                    h.deriv != ES(-l) * hwsum::harmonic(n, l + 1, x0))
                    note("harmonic derivative disagreement at n=" + std::to_string(n));
            }

    std::ostringstream os;
    os << products << " random products + " << binom << " binomial + " << harmonic
       << " harmonic comparisons, all exact";
    if (!why.empty()) os << "; " << why;
    report(4, "derivative consistency", ok, os.str());
}

// ---- criterion 5: terminating series, two independent routes ----

void criterion_route_agreement() {
    bool ok = true;
    long compared = 0;
    std::string why;
    const std::array<const char*, 6> ids = {"eq_watson_ter", "lem_e", "eq_watson_d",
                                            "lem_f",         "eq_watson_f", "lem_g"};
    for (const char* id : ids) {
        const auto* d = hwsum::find_identity(id);
        if (!d) {
            ok = false;
            why = std::string(id) + " not registered";
            continue;
        }
        for (const auto& req : hwsum::enumerate_default_cases(*d)) {
            if (d->admissible(req.binding)) continue;  // skipped bindings
            const ES& a = req.binding.at("a");
            const ES& b = req.binding.at("b");
            const long n = hwsum::binding_int(req.binding, "n");
            HypergeometricSpec spec;
            spec.termination = n;
            if (d->id == "eq_watson_ter") {
                spec.upper = {a, b, ES(-n)};
                spec.lower = {(ES(1) + a + b) / ES(2), ES(-2 * n)};
            } else {
                const long shift = (d->id == "eq_watson_d") ? 1 : (d->id == "eq_watson_f") ? 2 : 0;
                spec.upper = {a, b - a, ES(-n)};
                spec.lower = {b / ES(2), ES(-2 * n - shift)};
                spec.weight = (d->id == "lem_f") ? 1 : (d->id == "lem_g") ? 2 : 0;
            }
            ++compared;
            if (hwsum::eval_terminating(spec) != hwsum::eval_terminating_direct(spec)) {
                ok = false;
                if (why.empty())
                    why = d->id + " routes disagree at a=" + a.str() + " b=" + b.str() +
                          " n=" + std::to_string(n);
            }
        }
    }
    if (compared < 5000) {
        ok = false;
        if (why.empty()) why = "only " + std::to_string(compared) + " admissible specs";
    }
    std::ostringstream os;
    os << compared << " terminating specs, recurrence == direct summation";
    if (!why.empty()) os << "; " << why;
    report(5, "summation route independence", ok, os.str());
}

// ---- criterion 6: every closed form is mutation-sensitive ----

void criterion_mutation() {
    const EvalOptions opts{1e-8, 100000};
    long caught = 0, total = 0;
    std::string why;
    for (const auto& d : hwsum::identity_registry()) {
        ++total;
        hwsum::set_rhs_mutation(d.id);
        bool tripped = false;
        Binding witness;
        for (const auto& req : hwsum::enumerate_default_cases(d)) {
            const auto r = hwsum::verify_case(d, req.binding, opts);
            if (r.verdict == Verdict::skipped_domain) continue;
            if (r.verdict == Verdict::mismatch) {
                tripped = true;
                witness = req.binding;
            }
            break;  // first live case decides
        }
        hwsum::clear_rhs_mutation();
        // the same case must pass unmutated: the mismatch is the injected
        // fault, not a broken case
        if (tripped && !passes(hwsum::verify_case(d, witness, opts).verdict)) {
            tripped = false;
            if (why.empty()) why = d.id + " witness case fails even unmutated";
        }
        if (tripped) {
            ++caught;
        } else if (why.empty()) {
            why = d.id + " sweep not sensitive to the injected fault";
        }
    }
    std::ostringstream os;
    os << caught << "/" << total << " injected right-hand-side faults caught";
    if (!why.empty()) os << "; " << why;
    report(6, "mutation sensitivity", caught == total, os.str());
}

// ---- criterion 7: CLI contract ----

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& command) {
    CliRun result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string strip_timing(const std::string& json_text) {
    std::istringstream in(json_text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.find("elapsed_ms") == std::string::npos) out << line << '\n';
    return out.str();
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_cli(const std::string& hwsum, const std::string& source_dir) {
    bool ok = true;
    std::string why;
    const auto expect = [&](bool cond, const std::string& msg) {
        if (!cond) {
            ok = false;
            if (why.empty()) why = msg;
        }
    };

    const auto tmp = std::filesystem::temp_directory_path();
    const auto r1 = (tmp / "hwsum_accept_r1.json").string();
    const auto r2 = (tmp / "hwsum_accept_r2.json").string();

    // full default sweep passes, twice, with identical reports modulo timing
    const auto s1 = run_cli(hwsum + " sweep --jobs 1 --out " + r1);
    expect(s1.exit_code == 0, "default sweep exited " + std::to_string(s1.exit_code));
    const auto s2 = run_cli(hwsum + " sweep --jobs 1 --out " + r2);
    expect(s2.exit_code == 0, "second sweep exited " + std::to_string(s2.exit_code));
    const auto j1 = strip_timing(read_file(r1));
    const auto j2 = strip_timing(read_file(r2));
    expect(!j1.empty() && j1 == j2, "sweep reports differ beyond timing fields");
    std::filesystem::remove(r1);
    std::filesystem::remove(r2);

    // config-driven sweep passes
    const auto smoke = run_cli(hwsum + " sweep " + source_dir + "/tools/smoke.conf");
    expect(smoke.exit_code == 0, "smoke config sweep exited " + std::to_string(smoke.exit_code));

    // the mutation fixture must fail with exit 1, and pass without --mutate
    const auto fixture_path = source_dir + "/tools/mutation_fixture.conf";
    const auto clean = run_cli(hwsum + " sweep " + fixture_path);
    expect(clean.exit_code == 0, "fixture sweep exited " + std::to_string(clean.exit_code));
    const auto mutated = run_cli(hwsum + " sweep " + fixture_path + " --mutate thm_a");
    expect(mutated.exit_code == 1,
           "mutated fixture exited " + std::to_string(mutated.exit_code) + ", want 1");

    // malformed input exits 2
    const auto unknown = run_cli(hwsum + " verify no_such_identity");
    expect(unknown.exit_code == 2, "unknown id exited " + std::to_string(unknown.exit_code));
    const auto badval = run_cli(hwsum + " verify thm_a --x 1.5");
    expect(badval.exit_code == 2, "float literal exited " + std::to_string(badval.exit_code));
    const auto badconf = run_cli(hwsum + " sweep /nonexistent/hwsum.conf");
    expect(badconf.exit_code == 2, "missing config exited " + std::to_string(badconf.exit_code));

    // oracle values print as exact rationals
    const auto oracle = run_cli(hwsum + " oracle concise_f1_t0 --n 2");
    expect(oracle.exit_code == 0 && oracle.output.find(": 2") != std::string::npos,
           "oracle output missing ': 2'");

    report(7, "command-line contract", ok,
           ok ? "exit codes 0/1/2 and byte-reproducible reports" : why);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <hwsum-binary> <source-dir>\n", argv[0]);
        return 2;
    }
    criterion_exact_sweep();
    criterion_spot_values();
    criterion_nonterminating();
    criterion_derivatives();
    criterion_route_agreement();
    criterion_mutation();
    criterion_cli(argv[1], argv[2]);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 7 criteria passed\n");
    return 0;
}
