/**
 * @file identities.cpp
 * @brief Case verification, the fault-injection hook, and small shared
 *        helpers for the identity registry.
 */
#include "hwsum/identities.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

namespace hwsum {

const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "numeric"; }

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::equal_exact: return "equal_exact";
        case Verdict::within_tol: return "within_tol";
        case Verdict::mismatch: return "mismatch";
        case Verdict::skipped_domain: return "skipped_domain";
    }
    return "?";
}

std::string Value::str() const {
    if (exact) return rational.str();
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", approx);
    return buf;
}

const ExactScalar& binding_get(const Binding& b, const std::string& name) {
    const auto it = b.find(name);
    if (it == b.end()) throw std::domain_error("binding: missing parameter " + name);
    return it->second;
}

long binding_int(const Binding& b, const std::string& name) {
    return binding_get(b, name).to_long();
}

// ---- fault-injection hook ----

namespace {
std::string g_mutated_id;
}

void set_rhs_mutation(const std::string& id) { g_mutated_id = id; }
void clear_rhs_mutation() { g_mutated_id.clear(); }
const std::string& current_rhs_mutation() { return g_mutated_id; }

// ---- case verification ----

CaseResult verify_case(const IdentityDescriptor& d, const Binding& binding,
                       const EvalOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    CaseResult r;
    r.identity = d.id;
    r.mode = d.mode;
    r.lhs = "-";
    r.rhs = "-";
    for (const auto& p : d.params) {
        const auto it = binding.find(p.name);
        r.params.emplace_back(p.name, it == binding.end() ? "?" : it->second.str());
    }

    const auto finish = [&]() {
        const auto stop = std::chrono::steady_clock::now();
        r.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        return r;
    };

    for (const auto& p : d.params) {
        const auto it = binding.find(p.name);
        if (it == binding.end()) {
            r.verdict = Verdict::skipped_domain;
            r.note = "missing parameter " + p.name;
            return finish();
        }
        if (p.integer && !it->second.is_integer()) {
            r.verdict = Verdict::skipped_domain;
            r.note = "parameter " + p.name + " must be an integer";
            return finish();
        }
    }
    if (d.admissible) {
        if (const auto reason = d.admissible(binding)) {
            r.verdict = Verdict::skipped_domain;
            r.note = *reason;
            return finish();
        }
    }

    try {
        const SideResult lhs = d.lhs(binding, opts);
        SideResult rhs = d.rhs(binding, opts);
        if (g_mutated_id == d.id) {
            if (rhs.value.exact) {
                rhs.value.rational += ExactScalar(1, 1000000);
            } else {
                rhs.value.approx += 1e-6 * std::max(1.0, std::abs(rhs.value.approx));
            }
        }
        r.lhs = lhs.value.str();
        r.rhs = rhs.value.str();
        r.terms_used = lhs.terms + rhs.terms;
        if (d.mode == Mode::exact) {
            if (!lhs.value.exact || !rhs.value.exact)
                throw std::domain_error("exact-mode identity produced a numeric value");
            if (lhs.value.rational == rhs.value.rational) {
                r.verdict = Verdict::equal_exact;
                r.abs_diff = 0.0;
            } else {
                r.verdict = Verdict::mismatch;
                r.abs_diff = std::abs((lhs.value.rational - rhs.value.rational).to_double());
            }
        } else {
            const double l = lhs.value.as_double();
            const double rr = rhs.value.as_double();
            r.abs_diff = std::abs(l - rr);
            r.verdict = (r.abs_diff <= opts.tol * std::max(1.0, std::abs(rr)))
                            ? Verdict::within_tol
                            : Verdict::mismatch;
        }
    } catch (const std::exception& e) {
        r.verdict = Verdict::mismatch;
        r.note = std::string("evaluation error: ") + e.what();
    }
    return finish();
}

}  // namespace hwsum
