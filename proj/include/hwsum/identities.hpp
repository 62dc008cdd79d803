/**
 * @file identities.hpp
 * @brief Closed-form right-hand sides, the identity registry, and single-case
 *        verification.
 *
 * Each registry entry pairs a literal summation oracle (left side) with an
 * independently coded closed form (right side), a machine-checkable
 * admissibility predicate, and a default parameter sweep. Exact-mode entries
 * compare bit-for-bit rationals; numeric-mode entries compare doubles under a
 * relative tolerance.
 */
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hwsum/exact_scalar.hpp"
#include "hwsum/gamma_ratio.hpp"

namespace hwsum {

// ---- values and results ----

enum class Mode { exact, numeric };

const char* mode_name(Mode m);

/// A verified side: either an exact rational or a double.
struct Value {
    bool exact = true;
    ExactScalar rational;
    double approx = 0.0;

    static Value make_exact(ExactScalar v) { return Value{true, std::move(v), 0.0}; }
    static Value make_numeric(double v) { return Value{false, ExactScalar(0), v}; }

    double as_double() const { return exact ? rational.to_double() : approx; }
    std::string str() const;
};

enum class Verdict { equal_exact, within_tol, mismatch, skipped_domain };

const char* verdict_name(Verdict v);

/// Named parameter values for one case. Integer-kind parameters are stored as
/// integral rationals.
using Binding = std::map<std::string, ExactScalar>;

struct EvalOptions {
    double tol = 1e-8;
    long max_terms = 100000;
};

/// One evaluated side plus the number of series terms it consumed (0 when no
/// truncated series was involved).
struct SideResult {
    Value value;
    long terms = 0;
};

struct ParamSpec {
    std::string name;
    bool integer = false;  // integer-valued (n, p, t) vs free rational
};

struct IdentityDescriptor {
    std::string id;
    Mode mode = Mode::exact;
    std::vector<ParamSpec> params;
    std::string summary;      // one-line description for listings
    std::string domain_note;  // human-readable admissibility constraints

    /// nullopt when the binding is admissible; otherwise the reason to skip.
    std::function<std::optional<std::string>(const Binding&)> admissible;
    std::function<SideResult(const Binding&, const EvalOptions&)> lhs;
    std::function<SideResult(const Binding&, const EvalOptions&)> rhs;

    /// Default sweep: per-parameter value lists, expanded as a cartesian
    /// product in declaration order and filtered through `admissible`.
    std::vector<std::pair<std::string, std::vector<ExactScalar>>> default_sweep;
};

struct CaseResult {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;  // name -> literal
    Mode mode = Mode::exact;
    std::string lhs;
    std::string rhs;
    Verdict verdict = Verdict::skipped_domain;
    double abs_diff = 0.0;
    long terms_used = 0;
    double elapsed_ms = 0.0;
    std::string note;
};

// ---- registry ----

const std::vector<IdentityDescriptor>& identity_registry();
const IdentityDescriptor* find_identity(const std::string& id);

/// Evaluates one case. Never throws: inadmissible bindings come back as
/// skipped_domain and unexpected evaluation failures as mismatch with the
/// failure message in `note`.
CaseResult verify_case(const IdentityDescriptor& d, const Binding& binding,
                       const EvalOptions& opts);

// ---- fault-injection hook ----

/// While set, verify_case perturbs the named identity's right-hand side by
/// 1/1000000 (exact mode) or by 1e-6 * max(1, |rhs|) (numeric mode). Used by
/// the sensitivity tests and the --mutate CLI flag; not thread-safe against
/// concurrent set/clear while sweeping.
void set_rhs_mutation(const std::string& id);
void clear_rhs_mutation();
const std::string& current_rhs_mutation();

// ---- closed forms (right-hand sides) ----

/// Alternating binomial-ratio family, weight exponent t in {0, 1, 2}.
ExactScalar rhs_family1(long t, long n, const ExactScalar& x);
/// Second-order harmonic family.
ExactScalar rhs_family2(long t, long n, const ExactScalar& x);
/// Squared first-order harmonic family.
ExactScalar rhs_family3(long t, long n, const ExactScalar& x);

/// Integer-shift consequences of the three families (family in {1, 2, 3}).
ExactScalar rhs_corollary(int family, long t, long n, long p);

/// Classical specializations at zero shift (family in {1, 2, 3}).
ExactScalar rhs_concise(int family, long t, long n);

enum class TerminatingVariant {
    watson_terminating,  // balanced split, even depth offset 0
    lemma_e,             // offset 0, weight 0
    watson_d,            // offset 1, weight 0
    lemma_f,             // offset 0, weight 1
    watson_f,            // offset 2, weight 0
    lemma_g,             // offset 0, weight 2
};

/// Closed forms of the terminating series (shifted-factorial ratios).
ExactScalar rhs_terminating_lemmas(TerminatingVariant v, const ExactScalar& a,
                                   const ExactScalar& b, long n);

enum class BinomialSumVariant {
    watson_c,
    watson_e,
    watson_g,
    watson_h,
    watson_i,
    watson_j,
    harmonic_a,
    harmonic_b,
    harmonic_c,
    vandermonde,
};

/// Closed forms of the exact binomial/harmonic sums. The (x, y) variants read
/// "x" and "y" from the binding; the single-variable ones read "x"; all read
/// "n".
ExactScalar rhs_binomial_sums(BinomialSumVariant v, const Binding& binding);

enum class NonterminatingVariant {
    watson,
    lemma_b,
    lemma_c,
    lemma_d,
    whipple_a,
    whipple_b,
    whipple_c,
    kummer,
    watson_a,
    watson_b,
};

/// Gamma-ratio right-hand sides of the non-terminating identities. Exact when
/// every contributing ratio reduces (degenerate parameter choices), numeric
/// otherwise. The kummer variant evaluates a transformed series and reports
/// its term count.
SideResult rhs_nonterminating(NonterminatingVariant v, const Binding& binding,
                              const EvalOptions& opts);

// ---- binding helpers ----

const ExactScalar& binding_get(const Binding& b, const std::string& name);
long binding_int(const Binding& b, const std::string& name);

}  // namespace hwsum
