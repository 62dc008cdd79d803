/**
 * @file registry.cpp
 * @brief The identity registry: 53 entries pairing summation oracles with
 *        closed forms, each with admissibility rules and a default sweep.
 */
#include <algorithm>
#include <cmath>

#include "hwsum/combinatorics.hpp"
#include "hwsum/identities.hpp"
#include "hwsum/series_engine.hpp"

namespace hwsum {

namespace {

using ES = ExactScalar;

ParamSpec ip(const char* name) { return ParamSpec{name, true}; }
ParamSpec rp(const char* name) { return ParamSpec{name, false}; }

std::vector<ES> int_range(long lo, long hi) {
    std::vector<ES> out;
    for (long v = lo; v <= hi; ++v) out.emplace_back(v);
    return out;
}

std::vector<ES> rationals(std::initializer_list<std::pair<long, long>> vals) {
    std::vector<ES> out;
    for (const auto& [num, den] : vals) out.emplace_back(num, den);
    return out;
}

/// The shared rational grid for free parameters.
const std::vector<ES>& grid_x() {
    static const std::vector<ES> g = rationals(
        {{0, 1}, {1, 1}, {2, 1}, {7, 1}, {1, 2}, {5, 2}, {-1, 3}, {22, 7}});
    return g;
}

const std::vector<ES>& grid_p() {
    static const std::vector<ES> g = rationals({{0, 1}, {1, 1}, {2, 1}, {5, 1}});
    return g;
}

bool is_negative_integer_with_magnitude_at_most(const ES& x, long bound) {
    return x.is_integer() && x.is_negative() && (-x) <= ES(bound);
}

/// b in {0, -2, -4, ..., -2*lim} (the shifted-factorial poles of the
/// half-parameter series and closed forms).
bool is_blocked_even(const ES& b, long lim) {
    if (!b.is_integer() || b.is_positive()) return false;
    const ES half = b / ES(2);
    return half.is_integer() && (-half) <= ES(lim);
}

std::string reason_t(long t) { return "t must be " + std::to_string(t); }
std::string reason_nmin(long nmin) { return "n must be >= " + std::to_string(nmin); }

/// Shared admissibility for the t/n/x families. `xbound(n)` gives the largest
/// excluded negative-integer magnitude for x.
std::optional<std::string> tnx_admissible(const Binding& b, long t_fixed, long adm_nmin,
                                          long xbound_coeff, long xbound_offset) {
    if (binding_int(b, "t") != t_fixed) return reason_t(t_fixed);
    const long n = binding_int(b, "n");
    if (n < adm_nmin) return reason_nmin(adm_nmin);
    const ES& x = binding_get(b, "x");
    if (is_negative_integer_with_magnitude_at_most(x, xbound_coeff * n + xbound_offset))
        return "x is an excluded negative integer";
    return std::nullopt;
}

SideResult exact_side(ES v, long terms) { return SideResult{Value::make_exact(std::move(v)), terms}; }

/// Numeric left side: a truncated series evaluation. The stopping tolerance is
/// tightened four orders below the comparison tolerance so that the truncated
/// tail of these polynomially convergent series stays well inside it.
SideResult numeric_series_side(const HypergeometricSpec& spec, const EvalOptions& opts) {
    const double series_tol = std::max(opts.tol * 1e-4, 1e-14);
    const NumericSum s = eval_numeric(spec, series_tol, opts.max_terms);
    return SideResult{Value::make_numeric(s.value), s.terms_used};
}

ES xn3n1(const ES& x, long n) { return x * ES(n) + ES(3) * ES(n) + ES(1); }

// ---- descriptor builders ----

IdentityDescriptor make_family_id(const char* id, int family, long t, long sweep_nmin,
                                  long adm_nmin, const char* summary, const char* domain_note) {
    IdentityDescriptor d;
    d.id = id;
    d.mode = Mode::exact;
    d.params = {ip("t"), ip("n"), rp("x")};
    d.summary = summary;
    d.domain_note = domain_note;
    const long xbound_coeff = (family == 1) ? 1 : 2;
    const long xbound_offset = (family == 1) ? 0 : 1;
    d.admissible = [family, t, adm_nmin, xbound_coeff, xbound_offset](const Binding& b)
        -> std::optional<std::string> {
        if (auto r = tnx_admissible(b, t, adm_nmin, xbound_coeff, xbound_offset)) return r;
        const long n = binding_int(b, "n");
        const ES& x = binding_get(b, "x");
        if (family == 1 && t == 2 && n >= 1) {
            if (x == ES(-1) || x == ES(-2)) return std::string("x in {-1, -2} hits a pole");
            const ParityCase pc = parity_split(n);
            const ES em(pc.m);
            const ES den = (pc.parity == Parity::even)
                               ? ES(2) * em * (ES(2) * x + ES(2) * em + ES(1)) - x
                               : ES(2) * em * (ES(2) * x + ES(2) * em + ES(3)) + x + ES(2);
            if (den.is_zero()) return std::string("parity denominator vanishes");
        }
        if (family == 1 && t == 1 && n >= 1 && x == ES(-1))
            return std::string("x = -1 hits the prefactor pole");
        if (family != 1 && t == 2 && xn3n1(x, n).is_zero())
            return std::string("x*n + 3n + 1 vanishes");
        return std::nullopt;
    };
    const SumFamily fam = (family == 1) ? SumFamily::F1 : (family == 2) ? SumFamily::F2
                                                                        : SumFamily::F3;
    d.lhs = [fam, t](const Binding& b, const EvalOptions&) {
        const long n = binding_int(b, "n");
        WeightedSumSpec spec{fam, t, n, binding_get(b, "x")};
        return exact_side(eval_weighted_oracle(spec), n + 1);
    };
    d.rhs = [family, t](const Binding& b, const EvalOptions&) {
        const long n = binding_int(b, "n");
        const ES& x = binding_get(b, "x");
        ES v = (family == 1)   ? rhs_family1(t, n, x)
               : (family == 2) ? rhs_family2(t, n, x)
                               : rhs_family3(t, n, x);
        return exact_side(std::move(v), 0);
    };
    d.default_sweep = {{"t", {ES(t)}}, {"n", int_range(sweep_nmin, 25)}, {"x", grid_x()}};
    return d;
}

IdentityDescriptor make_corollary_id(const char* id, int family, long t, long sweep_nmin,
                                     long adm_nmin, const char* summary,
                                     const char* domain_note) {
    IdentityDescriptor d;
    d.id = id;
    d.mode = Mode::exact;
    d.params = {ip("t"), ip("n"), ip("p")};
    d.summary = summary;
    d.domain_note = domain_note;
    d.admissible = [t, adm_nmin](const Binding& b) -> std::optional<std::string> {
        if (binding_int(b, "t") != t) return reason_t(t);
        if (binding_int(b, "n") < adm_nmin) return reason_nmin(adm_nmin);
        if (binding_int(b, "p") < 0) return std::string("p must be >= 0");
        return std::nullopt;
    };
    d.lhs = [family, t](const Binding& b, const EvalOptions&) {
        const long n = binding_int(b, "n");
        return exact_side(eval_corollary_oracle(family, t, n, binding_int(b, "p")), n + 1);
    };
    d.rhs = [family, t](const Binding& b, const EvalOptions&) {
        return exact_side(rhs_corollary(family, t, binding_int(b, "n"), binding_int(b, "p")), 0);
    };
    d.default_sweep = {{"t", {ES(t)}}, {"n", int_range(sweep_nmin, 25)}, {"p", grid_p()}};
    return d;
}

IdentityDescriptor make_concise_id(const char* id, int family, long t, long sweep_nmin,
                                   long adm_nmin, const char* summary, const char* domain_note) {
    IdentityDescriptor d;
    d.id = id;
    d.mode = Mode::exact;
    d.params = {ip("t"), ip("n")};
    d.summary = summary;
    d.domain_note = domain_note;
    d.admissible = [t, adm_nmin](const Binding& b) -> std::optional<std::string> {
        if (binding_int(b, "t") != t) return reason_t(t);
        if (binding_int(b, "n") < adm_nmin) return reason_nmin(adm_nmin);
        return std::nullopt;
    };
    const SumFamily fam = (family == 1) ? SumFamily::C1 : (family == 2) ? SumFamily::C2
                                                                        : SumFamily::C3;
    d.lhs = [fam, t](const Binding& b, const EvalOptions&) {
        const long n = binding_int(b, "n");
        WeightedSumSpec spec{fam, t, n, ES(0)};
        return exact_side(eval_weighted_oracle(spec), n + 1);
    };
    d.rhs = [family, t](const Binding& b, const EvalOptions&) {
        return exact_side(rhs_concise(family, t, binding_int(b, "n")), 0);
    };
    d.default_sweep = {{"t", {ES(t)}}, {"n", int_range(sweep_nmin, 25)}};
    return d;
}

/// The terminating half-parameter series: builds the series spec from (a, b, n).
IdentityDescriptor make_terminating_id(const char* id, TerminatingVariant variant,
                                       long lower_shift, long weight, long pole_limit_offset,
                                       const char* summary, const char* domain_note) {
    IdentityDescriptor d;
    d.id = id;
    d.mode = Mode::exact;
    d.params = {rp("a"), rp("b"), ip("n")};
    d.summary = summary;
    d.domain_note = domain_note;
    const bool is_balanced = (variant == TerminatingVariant::watson_terminating);
    d.admissible = [variant, is_balanced, pole_limit_offset](const Binding& b)
        -> std::optional<std::string> {
        const long n = binding_int(b, "n");
        if (n < 0) return reason_nmin(0);
        const ES& a = binding_get(b, "a");
        const ES& bb = binding_get(b, "b");
        if (is_balanced) {
            const ES s = (ES(1) + a + bb) / ES(2);
            if (s.is_integer() && !s.is_positive() && (-s) <= ES(n > 0 ? n - 1 : 0))
                return std::string("lower parameter (1+a+b)/2 hits a nonpositive integer");
            return std::nullopt;
        }
        if (is_blocked_even(bb, n + pole_limit_offset))
            return std::string("b is an excluded even nonpositive integer");
        if (variant == TerminatingVariant::watson_f) {
            if (a == ES(1)) return std::string("a = 1 hits a coefficient pole");
            if (bb - a == ES(1)) return std::string("b - a = 1 hits a coefficient pole");
        }
        return std::nullopt;
    };
    d.lhs = [is_balanced, lower_shift, weight](const Binding& b, const EvalOptions&) {
        const long n = binding_int(b, "n");
        const ES& a = binding_get(b, "a");
        const ES& bb = binding_get(b, "b");
        HypergeometricSpec spec;
        if (is_balanced) {
            spec.upper = {a, bb, ES(-n)};
            spec.lower = {(ES(1) + a + bb) / ES(2), ES(-2 * n)};
        } else {
            spec.upper = {a, bb - a, ES(-n)};
            spec.lower = {bb / ES(2), ES(-2 * n - lower_shift)};
        }
        spec.termination = n;
        spec.weight = weight;
        return exact_side(eval_terminating(spec), n + 1);
    };
    d.rhs = [variant](const Binding& b, const EvalOptions&) {
        return exact_side(rhs_terminating_lemmas(variant, binding_get(b, "a"),
                                                 binding_get(b, "b"), binding_int(b, "n")),
                          0);
    };
    d.default_sweep = {{"a", grid_x()}, {"b", grid_x()}, {"n", int_range(0, 25)}};
    return d;
}

IdentityDescriptor make_binomial_sum_id(const char* id, BinomialSumVariant variant,
                                        const char* summary, const char* domain_note) {
    IdentityDescriptor d;
    d.id = id;
    d.mode = Mode::exact;
    const bool has_y = (variant == BinomialSumVariant::watson_c ||
                        variant == BinomialSumVariant::watson_e ||
                        variant == BinomialSumVariant::watson_g ||
                        variant == BinomialSumVariant::vandermonde);
    d.params = has_y ? std::vector<ParamSpec>{ip("n"), rp("x"), rp("y")}
                     : std::vector<ParamSpec>{ip("n"), rp("x")};
    d.summary = summary;
    d.domain_note = domain_note;
    d.admissible = [variant](const Binding& b) -> std::optional<std::string> {
        const long n = binding_int(b, "n");
        if (n < 0) return reason_nmin(0);
        switch (variant) {
            case BinomialSumVariant::watson_c:
            case BinomialSumVariant::watson_e:
            case BinomialSumVariant::watson_g: {
                const long extra = (variant == BinomialSumVariant::watson_c)   ? 1
                                   : (variant == BinomialSumVariant::watson_e) ? 2
                                                                               : 3;
                if (is_blocked_even(binding_get(b, "y"), n + extra))
                    return std::string("y is an excluded even nonpositive integer");
                return std::nullopt;
            }
            case BinomialSumVariant::watson_j:
                if (n == 1) return std::string("n = 1 is excluded (0/0 in the closed form)");
                return std::nullopt;
            case BinomialSumVariant::harmonic_a:
            case BinomialSumVariant::harmonic_b:
            case BinomialSumVariant::harmonic_c: {
                long bound = 2 * n + 1;
                if (variant == BinomialSumVariant::harmonic_b) {
                    bound = std::max(bound, n + 2);
                } else if (variant == BinomialSumVariant::harmonic_c) {
                    if (n == 1) return std::string("n = 1 is excluded (0/0 in the closed form)");
                    if (xn3n1(binding_get(b, "x"), n).is_zero())
                        return std::string("x*n + 3n + 1 vanishes");
                    bound = std::max(bound, n + 3);
                }
                if (is_negative_integer_with_magnitude_at_most(binding_get(b, "x"), bound))
                    return std::string("x is an excluded negative integer");
                return std::nullopt;
            }
            default:
                return std::nullopt;
        }
    };
    d.lhs = [variant](const Binding& b, const EvalOptions&) {
        const long n = binding_int(b, "n");
        ES v(0);
        switch (variant) {
            case BinomialSumVariant::watson_c:
                v = oracle_binomial_ratio_sum(n, binding_get(b, "x"), binding_get(b, "y"), 0);
                break;
            case BinomialSumVariant::watson_e:
                v = oracle_binomial_ratio_sum(n, binding_get(b, "x"), binding_get(b, "y"), 1);
                break;
            case BinomialSumVariant::watson_g:
                v = oracle_binomial_ratio_sum(n, binding_get(b, "x"), binding_get(b, "y"), 2);
                break;
            case BinomialSumVariant::watson_h:
                v = oracle_binomial_plain_sum(n, binding_get(b, "x"), 0);
                break;
            case BinomialSumVariant::watson_i:
                v = oracle_binomial_plain_sum(n, binding_get(b, "x"), 1);
                break;
            case BinomialSumVariant::watson_j:
                v = oracle_binomial_plain_sum(n, binding_get(b, "x"), 2);
                break;
            case BinomialSumVariant::harmonic_a:
                v = oracle_binomial_harmonic_sum(n, binding_get(b, "x"), 0);
                break;
            case BinomialSumVariant::harmonic_b:
                v = oracle_binomial_harmonic_sum(n, binding_get(b, "x"), 1);
                break;
            case BinomialSumVariant::harmonic_c:
                v = oracle_binomial_harmonic_sum(n, binding_get(b, "x"), 2);
                break;
            case BinomialSumVariant::vandermonde:
                v = oracle_vandermonde_sum(n, binding_get(b, "x"), binding_get(b, "y"));
                break;
        }
        return exact_side(std::move(v), n + 1);
    };
    d.rhs = [variant](const Binding& b, const EvalOptions&) {
        return exact_side(rhs_binomial_sums(variant, b), 0);
    };
    if (has_y) {
        d.default_sweep = {{"n", int_range(0, 25)}, {"x", grid_x()}, {"y", grid_x()}};
    } else {
        d.default_sweep = {{"n", int_range(0, 25)}, {"x", grid_x()}};
    }
    return d;
}

/// Builds the series spec of a non-terminating identity from its binding.
HypergeometricSpec nonterminating_lhs_spec(NonterminatingVariant v, const Binding& b) {
    const ES a = binding_get(b, "a");
    const ES bb = binding_get(b, "b");
    const ES c = binding_get(b, "c");
    HypergeometricSpec spec;
    switch (v) {
        case NonterminatingVariant::watson:
            spec.upper = {a, bb, c};
            spec.lower = {(ES(1) + a + bb) / ES(2), ES(2) * c};
            break;
        case NonterminatingVariant::lemma_b:
            spec.upper = {a, bb, c};
            spec.lower = {(ES(1) + a + bb) / ES(2), ES(2) * c - ES(1)};
            break;
        case NonterminatingVariant::lemma_c:
            spec.upper = {a, bb, c};
            spec.lower = {(ES(1) + a + bb) / ES(2), ES(2) * c - ES(1)};
            spec.weight = 1;
            break;
        case NonterminatingVariant::lemma_d:
            spec.upper = {a, bb, c};
            spec.lower = {(ES(1) + a + bb) / ES(2), ES(2) * c - ES(1)};
            spec.weight = 2;
            break;
        case NonterminatingVariant::whipple_a:
            spec.upper = {a, -a, bb};
            spec.lower = {c, ES(1) + ES(2) * bb - c};
            break;
        case NonterminatingVariant::whipple_b:
            spec.upper = {a, ES(-1) - a, bb};
            spec.lower = {c, ES(1) + ES(2) * bb - c};
            break;
        case NonterminatingVariant::whipple_c:
            spec.upper = {a, ES(-2) - a, bb};
            spec.lower = {c, ES(1) + ES(2) * bb - c};
            break;
        case NonterminatingVariant::kummer:
            spec.upper = {a, bb, c};
            spec.lower = {binding_get(b, "d"), binding_get(b, "e")};
            break;
        case NonterminatingVariant::watson_a:
            spec.upper = {a, bb, c};
            spec.lower = {(ES(1) + a + bb) / ES(2), ES(2) * c - ES(2)};
            break;
        case NonterminatingVariant::watson_b:
            spec.upper = {a, bb, c};
            spec.lower = {(ES(1) + a + bb) / ES(2), ES(2) * c - ES(3)};
            break;
    }
    return spec;
}

bool bad_lower_param(const ES& v) { return v.is_nonpositive_integer(); }

IdentityDescriptor make_nonterminating_id(const char* id, NonterminatingVariant variant,
                                          std::optional<ConvergenceCondition> condition,
                                          const char* summary, const char* domain_note,
                                          std::vector<std::pair<std::string, std::vector<ES>>>
                                              sweep) {
    IdentityDescriptor d;
    d.id = id;
    d.mode = Mode::numeric;
    const bool is_kummer = (variant == NonterminatingVariant::kummer);
    d.params = is_kummer
                   ? std::vector<ParamSpec>{rp("a"), rp("b"), rp("c"), rp("d"), rp("e")}
                   : std::vector<ParamSpec>{rp("a"), rp("b"), rp("c")};
    d.summary = summary;
    d.domain_note = domain_note;
    d.admissible = [variant, condition](const Binding& b) -> std::optional<std::string> {
        const ES& a = binding_get(b, "a");
        const ES& bb = binding_get(b, "b");
        const ES& c = binding_get(b, "c");
        const HypergeometricSpec spec = nonterminating_lhs_spec(variant, b);
        for (const auto& l : spec.lower) {
            if (bad_lower_param(l))
                return std::string("series lower parameter is a nonpositive integer");
        }
        if (condition) {
            const ConvergenceCheck cc = check_convergence(spec, *condition);
            if (!cc.ok) return "convergence violated: " + cc.reason;
        }
        switch (variant) {
            case NonterminatingVariant::whipple_a:
            case NonterminatingVariant::whipple_b:
            case NonterminatingVariant::whipple_c: {
                if (!bb.is_positive()) return std::string("requires b > 0");
                if (variant == NonterminatingVariant::whipple_b) {
                    if ((ES(1) + a + ES(2) * bb - c).is_zero() || (a + c).is_zero())
                        return std::string("coefficient denominator vanishes");
                }
                if (variant == NonterminatingVariant::whipple_c) {
                    if ((ES(2) + a + ES(2) * bb - c).is_zero() || (ES(1) + a + c).is_zero() ||
                        (a - ES(2) * bb + c).is_zero() || (ES(1) + a - c).is_zero())
                        return std::string("coefficient denominator vanishes");
                }
                break;
            }
            case NonterminatingVariant::kummer: {
                const ES s = binding_get(b, "d") + binding_get(b, "e") - a - bb - c;
                if (!a.is_positive()) return std::string("requires a > 0");
                if (!s.is_positive()) return std::string("requires d + e - a - b - c > 0");
                if (bad_lower_param(binding_get(b, "d") + binding_get(b, "e") - a - bb) ||
                    bad_lower_param(binding_get(b, "d") + binding_get(b, "e") - a - c))
                    return std::string("transformed lower parameter is a nonpositive integer");
                break;
            }
            case NonterminatingVariant::watson_a:
                if (c == ES(1)) return std::string("c = 1 hits a coefficient pole");
                break;
            case NonterminatingVariant::watson_b: {
                if (c == ES(1)) return std::string("c = 1 hits a coefficient pole");
                const ES two_c = ES(2) * c;
                if ((two_c - a - ES(5)).is_zero() || (two_c - bb - ES(5)).is_zero() ||
                    (two_c - a - ES(4)).is_zero() || (two_c - bb - ES(4)).is_zero())
                    return std::string("coefficient denominator vanishes");
                break;
            }
            default:
                break;
        }
        return std::nullopt;
    };
    d.lhs = [variant](const Binding& b, const EvalOptions& opts) {
        return numeric_series_side(nonterminating_lhs_spec(variant, b), opts);
    };
    d.rhs = [variant](const Binding& b, const EvalOptions& opts) {
        return rhs_nonterminating(variant, b, opts);
    };
    d.default_sweep = std::move(sweep);
    return d;
}

std::vector<IdentityDescriptor> make_registry() {
    std::vector<IdentityDescriptor> reg;
    reg.reserve(53);

    // ---- weighted alternating-family identities ----
    reg.push_back(make_family_id("thm_a", 1, 0, 0, 0,
                                 "alternating binomial-ratio sum with harmonic weights",
                                 "n >= 0; x not a negative integer with |x| <= n"));
    reg.push_back(make_family_id("thm_b", 1, 1, 0, 0,
                                 "the k-weighted alternating binomial-ratio sum",
                                 "n >= 0; x not in {-1, ..., -n}; x != -1 for n >= 1"));
    reg.push_back(make_family_id("thm_c", 1, 2, 0, 0,
                                 "the k^2-weighted alternating binomial-ratio sum",
                                 "n >= 0; x not in {-1, ..., -n} nor {-1, -2} for n >= 1; "
                                 "parity denominators nonzero"));
    reg.push_back(make_family_id("thm_d", 2, 0, 0, 0,
                                 "binomial convolution with second-order harmonic weights",
                                 "n >= 0; x not a negative integer with |x| <= 2n+1"));
    reg.push_back(make_family_id("thm_e", 2, 1, 1, 1,
                                 "the k-weighted second-order harmonic convolution",
                                 "n >= 1; x not a negative integer with |x| <= 2n+1"));
    reg.push_back(make_family_id("thm_f", 2, 2, 2, 2,
                                 "the k^2-weighted second-order harmonic convolution",
                                 "n >= 2; x not a negative integer with |x| <= 2n+1; "
                                 "x*n + 3n + 1 != 0"));
    reg.push_back(make_family_id("thm_g", 3, 0, 0, 0,
                                 "binomial convolution with squared harmonic weights",
                                 "n >= 0; x not a negative integer with |x| <= 2n+1"));
    reg.push_back(make_family_id("thm_h", 3, 1, 1, 1,
                                 "the k-weighted squared harmonic convolution",
                                 "n >= 1; x not a negative integer with |x| <= 2n+1"));
    reg.push_back(make_family_id("thm_i", 3, 2, 2, 2,
                                 "the k^2-weighted squared harmonic convolution",
                                 "n >= 2; x not a negative integer with |x| <= 2n+1; "
                                 "x*n + 3n + 1 != 0"));

    // ---- integer-shift consequences ----
    reg.push_back(make_corollary_id("cor_a", 1, 0, 0, 0,
                                    "integer-shift case of the alternating family",
                                    "n >= 0; p >= 0"));
    reg.push_back(make_corollary_id("cor_b", 1, 1, 0, 0,
                                    "k-weighted integer-shift alternating sum", "n >= 0; p >= 0"));
    reg.push_back(make_corollary_id("cor_c", 1, 2, 0, 0,
                                    "k^2-weighted integer-shift alternating sum",
                                    "n >= 0; p >= 0"));
    reg.push_back(make_corollary_id("cor_d", 2, 0, 0, 0,
                                    "integer-shift second-order harmonic convolution",
                                    "n >= 0; p >= 0"));
    reg.push_back(make_corollary_id("cor_e", 2, 1, 1, 1,
                                    "k-weighted integer-shift second-order convolution",
                                    "n >= 1; p >= 0"));
    reg.push_back(make_corollary_id("cor_f", 2, 2, 2, 2,
                                    "k^2-weighted integer-shift second-order convolution",
                                    "n >= 2; p >= 0"));
    reg.push_back(make_corollary_id("cor_g", 3, 0, 0, 0,
                                    "integer-shift squared harmonic convolution",
                                    "n >= 0; p >= 0"));
    reg.push_back(make_corollary_id("cor_h", 3, 1, 1, 1,
                                    "k-weighted integer-shift squared convolution",
                                    "n >= 1; p >= 0"));
    reg.push_back(make_corollary_id("cor_i", 3, 2, 2, 2,
                                    "k^2-weighted integer-shift squared convolution",
                                    "n >= 2; p >= 0"));

    // ---- classical specializations ----
    reg.push_back(make_concise_id("concise_f1_t0", 1, 0, 0, 0,
                                  "signed central specialization, weight 1", "n >= 0"));
    reg.push_back(make_concise_id("concise_f1_t1", 1, 1, 0, 0,
                                  "signed central specialization, weight k", "n >= 0"));
    reg.push_back(make_concise_id("concise_f1_t2", 1, 2, 0, 0,
                                  "signed central specialization, weight k^2", "n >= 0"));
    reg.push_back(make_concise_id("concise_f2_t0", 2, 0, 0, 0,
                                  "central second-order specialization, weight 1", "n >= 0"));
    reg.push_back(make_concise_id("concise_f2_t1", 2, 1, 1, 1,
                                  "central second-order specialization, weight k", "n >= 1"));
    reg.push_back(make_concise_id("concise_f2_t2", 2, 2, 2, 2,
                                  "central second-order specialization, weight k^2", "n >= 2"));
    reg.push_back(make_concise_id("concise_f3_t0", 3, 0, 0, 0,
                                  "central squared-harmonic specialization, weight 1", "n >= 0"));
    reg.push_back(make_concise_id("concise_f3_t1", 3, 1, 1, 1,
                                  "central squared-harmonic specialization, weight k", "n >= 1"));
    reg.push_back(make_concise_id("concise_f3_t2", 3, 2, 2, 2,
                                  "central squared-harmonic specialization, weight k^2",
                                  "n >= 2"));

    // ---- terminating series ----
    reg.push_back(make_terminating_id("eq_watson_ter", TerminatingVariant::watson_terminating, 0,
                                      0, 0, "terminating balanced series in closed form",
                                      "n >= 0; (1+a+b)/2 not a small nonpositive integer"));
    reg.push_back(make_terminating_id("lem_e", TerminatingVariant::lemma_e, 0, 0, 0,
                                      "terminating half-parameter series, even depth",
                                      "n >= 0; b not in {0, -2, ..., -2n}"));
    reg.push_back(make_terminating_id("eq_watson_d", TerminatingVariant::watson_d, 1, 0, 1,
                                      "terminating half-parameter series, odd depth",
                                      "n >= 0; b not in {0, -2, ..., -2n-2}"));
    reg.push_back(make_terminating_id("lem_f", TerminatingVariant::lemma_f, 0, 1, 1,
                                      "k-weighted terminating half-parameter series",
                                      "n >= 0; b not in {0, -2, ..., -2n-2}"));
    reg.push_back(make_terminating_id("eq_watson_f", TerminatingVariant::watson_f, 2, 0, 2,
                                      "terminating half-parameter series, depth two",
                                      "n >= 0; b not in {0, -2, ..., -2n-4}; a != 1; "
                                      "b - a != 1"));
    reg.push_back(make_terminating_id("lem_g", TerminatingVariant::lemma_g, 0, 2, 2,
                                      "k^2-weighted terminating half-parameter series",
                                      "n >= 0; b not in {0, -2, ..., -2n-4}"));

    // ---- exact binomial and harmonic sums ----
    reg.push_back(make_binomial_sum_id("eq_watson_c", BinomialSumVariant::watson_c,
                                       "binomial-ratio convolution in closed form",
                                       "n >= 0; y not an even integer in [-2n-2, -2]"));
    reg.push_back(make_binomial_sum_id("eq_watson_e", BinomialSumVariant::watson_e,
                                       "k-weighted binomial-ratio convolution",
                                       "n >= 0; y not an even integer in [-2n-4, -2]"));
    reg.push_back(make_binomial_sum_id("eq_watson_g", BinomialSumVariant::watson_g,
                                       "k^2-weighted binomial-ratio convolution",
                                       "n >= 0; y not an even integer in [-2n-6, -2]"));
    reg.push_back(make_binomial_sum_id("eq_watson_h", BinomialSumVariant::watson_h,
                                       "plain binomial convolution", "n >= 0"));
    reg.push_back(make_binomial_sum_id("eq_watson_i", BinomialSumVariant::watson_i,
                                       "k-weighted binomial convolution", "n >= 0"));
    reg.push_back(make_binomial_sum_id("eq_watson_j", BinomialSumVariant::watson_j,
                                       "k^2-weighted binomial convolution", "n >= 0, n != 1"));
    reg.push_back(make_binomial_sum_id("eq_harmonic_a", BinomialSumVariant::harmonic_a,
                                       "harmonic-weighted binomial convolution",
                                       "n >= 0; x not a negative integer with |x| <= 2n+1"));
    reg.push_back(make_binomial_sum_id("eq_harmonic_b", BinomialSumVariant::harmonic_b,
                                       "k-weighted harmonic binomial convolution",
                                       "n >= 0; x not a negative integer with |x| <= "
                                       "max(2n+1, n+2)"));
    reg.push_back(make_binomial_sum_id("eq_harmonic_c", BinomialSumVariant::harmonic_c,
                                       "k^2-weighted harmonic binomial convolution",
                                       "n >= 0, n != 1; x not a negative integer with |x| <= "
                                       "max(2n+1, n+3); x*n + 3n + 1 != 0"));
    reg.push_back(make_binomial_sum_id("chu", BinomialSumVariant::vandermonde,
                                       "classical binomial convolution", "n >= 0"));

    // ---- non-terminating series against Gamma-ratio closed forms ----
    const auto a_list = rationals({{0, 1}, {1, 3}, {1, 2}, {1, 1}});
    const auto b_list = rationals({{1, 2}, {3, 4}, {1, 1}});
    reg.push_back(make_nonterminating_id(
        "eq_watson", NonterminatingVariant::watson,
        ConvergenceCondition::one_minus_a_minus_b_plus_2c,
        "balanced non-terminating series against a Gamma ratio",
        "1 - a - b + 2c > 0; series lower parameters off the nonpositive integers",
        {{"a", a_list}, {"b", b_list}, {"c", rationals({{3, 1}, {7, 2}, {4, 1}})}}));
    reg.push_back(make_nonterminating_id(
        "lem_b", NonterminatingVariant::lemma_b,
        ConvergenceCondition::two_c_minus_a_minus_b_minus_1,
        "depth-one contiguous series against a two-term Gamma form",
        "2c - a - b - 1 > 0; series lower parameters off the nonpositive integers",
        {{"a", a_list}, {"b", b_list}, {"c", rationals({{4, 1}, {9, 2}, {5, 1}})}}));
    reg.push_back(make_nonterminating_id(
        "lem_c", NonterminatingVariant::lemma_c,
        ConvergenceCondition::two_c_minus_a_minus_b_minus_3,
        "k-weighted depth-one series against a two-term Gamma form",
        "2c - a - b - 3 > 0; series lower parameters off the nonpositive integers",
        {{"a", a_list}, {"b", b_list}, {"c", rationals({{5, 1}, {11, 2}, {6, 1}})}}));
    reg.push_back(make_nonterminating_id(
        "lem_d", NonterminatingVariant::lemma_d,
        ConvergenceCondition::two_c_minus_a_minus_b_minus_5,
        "k^2-weighted depth-one series against a two-term Gamma form",
        "2c - a - b - 5 > 0; series lower parameters off the nonpositive integers",
        {{"a", a_list}, {"b", b_list}, {"c", rationals({{13, 2}, {7, 1}, {15, 2}})}}));
    const auto wh_a = rationals({{0, 1}, {1, 3}, {1, 2}, {3, 2}});
    const auto wh_b = rationals({{1, 1}, {3, 2}, {7, 4}});
    const auto wh_c = rationals({{1, 2}, {3, 4}, {5, 4}});
    reg.push_back(make_nonterminating_id(
        "eq_whipple_a", NonterminatingVariant::whipple_a, std::nullopt,
        "self-reversing series against a reflection Gamma form",
        "b > 0; series lower parameters off the nonpositive integers",
        {{"a", wh_a}, {"b", wh_b}, {"c", wh_c}}));
    reg.push_back(make_nonterminating_id(
        "eq_whipple_b", NonterminatingVariant::whipple_b, std::nullopt,
        "first contiguous neighbour of the self-reversing series",
        "b > 0; coefficient denominators nonzero",
        {{"a", wh_a}, {"b", wh_b}, {"c", wh_c}}));
    reg.push_back(make_nonterminating_id(
        "eq_whipple_c", NonterminatingVariant::whipple_c, std::nullopt,
        "second contiguous neighbour of the self-reversing series",
        "b > 0; coefficient denominators nonzero",
        {{"a", wh_a}, {"b", wh_b}, {"c", wh_c}}));
    reg.push_back(make_nonterminating_id(
        "eq_kummer", NonterminatingVariant::kummer, std::nullopt,
        "three-part series transformation", "a > 0; d + e - a - b - c > 0",
        {{"a", rationals({{5, 2}, {3, 1}})},
         {"b", rationals({{1, 3}, {1, 2}})},
         {"c", rationals({{1, 4}, {1, 2}})},
         {"d", rationals({{7, 2}, {4, 1}})},
         {"e", rationals({{4, 1}})}}));
    reg.push_back(make_nonterminating_id(
        "eq_watson_a", NonterminatingVariant::watson_a,
        ConvergenceCondition::two_c_minus_a_minus_b_minus_3,
        "depth-two contiguous series against a two-term Gamma form",
        "2c - a - b - 3 > 0; c != 1",
        {{"a", a_list}, {"b", b_list}, {"c", rationals({{5, 1}, {11, 2}, {6, 1}})}}));
    reg.push_back(make_nonterminating_id(
        "eq_watson_b", NonterminatingVariant::watson_b,
        ConvergenceCondition::two_c_minus_a_minus_b_minus_5,
        "depth-three contiguous series against a two-term Gamma form",
        "2c - a - b - 5 > 0; c != 1; coefficient denominators nonzero",
        {{"a", a_list}, {"b", b_list}, {"c", rationals({{13, 2}, {7, 1}, {15, 2}})}}));

    return reg;
}

}  // namespace

const std::vector<IdentityDescriptor>& identity_registry() {
    static const std::vector<IdentityDescriptor> reg = make_registry();
    return reg;
}

const IdentityDescriptor* find_identity(const std::string& id) {
    const auto& reg = identity_registry();
    const auto it = std::find_if(reg.begin(), reg.end(),
                                 [&](const IdentityDescriptor& d) { return d.id == id; });
    return it == reg.end() ? nullptr : &*it;
}

}  // namespace hwsum
