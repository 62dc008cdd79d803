/**
 * @file series_engine.hpp
 * @brief Direct-summation oracles: terminating and non-terminating
 *        hypergeometric-type series, weighted binomial/harmonic sums, and the
 *        literal left-hand sides of the verified identities.
 *
 * Everything here sums term by term with no algebraic simplification. These
 * functions are the independent reference values against which the closed
 * forms in the identity registry are checked, so they must never share code
 * with those closed forms.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hwsum/exact_scalar.hpp"

namespace hwsum {

// ---- series description ----

/// A unit-argument series sum_{k>=0} k^weight * t_k with
///   t_k = prod_j (upper_j)_k / (k! * prod_j (lower_j)_k).
/// `termination` marks a terminating series: some upper parameter equals -n
/// and the sum runs k = 0..n.
struct HypergeometricSpec {
    std::vector<ExactScalar> upper;
    std::vector<ExactScalar> lower;
    std::optional<long> termination;
    long weight = 0;  // t in {0, 1, 2}: sum k^t * t_k
};

// ---- terminating evaluation ----

/// Exact sum of a terminating spec via the term ratio recurrence
///   t_{k+1} = t_k * prod(upper + k) / ((k+1) * prod(lower + k)).
/// Throws std::domain_error if `termination` is absent, if no upper parameter
/// equals -n, or if a lower parameter makes a denominator vanish before
/// termination.
ExactScalar eval_terminating(const HypergeometricSpec& spec);

/// Independent route: each term computed from scratch with shifted
/// factorials, no recurrence. Same preconditions as eval_terminating.
ExactScalar eval_terminating_direct(const HypergeometricSpec& spec);

// ---- numeric evaluation ----

struct NumericSum {
    double value = 0.0;
    long terms_used = 0;
};

/// Double-precision partial summation. Terms follow the ratio recurrence;
/// summation stops when the added term is exactly zero (the series has
/// terminated) or when |term| < tol * |partial sum| holds for three
/// consecutive terms. Throws std::domain_error if max_terms is exhausted
/// first or a lower-parameter denominator vanishes.
NumericSum eval_numeric(const HypergeometricSpec& spec, double tol, long max_terms);

// ---- convergence ----

/// The linear forms in the upper parameters (a, b, c) whose positivity
/// guarantees convergence of the non-terminating series handled here.
enum class ConvergenceCondition {
    two_c_minus_a_minus_b_minus_1,  // 2c - a - b - 1 > 0
    two_c_minus_a_minus_b_minus_3,  // 2c - a - b - 3 > 0
    two_c_minus_a_minus_b_minus_5,  // 2c - a - b - 5 > 0
    one_minus_a_minus_b_plus_2c,    // 1 - a - b + 2c > 0
};

struct ConvergenceCheck {
    bool ok = false;
    std::string reason;  // e.g. "2c - a - b - 1 = 13/6 > 0"
};

/// Evaluates the named linear form on spec.upper = {a, b, c} exactly and
/// reports sign and value. Requires exactly three upper parameters.
ConvergenceCheck check_convergence(const HypergeometricSpec& spec, ConvergenceCondition cond);

// ---- weighted binomial-sum oracles ----

/// The six weighted sum families handled by the closed forms:
///   F1: sum_{k=0..n} (-1)^k C(n,k) C(2x+n+k,k) / C(x+k,k) * k^t * H_k
///   F2: sum_{k=0..n} C(2n-k,n) C(x+k,k) * k^t * H_k^<2>(x)
///   F3: sum_{k=0..n} C(2n-k,n) C(x+k,k) * k^t * H_k(x)^2
///   C1, C2, C3: the same sums at x = 0 (classical harmonic weights).
enum class SumFamily { F1, F2, F3, C1, C2, C3 };

struct WeightedSumSpec {
    SumFamily family;
    long t = 0;   // weight exponent, 0..2
    long n = 0;   // summation length
    ExactScalar x;  // ignored for C1..C3
};

/// Literal term-by-term evaluation of the selected family.
ExactScalar eval_weighted_oracle(const WeightedSumSpec& spec);

/// Literal left-hand sides of the integer-shift consequences, as printed:
///   family 1: sum (-1)^k C(n,k) C(2p+n+k,p+k) k^t H_k
///   family 2: sum C(2n-k,n) C(p+k,k) k^t H_{p+k}^<2>
///   family 3: sum C(2n-k,n) C(p+k,k) k^t H_{p+k}^2
ExactScalar eval_corollary_oracle(int family, long t, long n, long p);

// ---- literal binomial-sum left-hand sides ----

/// sum_{k=0..n} k^t C(x+k,k) C(y-x+k,k) C(2n-k,n) / C(y/2+k,k), t in {0,1,2}.
ExactScalar oracle_binomial_ratio_sum(long n, const ExactScalar& x, const ExactScalar& y, long t);

/// sum_{k=0..n} k^t C(2n-k,n) C(x+k,k), t in {0,1,2}.
ExactScalar oracle_binomial_plain_sum(long n, const ExactScalar& x, long t);

/// sum_{k=0..n} k^t C(2n-k,n) C(x+k,k) H_k(x), t in {0,1,2}.
ExactScalar oracle_binomial_harmonic_sum(long n, const ExactScalar& x, long t);

/// sum_{k=0..n} C(x,k) C(y,n-k) (the classical convolution sum).
ExactScalar oracle_vandermonde_sum(long n, const ExactScalar& x, const ExactScalar& y);

}  // namespace hwsum
