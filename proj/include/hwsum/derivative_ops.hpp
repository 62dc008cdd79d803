/**
 * @file derivative_ops.hpp
 * @brief Exact derivatives of products of linear-fractional factors, of
 *        binomial coefficients in their upper argument, and of generalized
 *        harmonic numbers in their offset.
 *
 * Two independent routes are provided for the product derivative: a closed
 * form (logarithmic differentiation) and forward-mode dual-number evaluation.
 * They are kept separate so each can serve as an oracle for the other; callers
 * must not collapse them.
 */
#pragma once

#include <vector>

#include "hwsum/combinatorics.hpp"
#include "hwsum/dual_scalar.hpp"
#include "hwsum/exact_scalar.hpp"

namespace hwsum {

// ---- linear-fractional products ----

/// One factor (a x + b) / (c x + d).
struct LinFracFactor {
    ExactScalar a, b, c, d;
};

/// A finite product prod_j (a_j x + b_j) / (c_j x + d_j).
/// Construction rejects any factor with (c, d) == (0, 0) (identically
/// undefined denominator).
class LinFracProduct {
public:
    LinFracProduct() = default;
    explicit LinFracProduct(std::vector<LinFracFactor> factors);

    const std::vector<LinFracFactor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

private:
    std::vector<LinFracFactor> factors_;
};

/// Value and derivative of the product at x0 via dual-number arithmetic.
/// Throws std::domain_error if any denominator vanishes at x0.
DualScalar eval_dual(const LinFracProduct& f, const ExactScalar& x0);

/// Derivative of the product at x0 via the closed form
///   f(x0) * sum_j (a_j d_j - b_j c_j) / ((a_j x0 + b_j)(c_j x0 + d_j)).
/// Throws std::domain_error if any numerator or denominator factor vanishes
/// at x0 (the logarithmic form needs every factor nonzero); dual-number
/// evaluation is the designated fallback for vanishing numerators.
ExactScalar lemma1_derivative(const LinFracProduct& f, const ExactScalar& x0);

// ---- structured derivatives ----

/// d/dx C(x + r, s) at x0, as the closed form
///   C(x0 + r, s) * (H_r(x0) - H_{r-s}(x0)).
/// Requires 0 <= s <= r; throws std::domain_error if a harmonic term hits a
/// pole.
ExactScalar binom_derivative(long r, long s, const ExactScalar& x0);

/// C(x + r, s) at x0 as a product of linear factors prod_{j=1..s} (x+r-j+1)/j,
/// exposed so dual evaluation of the same object is available as an oracle.
LinFracProduct binom_as_product(long r, long s);

/// (H_n^<l>(x0), d/dx H_n^<l>(x)|_{x0}) computed term-by-term in dual
/// arithmetic. The derivative equals -l * H_n^<l+1>(x0). Requires n >= 0,
/// l >= 1.
DualScalar harmonic_dual(long n, long l, const ExactScalar& x0);

}  // namespace hwsum
