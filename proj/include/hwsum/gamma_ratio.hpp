/**
 * @file gamma_ratio.hpp
 * @brief Products of Gamma-function values: exact reduction of ratios whose
 *        arguments pair up within residue classes mod 1, and a double-precision
 *        Lanczos fallback for everything else.
 *
 * Key design decisions:
 *   - a ratio Gamma(p)/Gamma(q) with p - q a non-negative integer m reduces to
 *     the shifted factorial (q)_m, and with m < 0 to 1/(p)_{-m}; pairing is
 *     greedy within each residue class after sorting;
 *   - a Gamma pole in a denominator argument annihilates the whole ratio
 *     (value zero); poles in both positions are indeterminate and throw;
 *   - the numeric fallback uses a 15-coefficient Lanczos approximation with
 *     g = 7 plus the reflection formula for arguments below 1/2.
 */
#pragma once

#include <optional>
#include <vector>

#include "hwsum/exact_scalar.hpp"

namespace hwsum {

/// prefactor * prod Gamma(numerator_args) / prod Gamma(denominator_args).
struct GammaRatioSpec {
    std::vector<ExactScalar> numerator_args;
    std::vector<ExactScalar> denominator_args;
    ExactScalar prefactor = ExactScalar(1);
};

/// Attempts the exact reduction. Returns std::nullopt when the arguments do
/// not pair up completely within residue classes mod 1. Throws
/// std::domain_error when a pairing runs through a Gamma pole in a numerator
/// position (division by zero), or when poles occur on both sides.
std::optional<ExactScalar> reduce_exact(const GammaRatioSpec& spec);

/// Gamma(z) in double precision (Lanczos, g = 7, 15 coefficients; reflection
/// formula for z < 1/2). Throws std::domain_error at nonpositive integers.
double eval_numeric_gamma(double z);

/// Tagged result of evaluating a GammaRatioSpec.
struct RatioValue {
    enum class Kind { exact, numeric, zero };
    Kind kind = Kind::zero;
    ExactScalar exact;    // meaningful when kind == exact
    double numeric = 0.0; // meaningful when kind == numeric

    double as_double() const {
        switch (kind) {
            case Kind::exact: return exact.to_double();
            case Kind::numeric: return numeric;
            case Kind::zero: return 0.0;
        }
        return 0.0;
    }
    bool is_exact() const { return kind == Kind::exact || kind == Kind::zero; }
};

/// Full evaluation policy:
///   1. a Gamma pole among denominator args (numerator pole-free) => zero;
///   2. poles on both sides => std::domain_error (indeterminate);
///   3. a numerator pole alone => std::domain_error (the ratio diverges);
///   4. zero prefactor (pole-free args) => exact zero;
///   5. reduce_exact if the arguments pair => exact;
///   6. otherwise the numeric Gamma product.
RatioValue eval_ratio(const GammaRatioSpec& spec);

}  // namespace hwsum
