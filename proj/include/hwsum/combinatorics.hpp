/**
 * @file combinatorics.hpp
 * @brief Exact combinatorial primitives: shifted factorials, generalized
 *        binomial coefficients, generalized harmonic numbers, parity splits.
 *
 * Key design decisions:
 *   - the shifted factorial uses the empty-product convention (x)_0 = 1;
 *   - binomial coefficients take an arbitrary rational upper argument; a
 *     negative lower index yields 0 (the standard extension);
 *   - harmonic numbers carry a rational offset x and an integer order l >= 1,
 *     H_n^<l>(x) = sum_{k=1..n} 1/(x+k)^l, with H_0 = 0 and a two-step
 *     downward extension H_{-1}(x) = -1/x, H_{-2}(x) = -1/x - 1/(x-1)
 *     (order 1 only), obtained from the recurrence H_{n-1}(x) = H_n(x) - 1/(x+n);
 *   - all pole situations throw std::domain_error rather than returning a
 *     sentinel.
 */
#pragma once

#include "hwsum/exact_scalar.hpp"

namespace hwsum {

// ---- parity ----

enum class Parity { even, odd };

/// n = 2m (even) or n = 2m+1 (odd), with n >= 0.
struct ParityCase {
    long n;
    Parity parity;
    long m;
};

ParityCase parity_split(long n);

// ---- factorials and binomials ----

/// n! for n >= 0.
ExactScalar factorial(long n);

/// Shifted factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1. Requires n >= 0.
ExactScalar shifted_factorial(const ExactScalar& x, long n);

/// Generalized binomial coefficient C(x, k) = (x-k+1)_k / k! for k >= 0;
/// C(x, k) = 0 for k < 0.
ExactScalar gen_binomial(const ExactScalar& x, long k);

// ---- harmonic numbers ----

/// H_n^<l>(x) = sum_{k=1..n} 1/(x+k)^l for n >= 0 (H_0 = 0).
/// For n in {-1, -2} the order must be 1 and the recurrence extension applies;
/// throws std::domain_error for n < -2, l < 1, or when a term denominator
/// vanishes.
ExactScalar harmonic(long n, long l, const ExactScalar& x);

/// Classical harmonic number H_n = harmonic(n, 1, 0).
ExactScalar harmonic_classic(long n);

}  // namespace hwsum
