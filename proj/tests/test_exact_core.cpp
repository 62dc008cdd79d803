#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hwsum/combinatorics.hpp"
#include "hwsum/exact_scalar.hpp"

using hwsum::ExactScalar;

namespace {
ExactScalar q(long num, long den) { return ExactScalar(num, den); }
}  // namespace

TEST_CASE("construction canonicalizes sign and lowest terms") {
    CHECK(ExactScalar(2, 4) == q(1, 2));
    CHECK(ExactScalar(1, -2) == q(-1, 2));
    CHECK(ExactScalar(-3, -6) == q(1, 2));
    CHECK(ExactScalar(0, 7) == ExactScalar(0));
    CHECK(ExactScalar(2, 4).str() == "1/2");
    CHECK(ExactScalar(-4, 2).str() == "-2");
    CHECK_THROWS_AS(ExactScalar(1, 0), std::domain_error);
}

TEST_CASE("from_string accepts integers and fractions only") {
    CHECK(ExactScalar::from_string("7") == ExactScalar(7));
    CHECK(ExactScalar::from_string("-7") == ExactScalar(-7));
    CHECK(ExactScalar::from_string("22/7") == q(22, 7));
    CHECK(ExactScalar::from_string("-1/3") == q(-1, 3));
    CHECK(ExactScalar::from_string("4/6") == q(2, 3));
    CHECK_THROWS_AS(ExactScalar::from_string("1.5"), std::domain_error);
    CHECK_THROWS_AS(ExactScalar::from_string("1e3"), std::domain_error);
    CHECK_THROWS_AS(ExactScalar::from_string(""), std::domain_error);
    CHECK_THROWS_AS(ExactScalar::from_string("1/0"), std::domain_error);
    CHECK_THROWS_AS(ExactScalar::from_string("two"), std::domain_error);
}

TEST_CASE("arithmetic is exact and division by zero throws") {
    const ExactScalar a = q(1, 3), b = q(1, 6);
    CHECK(a + b == q(1, 2));
    CHECK(a - b == q(1, 6));
    CHECK(a * b == q(1, 18));
    CHECK(a / b == ExactScalar(2));
    CHECK(-a == q(-1, 3));
    CHECK_THROWS_AS(a / ExactScalar(0), std::domain_error);
    // accumulating thirds never drifts
    ExactScalar acc(0);
    for (int i = 0; i < 3000; ++i) acc += q(1, 3);
    CHECK(acc == ExactScalar(1000));
}

TEST_CASE("predicates, ordering, and conversions") {
    CHECK(q(-1, 3).is_negative());
    CHECK(q(1, 3).is_positive());
    CHECK(ExactScalar(0).is_zero());
    CHECK(ExactScalar(5).is_integer());
    CHECK_FALSE(q(1, 2).is_integer());
    CHECK(ExactScalar(0).is_nonpositive_integer());
    CHECK(ExactScalar(-4).is_nonpositive_integer());
    CHECK_FALSE(ExactScalar(3).is_nonpositive_integer());
    CHECK_FALSE(q(-1, 2).is_nonpositive_integer());
    CHECK(q(1, 3) < q(1, 2));
    CHECK(ExactScalar(7).to_long() == 7);
    CHECK_THROWS_AS(q(1, 2).to_long(), std::domain_error);
    CHECK(q(1, 2).to_double() == doctest::Approx(0.5));
}

TEST_CASE("pow_int and abs") {
    CHECK(hwsum::pow_int(q(2, 3), 3) == q(8, 27));
    CHECK(hwsum::pow_int(q(2, 3), -2) == q(9, 4));
    CHECK(hwsum::pow_int(q(2, 3), 0) == ExactScalar(1));
    CHECK(hwsum::pow_int(ExactScalar(0), 2) == ExactScalar(0));
    CHECK_THROWS_AS(hwsum::pow_int(ExactScalar(0), -1), std::domain_error);
    CHECK(hwsum::abs(q(-5, 3)) == q(5, 3));
    CHECK(hwsum::abs(q(5, 3)) == q(5, 3));
}

TEST_CASE("factorial and shifted factorial") {
    CHECK(hwsum::factorial(0) == ExactScalar(1));
    CHECK(hwsum::factorial(5) == ExactScalar(120));
    CHECK_THROWS_AS(hwsum::factorial(-1), std::domain_error);
    CHECK(hwsum::shifted_factorial(q(1, 2), 3) == q(15, 8));
    CHECK(hwsum::shifted_factorial(q(22, 7), 0) == ExactScalar(1));
    CHECK(hwsum::shifted_factorial(ExactScalar(-3), 5) == ExactScalar(0));
    CHECK_THROWS_AS(hwsum::shifted_factorial(q(1, 2), -1), std::domain_error);
}

TEST_CASE("shifted factorial splits multiplicatively") {
    // (x)_{m+n} = (x)_m * (x+m)_n
    const ExactScalar xs[] = {ExactScalar(0), ExactScalar(1), q(1, 2), q(-5, 2), q(22, 7),
                              ExactScalar(-3)};
    for (const auto& x : xs)
        for (long m = 0; m <= 6; ++m)
            for (long n = 0; n <= 6; ++n)
                CHECK(hwsum::shifted_factorial(x, m + n) ==
                      hwsum::shifted_factorial(x, m) *
                          hwsum::shifted_factorial(x + ExactScalar(m), n));
}

TEST_CASE("generalized binomial coefficients") {
    CHECK(hwsum::gen_binomial(ExactScalar(4), 2) == ExactScalar(6));
    CHECK(hwsum::gen_binomial(ExactScalar(4), 0) == ExactScalar(1));
    CHECK(hwsum::gen_binomial(ExactScalar(4), -1) == ExactScalar(0));
    CHECK(hwsum::gen_binomial(ExactScalar(3), 5) == ExactScalar(0));
    CHECK(hwsum::gen_binomial(q(1, 2), 2) == q(-1, 8));
    CHECK(hwsum::gen_binomial(q(-1, 2), 3) == q(-5, 16));
}

TEST_CASE("binomial coefficients satisfy the addition rule") {
    // C(x, k) = C(x-1, k-1) + C(x-1, k)
    const ExactScalar xs[] = {ExactScalar(0), ExactScalar(6), q(1, 2), q(-7, 3), q(22, 7)};
    for (const auto& x : xs)
        for (long k = 1; k <= 8; ++k)
            CHECK(hwsum::gen_binomial(x, k) == hwsum::gen_binomial(x - ExactScalar(1), k - 1) +
                                                   hwsum::gen_binomial(x - ExactScalar(1), k));
}

TEST_CASE("binomials expand as shifted-factorial ratios") {
    // C(x+r, s) = (x+r-s+1)_s / s!
    const ExactScalar xs[] = {ExactScalar(0), q(1, 2), q(-1, 3), ExactScalar(7)};
    for (const auto& x : xs)
        for (long r = 0; r <= 6; ++r)
            for (long s = 0; s <= r; ++s)
                CHECK(hwsum::gen_binomial(x + ExactScalar(r), s) ==
                      hwsum::shifted_factorial(x + ExactScalar(r - s + 1), s) /
                          hwsum::factorial(s));
}

TEST_CASE("harmonic numbers with shift and order") {
    using hwsum::harmonic;
    CHECK(harmonic(0, 1, q(1, 2)) == ExactScalar(0));
    CHECK(harmonic(3, 1, ExactScalar(0)) == q(11, 6));
    CHECK(harmonic(2, 2, q(1, 2)) == q(136, 225));
    CHECK(hwsum::harmonic_classic(3) == q(11, 6));
    CHECK(hwsum::harmonic_classic(0) == ExactScalar(0));
    CHECK_THROWS_AS(harmonic(2, 0, ExactScalar(0)), std::domain_error);
    CHECK_THROWS_AS(harmonic(2, 1, ExactScalar(-1)), std::domain_error);  // pole at x+1
}

TEST_CASE("harmonic recurrence in the upper index") {
    // H_n(x) = H_{n-1}(x) + 1/(x+n)
    const ExactScalar xs[] = {ExactScalar(0), q(1, 2), q(-1, 3), q(22, 7)};
    for (const auto& x : xs)
        for (long n = 1; n <= 12; ++n)
            for (long l = 1; l <= 2; ++l)
                CHECK(hwsum::harmonic(n, l, x) ==
                      hwsum::harmonic(n - 1, l, x) +
                          ExactScalar(1) / hwsum::pow_int(x + ExactScalar(n), l));
}

TEST_CASE("negative-index harmonic extension") {
    using hwsum::harmonic;
    CHECK(harmonic(-1, 1, q(5, 2)) == q(-2, 5));
    CHECK(harmonic(-2, 1, q(5, 2)) == q(-2, 5) - q(2, 3));
    // H_{-1}(x) = -1/x, H_{-2}(x) = -1/x - 1/(x-1)
    const ExactScalar x = q(22, 7);
    CHECK(harmonic(-1, 1, x) == -(ExactScalar(1) / x));
    CHECK(harmonic(-2, 1, x) == -(ExactScalar(1) / x) - ExactScalar(1) / (x - ExactScalar(1)));
    // the recurrence H_{n-1}(x) = H_n(x) - 1/(x+n) continues through zero
    CHECK(harmonic(-1, 1, x) == harmonic(0, 1, x) - ExactScalar(1) / x);
    CHECK_THROWS_AS(harmonic(-1, 1, ExactScalar(0)), std::domain_error);
    CHECK_THROWS_AS(harmonic(-2, 1, ExactScalar(1)), std::domain_error);
    CHECK_THROWS_AS(harmonic(-3, 1, q(5, 2)), std::domain_error);
    CHECK_THROWS_AS(harmonic(-1, 2, q(5, 2)), std::domain_error);
}

TEST_CASE("parity split covers both parities") {
    for (long m = 0; m <= 12; ++m) {
        const auto even = hwsum::parity_split(2 * m);
        CHECK(even.parity == hwsum::Parity::even);
        CHECK(even.m == m);
        CHECK(even.n == 2 * m);
        const auto odd = hwsum::parity_split(2 * m + 1);
        CHECK(odd.parity == hwsum::Parity::odd);
        CHECK(odd.m == m);
        CHECK(odd.n == 2 * m + 1);
    }
    CHECK_THROWS_AS(hwsum::parity_split(-1), std::domain_error);
}
