#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "hwsum/derivative_ops.hpp"

using hwsum::DualScalar;
using hwsum::ExactScalar;
using hwsum::LinFracFactor;
using hwsum::LinFracProduct;

namespace {
ExactScalar q(long num, long den) { return ExactScalar(num, den); }
LinFracFactor f(long a, long b, long c, long d) {
    return LinFracFactor{ExactScalar(a), ExactScalar(b), ExactScalar(c), ExactScalar(d)};
}
}  // namespace

TEST_CASE("dual arithmetic follows the Taylor rules") {
    const DualScalar x = DualScalar::variable(q(3, 2));
    const DualScalar c = DualScalar::constant(ExactScalar(5));
    CHECK((x + c).value == q(13, 2));
    CHECK((x + c).deriv == ExactScalar(1));
    CHECK((x * x).value == q(9, 4));
    CHECK((x * x).deriv == ExactScalar(3));  // 2 x0
    const DualScalar r = c / x;              // 5/x: derivative -5/x0^2
    CHECK(r.value == q(10, 3));
    CHECK(r.deriv == q(-20, 9));
    CHECK((x - x).deriv == ExactScalar(0));
    CHECK_THROWS_AS(c / DualScalar::variable(ExactScalar(0)), std::domain_error);
}

TEST_CASE("dual product rule matches expansion on a polynomial") {
    // p(x) = (x+1)(2x-3): p'(x) = 4x - 1
    const ExactScalar pts[] = {ExactScalar(0), q(1, 2), q(-7, 3), ExactScalar(4)};
    for (const auto& x0 : pts) {
        const DualScalar x = DualScalar::variable(x0);
        const DualScalar p =
            (x + DualScalar::constant(ExactScalar(1))) *
            (DualScalar::constant(ExactScalar(2)) * x - DualScalar::constant(ExactScalar(3)));
        CHECK(p.deriv == ExactScalar(4) * x0 - ExactScalar(1));
    }
}

TEST_CASE("product construction rejects an identically zero denominator") {
    CHECK_NOTHROW(LinFracProduct({f(1, 1, 0, 1)}));
    CHECK_THROWS_AS(LinFracProduct({f(1, 1, 0, 0)}), std::domain_error);
}

TEST_CASE("closed-form product derivative: pinned values") {
    // d/dx [(x+1)/(x+2)] = 1/(x+2)^2 -> 1/4 at x = 0
    CHECK(hwsum::lemma1_derivative(LinFracProduct({f(1, 1, 1, 2)}), ExactScalar(0)) == q(1, 4));
    // d/dx [x * (x+1)/(x+2)] at x = 1: product evaluates to 2/3, derivative 7/9
    CHECK(hwsum::lemma1_derivative(LinFracProduct({f(1, 0, 0, 1), f(1, 1, 1, 2)}),
                                   ExactScalar(1)) == q(7, 9));
    // d/dx [5/x] at... numerator constant, denominator x: -5/x^2 -> -5 at x = 1
    CHECK(hwsum::lemma1_derivative(LinFracProduct({f(0, 5, 1, 1)}), ExactScalar(0)) ==
          ExactScalar(-5));
    // empty product is the constant 1
    CHECK(hwsum::lemma1_derivative(LinFracProduct(), q(22, 7)) == ExactScalar(0));
}

TEST_CASE("closed form refuses vanishing factors; dual route covers them") {
    const LinFracProduct p({f(1, 0, 0, 1), f(1, 1, 1, 2)});  // x (x+1)/(x+2)
    CHECK_THROWS_AS(hwsum::lemma1_derivative(p, ExactScalar(0)), std::domain_error);
    const DualScalar d = hwsum::eval_dual(p, ExactScalar(0));
    CHECK(d.value == ExactScalar(0));
    CHECK(d.deriv == q(1, 2));  // (x^2+x)/(x+2): derivative (2x+1)/(x+2) - ... = 1/2 at 0
    CHECK_THROWS_AS(hwsum::eval_dual(p, ExactScalar(-2)), std::domain_error);
}

TEST_CASE("the two product-derivative routes agree on random products") {
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<int> nfactors(1, 8);
    std::uniform_int_distribution<int> x0pick(0, 4);
    const ExactScalar x0s[] = {ExactScalar(0), ExactScalar(1), q(1, 2), q(-1, 3), q(5, 2)};
    int done = 0;
    while (done < 200) {
        const ExactScalar x0 = x0s[x0pick(rng)];
        std::vector<LinFracFactor> factors;
        const int s = nfactors(rng);
        bool degenerate = false;
        for (int j = 0; j < s; ++j) {
            const LinFracFactor fac = f(coeff(rng), coeff(rng), coeff(rng), coeff(rng));
            if (fac.c.is_zero() && fac.d.is_zero()) {
                degenerate = true;
                break;
            }
            if ((fac.a * x0 + fac.b).is_zero() || (fac.c * x0 + fac.d).is_zero()) {
                degenerate = true;  // keep every factor nonzero at x0 so both routes apply
                break;
            }
            factors.push_back(fac);
        }
        if (degenerate) continue;
        const LinFracProduct p(std::move(factors));
        CHECK(hwsum::lemma1_derivative(p, x0) == hwsum::eval_dual(p, x0).deriv);
        ++done;
    }
}

TEST_CASE("binomial derivative: pinned value and dual agreement") {
    // d/dx C(x+4, 2) at 0: C(4,2)(H_4 - H_2) = 6 * (25/12 - 3/2) = 7/2
    CHECK(hwsum::binom_derivative(4, 2, ExactScalar(0)) == q(7, 2));
    CHECK_THROWS_AS(hwsum::binom_derivative(2, 3, ExactScalar(0)), std::domain_error);
    const ExactScalar pts[] = {ExactScalar(0), ExactScalar(1), q(1, 2), q(-1, 3), q(22, 7)};
    for (long r = 0; r <= 8; ++r)
        for (long s = 0; s <= r; ++s)
            for (const auto& x0 : pts)
                CHECK(hwsum::binom_derivative(r, s, x0) ==
                      hwsum::eval_dual(hwsum::binom_as_product(r, s), x0).deriv);
}

TEST_CASE("binomial product form evaluates to the binomial") {
    const ExactScalar pts[] = {ExactScalar(0), q(1, 2), q(-1, 3), ExactScalar(5)};
    for (long r = 0; r <= 8; ++r)
        for (long s = 0; s <= r; ++s)
            for (const auto& x0 : pts)
                CHECK(hwsum::eval_dual(hwsum::binom_as_product(r, s), x0).value ==
                      hwsum::gen_binomial(x0 + ExactScalar(r), s));
}

TEST_CASE("harmonic dual: pinned values") {
    const DualScalar h = hwsum::harmonic_dual(2, 1, ExactScalar(0));
    CHECK(h.value == q(3, 2));
    CHECK(h.deriv == q(-5, 4));
    const DualScalar h2 = hwsum::harmonic_dual(1, 2, q(1, 2));
    CHECK(h2.value == q(4, 9));
    CHECK(h2.deriv == q(-16, 27));
}

TEST_CASE("harmonic derivative lowers to the next order") {
    // d/dx H_n^<l>(x) = -l H_n^<l+1>(x)
    const ExactScalar pts[] = {ExactScalar(0), q(1, 2), q(-1, 3), q(22, 7)};
    for (long n = 0; n <= 12; ++n)
        for (long l = 1; l <= 2; ++l)
            for (const auto& x0 : pts) {
                const DualScalar h = hwsum::harmonic_dual(n, l, x0);
                CHECK(h.value == hwsum::harmonic(n, l, x0));
                CHECK(h.deriv == ExactScalar(-l) * hwsum::harmonic(n, l + 1, x0));
            }
}
