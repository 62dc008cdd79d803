/**
 * @file derivative_ops.cpp
 * @brief Implementation of the exact derivative routes.
 */
#include "hwsum/derivative_ops.hpp"

namespace hwsum {

LinFracProduct::LinFracProduct(std::vector<LinFracFactor> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if (f.c.is_zero() && f.d.is_zero())
            throw std::domain_error("LinFracProduct: factor with identically zero denominator");
    }
}

DualScalar eval_dual(const LinFracProduct& f, const ExactScalar& x0) {
    const DualScalar x = DualScalar::variable(x0);
    DualScalar acc = DualScalar::constant(ExactScalar(1));
    for (const auto& t : f.factors()) {
        const DualScalar num = DualScalar::constant(t.a) * x + DualScalar::constant(t.b);
        const DualScalar den = DualScalar::constant(t.c) * x + DualScalar::constant(t.d);
        acc *= num / den;  // throws on den.value == 0
    }
    return acc;
}

ExactScalar lemma1_derivative(const LinFracProduct& f, const ExactScalar& x0) {
    ExactScalar product(1);
    ExactScalar logsum(0);
    for (const auto& t : f.factors()) {
        const ExactScalar num = t.a * x0 + t.b;
        const ExactScalar den = t.c * x0 + t.d;
        if (den.is_zero())
            throw std::domain_error("lemma1_derivative: denominator factor vanishes at x0");
        if (num.is_zero())
            throw std::domain_error(
                "lemma1_derivative: numerator factor vanishes at x0; use dual evaluation");
        product *= num / den;
        logsum += (t.a * t.d - t.b * t.c) / (num * den);
    }
    return product * logsum;
}

ExactScalar binom_derivative(long r, long s, const ExactScalar& x0) {
    if (s < 0 || s > r) throw std::domain_error("binom_derivative: requires 0 <= s <= r");
    const ExactScalar b = gen_binomial(x0 + ExactScalar(r), s);
    return b * (harmonic(r, 1, x0) - harmonic(r - s, 1, x0));
}

LinFracProduct binom_as_product(long r, long s) {
    if (s < 0 || s > r) throw std::domain_error("binom_as_product: requires 0 <= s <= r");
    std::vector<LinFracFactor> factors;
    factors.reserve(static_cast<std::size_t>(s));
    for (long j = 1; j <= s; ++j) {
        // (x + r - j + 1) / j
        factors.push_back(LinFracFactor{ExactScalar(1), ExactScalar(r - j + 1), ExactScalar(0),
                                        ExactScalar(j)});
    }
    return LinFracProduct(std::move(factors));
}

DualScalar harmonic_dual(long n, long l, const ExactScalar& x0) {
    if (n < 0) throw std::domain_error("harmonic_dual: requires n >= 0");
    if (l < 1) throw std::domain_error("harmonic_dual: order must be >= 1");
    const DualScalar x = DualScalar::variable(x0);
    const DualScalar one = DualScalar::constant(ExactScalar(1));
    DualScalar acc;
    for (long k = 1; k <= n; ++k) {
        DualScalar d = x + DualScalar::constant(ExactScalar(k));
        DualScalar p = one;
        for (long i = 0; i < l; ++i) p *= d;
        acc += one / p;
    }
    return acc;
}

}  // namespace hwsum
