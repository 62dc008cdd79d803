/**
 * @file combinatorics.cpp
 * @brief Implementation of the exact combinatorial primitives.
 */
#include "hwsum/combinatorics.hpp"

namespace hwsum {

ParityCase parity_split(long n) {
    if (n < 0) throw std::domain_error("parity_split: negative index");
    if (n % 2 == 0) return ParityCase{n, Parity::even, n / 2};
    return ParityCase{n, Parity::odd, (n - 1) / 2};
}

ExactScalar factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative index");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return ExactScalar(r);
}

ExactScalar shifted_factorial(const ExactScalar& x, long n) {
    if (n < 0) throw std::domain_error("shifted_factorial: negative index");
    ExactScalar acc(1);
    for (long j = 0; j < n; ++j) acc *= x + ExactScalar(j);
    return acc;
}

ExactScalar gen_binomial(const ExactScalar& x, long k) {
    if (k < 0) return ExactScalar(0);
    return shifted_factorial(x - ExactScalar(k) + ExactScalar(1), k) / factorial(k);
}

ExactScalar harmonic(long n, long l, const ExactScalar& x) {
    if (l < 1) throw std::domain_error("harmonic: order must be >= 1");
    if (n >= 0) {
        ExactScalar acc(0);
        for (long k = 1; k <= n; ++k) {
            const ExactScalar d = x + ExactScalar(k);
            if (d.is_zero()) throw std::domain_error("harmonic: pole at x + k = 0");
            acc += ExactScalar(1) / pow_int(d, l);
        }
        return acc;
    }
    if (l != 1 || n < -2)
        throw std::domain_error("harmonic: negative index extension requires l = 1 and n >= -2");
    // H_{n-1}(x) = H_n(x) - 1/(x+n) stepped downward from H_0 = 0.
    ExactScalar acc(0);
    for (long k = 0; k > n; --k) {
        const ExactScalar d = x + ExactScalar(k);
        if (d.is_zero()) throw std::domain_error("harmonic: pole in negative-index extension");
        acc -= ExactScalar(1) / d;
    }
    return acc;
}

ExactScalar harmonic_classic(long n) { return harmonic(n, 1, ExactScalar(0)); }

}  // namespace hwsum
