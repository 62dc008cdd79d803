/**
 * @file series_engine.cpp
 * @brief Term-by-term summation oracles.
 */
#include "hwsum/series_engine.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>

#include "hwsum/combinatorics.hpp"

namespace hwsum {

namespace {

long validated_termination(const HypergeometricSpec& spec) {
    if (!spec.termination)
        throw std::domain_error("series: spec is not marked terminating");
    const long n = *spec.termination;
    if (n < 0) throw std::domain_error("series: negative termination index");
    bool found = false;
    const ExactScalar minus_n(-n);
    for (const auto& u : spec.upper) {
        if (u == minus_n) {
            found = true;
            break;
        }
    }
    if (!found)
        throw std::domain_error("series: no upper parameter equals -n for the declared termination");
    for (const auto& l : spec.lower) {
        // A lower parameter with l + k = 0 for some k in [0, n-1] poisons the
        // term denominators before the series terminates.
        if (l.is_integer() && !l.is_positive()) {
            const long hit = -l.to_long();
            if (hit < n)
                throw std::domain_error("series: lower parameter hits zero before termination");
        }
    }
    return n;
}

ExactScalar weight_factor(long k, long t) {
    return pow_int(ExactScalar(k), t);  // 0^0 == 1 by convention
}

const char* condition_name(ConvergenceCondition c) {
    switch (c) {
        case ConvergenceCondition::two_c_minus_a_minus_b_minus_1: return "2c - a - b - 1";
        case ConvergenceCondition::two_c_minus_a_minus_b_minus_3: return "2c - a - b - 3";
        case ConvergenceCondition::two_c_minus_a_minus_b_minus_5: return "2c - a - b - 5";
        case ConvergenceCondition::one_minus_a_minus_b_plus_2c: return "1 - a - b + 2c";
    }
    return "?";
}

}  // namespace

ExactScalar eval_terminating(const HypergeometricSpec& spec) {
    const long n = validated_termination(spec);
    ExactScalar term(1);
    ExactScalar sum = weight_factor(0, spec.weight) * term;
    for (long k = 0; k < n; ++k) {
        ExactScalar num(1), den(ExactScalar(k) + ExactScalar(1));
        for (const auto& u : spec.upper) num *= u + ExactScalar(k);
        for (const auto& l : spec.lower) den *= l + ExactScalar(k);
        term *= num / den;
        sum += weight_factor(k + 1, spec.weight) * term;
    }
    return sum;
}

ExactScalar eval_terminating_direct(const HypergeometricSpec& spec) {
    const long n = validated_termination(spec);
    ExactScalar sum(0);
    for (long k = 0; k <= n; ++k) {
        ExactScalar num(1), den(factorial(k));
        for (const auto& u : spec.upper) num *= shifted_factorial(u, k);
        for (const auto& l : spec.lower) den *= shifted_factorial(l, k);
        sum += weight_factor(k, spec.weight) * num / den;
    }
    return sum;
}

NumericSum eval_numeric(const HypergeometricSpec& spec, double tol, long max_terms) {
    if (max_terms < 1) throw std::domain_error("eval_numeric: max_terms must be positive");
    std::vector<double> upper, lower;
    upper.reserve(spec.upper.size());
    lower.reserve(spec.lower.size());
    for (const auto& u : spec.upper) upper.push_back(u.to_double());
    for (const auto& l : spec.lower) lower.push_back(l.to_double());

    const long t = spec.weight;
    auto weight = [t](long k) -> double {
        if (t == 0) return 1.0;
        if (t == 1) return static_cast<double>(k);
        return static_cast<double>(k) * static_cast<double>(k);
    };

    double term = 1.0;
    double sum = weight(0) * term;
    long small_streak = 0;
    for (long k = 0; k < max_terms; ++k) {
        double num = 1.0, den = static_cast<double>(k + 1);
        for (double u : upper) num *= u + static_cast<double>(k);
        for (double l : lower) den *= l + static_cast<double>(k);
        if (den == 0.0)
            throw std::domain_error("eval_numeric: lower parameter denominator vanishes");
        term *= num / den;
        if (term == 0.0) return NumericSum{sum, k + 1};  // exact termination
        const double added = weight(k + 1) * term;
        sum += added;
        if (std::abs(added) < tol * std::abs(sum)) {
            if (++small_streak >= 3) return NumericSum{sum, k + 2};
        } else {
            small_streak = 0;
        }
    }
    throw std::domain_error("eval_numeric: no convergence within max_terms terms");
}

ConvergenceCheck check_convergence(const HypergeometricSpec& spec, ConvergenceCondition cond) {
    if (spec.upper.size() != 3)
        throw std::domain_error("check_convergence: requires exactly three upper parameters");
    const ExactScalar& a = spec.upper[0];
    const ExactScalar& b = spec.upper[1];
    const ExactScalar& c = spec.upper[2];
    const ExactScalar two_c = ExactScalar(2) * c;
    ExactScalar value(0);
    switch (cond) {
        case ConvergenceCondition::two_c_minus_a_minus_b_minus_1:
            value = two_c - a - b - ExactScalar(1);
            break;
        case ConvergenceCondition::two_c_minus_a_minus_b_minus_3:
            value = two_c - a - b - ExactScalar(3);
            break;
        case ConvergenceCondition::two_c_minus_a_minus_b_minus_5:
            value = two_c - a - b - ExactScalar(5);
            break;
        case ConvergenceCondition::one_minus_a_minus_b_plus_2c:
            value = ExactScalar(1) - a - b + two_c;
            break;
    }
    ConvergenceCheck out;
    out.ok = value.is_positive();
    std::ostringstream os;
    os << condition_name(cond) << " = " << value.str() << (out.ok ? " > 0" : " <= 0");
    out.reason = os.str();
    return out;
}

// ---- weighted binomial-sum oracles ----

ExactScalar eval_weighted_oracle(const WeightedSumSpec& spec) {
    const long n = spec.n;
    if (n < 0) throw std::domain_error("eval_weighted_oracle: requires n >= 0");
    if (spec.t < 0 || spec.t > 2)
        throw std::domain_error("eval_weighted_oracle: weight exponent must be 0, 1, or 2");
    const ExactScalar x = (spec.family == SumFamily::F1 || spec.family == SumFamily::F2 ||
                           spec.family == SumFamily::F3)
                              ? spec.x
                              : ExactScalar(0);
    ExactScalar sum(0);
    ExactScalar h(0);   // H_k (classical) or H_k(x), per family
    ExactScalar h2(0);  // H_k^<2>(x)
    for (long k = 0; k <= n; ++k) {
        if (k >= 1) {
            switch (spec.family) {
                case SumFamily::F1:
                case SumFamily::C1:
                    h += ExactScalar(1) / ExactScalar(k);
                    break;
                case SumFamily::F2:
                case SumFamily::C2: {
                    const ExactScalar d = x + ExactScalar(k);
                    if (d.is_zero())
                        throw std::domain_error("eval_weighted_oracle: harmonic pole at x + k = 0");
                    h2 += ExactScalar(1) / (d * d);
                    break;
                }
                case SumFamily::F3:
                case SumFamily::C3: {
                    const ExactScalar d = x + ExactScalar(k);
                    if (d.is_zero())
                        throw std::domain_error("eval_weighted_oracle: harmonic pole at x + k = 0");
                    h += ExactScalar(1) / d;
                    break;
                }
            }
        }
        const ExactScalar w = weight_factor(k, spec.t);
        ExactScalar term(0);
        switch (spec.family) {
            case SumFamily::F1: {
                const ExactScalar den = gen_binomial(x + ExactScalar(k), k);
                if (den.is_zero())
                    throw std::domain_error("eval_weighted_oracle: C(x+k, k) vanishes");
                const ExactScalar sign = (k % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
                term = sign * gen_binomial(ExactScalar(n), k) *
                       gen_binomial(ExactScalar(2) * x + ExactScalar(n + k), k) / den * w * h;
                break;
            }
            case SumFamily::F2:
                term = gen_binomial(ExactScalar(2 * n - k), n) * gen_binomial(x + ExactScalar(k), k) *
                       w * h2;
                break;
            case SumFamily::F3:
                term = gen_binomial(ExactScalar(2 * n - k), n) * gen_binomial(x + ExactScalar(k), k) *
                       w * h * h;
                break;
            case SumFamily::C1:
                term = pow_int(ExactScalar(-2), k) * gen_binomial(ExactScalar(n), k) * w * h;
                break;
            case SumFamily::C2:
                term = gen_binomial(ExactScalar(2 * n - k), n) * w * h2;
                break;
            case SumFamily::C3:
                term = gen_binomial(ExactScalar(2 * n - k), n) * w * h * h;
                break;
        }
        sum += term;
    }
    return sum;
}

ExactScalar eval_corollary_oracle(int family, long t, long n, long p) {
    if (family < 1 || family > 3)
        throw std::domain_error("eval_corollary_oracle: family must be 1, 2, or 3");
    if (n < 0 || p < 0) throw std::domain_error("eval_corollary_oracle: requires n, p >= 0");
    if (t < 0 || t > 2)
        throw std::domain_error("eval_corollary_oracle: weight exponent must be 0, 1, or 2");
    ExactScalar sum(0);
    // Running classical harmonics: h = H_k (family 1) or H_{p+k} (family 3);
    // h2 = H_{p+k}^<2> (family 2).
    ExactScalar h(0), h2(0);
    if (family == 2) h2 = harmonic(p, 2, ExactScalar(0));
    if (family == 3) h = harmonic_classic(p);
    for (long k = 0; k <= n; ++k) {
        if (k >= 1) {
            if (family == 1) h += ExactScalar(1) / ExactScalar(k);
            if (family == 2) h2 += ExactScalar(1) / ExactScalar((p + k) * (p + k));
            if (family == 3) h += ExactScalar(1) / ExactScalar(p + k);
        }
        const ExactScalar w = weight_factor(k, t);
        ExactScalar term(0);
        if (family == 1) {
            const ExactScalar sign = (k % 2 == 0) ? ExactScalar(1) : ExactScalar(-1);
            term = sign * gen_binomial(ExactScalar(n), k) *
                   gen_binomial(ExactScalar(2 * p + n + k), p + k) * w * h;
        } else if (family == 2) {
            term = gen_binomial(ExactScalar(2 * n - k), n) * gen_binomial(ExactScalar(p + k), k) *
                   w * h2;
        } else {
            term = gen_binomial(ExactScalar(2 * n - k), n) * gen_binomial(ExactScalar(p + k), k) *
                   w * h * h;
        }
        sum += term;
    }
    return sum;
}

// ---- literal binomial-sum left-hand sides ----

ExactScalar oracle_binomial_ratio_sum(long n, const ExactScalar& x, const ExactScalar& y, long t) {
    if (n < 0) throw std::domain_error("oracle_binomial_ratio_sum: requires n >= 0");
    const ExactScalar half_y = y / ExactScalar(2);
    ExactScalar sum(0);
    for (long k = 0; k <= n; ++k) {
        const ExactScalar den = gen_binomial(half_y + ExactScalar(k), k);
        if (den.is_zero())
            throw std::domain_error("oracle_binomial_ratio_sum: C(y/2+k, k) vanishes");
        sum += weight_factor(k, t) * gen_binomial(x + ExactScalar(k), k) *
               gen_binomial(y - x + ExactScalar(k), k) * gen_binomial(ExactScalar(2 * n - k), n) /
               den;
    }
    return sum;
}

ExactScalar oracle_binomial_plain_sum(long n, const ExactScalar& x, long t) {
    if (n < 0) throw std::domain_error("oracle_binomial_plain_sum: requires n >= 0");
    ExactScalar sum(0);
    for (long k = 0; k <= n; ++k) {
        sum += weight_factor(k, t) * gen_binomial(ExactScalar(2 * n - k), n) *
               gen_binomial(x + ExactScalar(k), k);
    }
    return sum;
}

ExactScalar oracle_binomial_harmonic_sum(long n, const ExactScalar& x, long t) {
    if (n < 0) throw std::domain_error("oracle_binomial_harmonic_sum: requires n >= 0");
    ExactScalar sum(0);
    ExactScalar h(0);  // running H_k(x)
    for (long k = 0; k <= n; ++k) {
        if (k >= 1) {
            const ExactScalar d = x + ExactScalar(k);
            if (d.is_zero())
                throw std::domain_error("oracle_binomial_harmonic_sum: harmonic pole at x + k = 0");
            h += ExactScalar(1) / d;
        }
        sum += weight_factor(k, t) * gen_binomial(ExactScalar(2 * n - k), n) *
               gen_binomial(x + ExactScalar(k), k) * h;
    }
    return sum;
}

ExactScalar oracle_vandermonde_sum(long n, const ExactScalar& x, const ExactScalar& y) {
    if (n < 0) throw std::domain_error("oracle_vandermonde_sum: requires n >= 0");
    ExactScalar sum(0);
    for (long k = 0; k <= n; ++k) {
        sum += gen_binomial(x, k) * gen_binomial(y, n - k);
    }
    return sum;
}

}  // namespace hwsum
