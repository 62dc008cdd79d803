/**
 * @file rhs_closed_forms.cpp
 * @brief Closed-form right-hand sides of all verified identities.
 *
 * These formulas are transcribed independently of the summation oracles in
 * series_engine.cpp; the two sides must never share evaluation code.
 */
#include <cmath>

#include "hwsum/combinatorics.hpp"
#include "hwsum/identities.hpp"
#include "hwsum/series_engine.hpp"

namespace hwsum {

namespace {

using ES = ExactScalar;

ES H(long n, const ES& x) { return harmonic(n, 1, x); }
ES H2(long n, const ES& x) { return harmonic(n, 2, x); }
ES Hc(long n) { return harmonic_classic(n); }
ES B(const ES& z, long k) { return gen_binomial(z, k); }
ES P(const ES& z, long k) { return shifted_factorial(z, k); }
ES sq(const ES& v) { return v * v; }

const ES kZero(0);
const ES kOne(1);
const ES kTwo(2);

}  // namespace

// ---- alternating binomial-ratio family ----

ExactScalar rhs_family1(long t, long n, const ExactScalar& x) {
    const ParityCase pc = parity_split(n);
    const long m = pc.m;
    const ES en(n), ex(x), em(m);
    if (t == 0) {
        if (pc.parity == Parity::even) return H(m, x) + kTwo * Hc(2 * m) - Hc(m);
        return Hc(m) - kTwo * Hc(2 * m + 1) - H(m, x);
    }
    if (t == 1) {
        if (n == 0) return kZero;
        const ES pref = en * (kTwo * ex + en + kOne) / (ex + kOne);
        ES brace;
        if (pc.parity == Parity::even) {
            brace = H(m - 1, x + kOne) + kTwo * Hc(2 * m) - Hc(m);
        } else {
            brace = Hc(m) - kTwo * Hc(2 * m) - H(m, x + kOne) -
                    (ex + kOne) / (ES(2 * m + 1) * (ex + em + kOne));
        }
        return pref * brace;
    }
    if (t == 2) {
        if (n == 0) return kZero;
        const ES pref = en * (kTwo * ex + en + kOne) * (en * en + en + kTwo * en * ex - ex) /
                        ((ex + kOne) * (ex + kTwo));
        ES brace;
        if (pc.parity == Parity::even) {
            brace = kTwo * Hc(2 * m) - Hc(m) + H(m - 2, x + kTwo) +
                    (kOne - ex) / (ES(2 * m) * (kTwo * ex + ES(2 * m) + kOne) - ex);
        } else {
            brace = Hc(m) - kTwo * Hc(2 * m) - H(m - 1, x + kTwo) -
                    (ex + ES(3)) / (ES(2 * m) * (kTwo * ex + ES(2 * m) + ES(3)) + ex + kTwo);
        }
        return pref * brace;
    }
    throw std::domain_error("rhs_family1: weight exponent must be 0, 1, or 2");
}

// ---- second-order harmonic family ----

ExactScalar rhs_family2(long t, long n, const ExactScalar& x) {
    const ES en(n), ex(x);
    const ES half_x = x / kTwo;
    if (t == 0) {
        const ES delta = H(n, half_x) - H(n, (ex + kOne) / kTwo);
        return B(ex + ES(2 * n + 1), n) / ES(8) *
               (ES(4) * H2(2 * n, x + kOne) - delta * (delta - ES(4) / (ex + kOne)));
    }
    if (t == 1) {
        const ES delta = H(n, half_x) - H(n, (ex + kOne) / kTwo);
        return (ex + kOne) / ES(8) * B(ex + ES(2 * n + 1), n - 1) *
               (ES(4) * H2(2 * n + 1, x) - delta * (delta + ES(4) / en) +
                ES(4) / sq(ex + kOne));
    }
    if (t == 2) {
        const ES delta = H(n, half_x) - H(n + 1, (ex - kOne) / kTwo);
        const ES kappa = en * (ex + kOne) * (ex * en + ES(3) * en + kOne);
        return (ex + kOne) * (ex * en + ES(3) * en + kOne) / (ES(8) * ES(n - 1)) *
               B(ex + ES(2 * n + 1), n - 2) *
               (ES(4) * H2(2 * n + 1, x) +
                ES(8) * (ex * ex + ES(3) * ex + en * en - en + kOne) / kappa -
                delta * (delta - ES(4) * (ex + en + kOne) * (ex * ex + ES(3) * ex - kTwo * en + kOne) /
                                     kappa));
    }
    throw std::domain_error("rhs_family2: weight exponent must be 0, 1, or 2");
}

// ---- squared harmonic family ----

ExactScalar rhs_family3(long t, long n, const ExactScalar& x) {
    const ES en(n), ex(x);
    const ES half_x = x / kTwo;
    if (t == 0) {
        const ES delta = H(n, half_x) - H(n, (ex + kOne) / kTwo);
        return B(ex + ES(2 * n + 1), n) / ES(8) *
               (ES(4) * H2(n, x + kOne) - ES(4) * H2(n, ex + en + kOne) +
                ES(8) * sq(H(n, ex + en + kOne)) - delta * (delta - ES(4) / (ex + kOne)));
    }
    if (t == 1) {
        const ES delta = H(n, half_x) - H(n, (ex + kOne) / kTwo);
        const ES gap = H(n + 2, x) - H(2 * n + 1, x);
        return (ex + kOne) / ES(8) * B(ex + ES(2 * n + 1), n - 1) *
               (ES(8) * H2(n + 2, x) - ES(4) * H2(2 * n, x + kOne) +
                ES(8) * gap * (gap - kTwo / (ex + kOne)) - delta * (delta + ES(4) / en));
    }
    if (t == 2) {
        const ES delta = H(n, half_x) - H(n + 1, (ex - kOne) / kTwo);
        const ES kappa = en * (ex + kOne) * (ex * en + ES(3) * en + kOne);
        const ES gap = H(n + 3, x) - H(2 * n + 1, x);
        return (ex + kOne) * (ex * en + ES(3) * en + kOne) / (ES(8) * ES(n - 1)) *
               B(ex + ES(2 * n + 1), n - 2) *
               (ES(8) * gap *
                    (gap - kTwo * (kTwo * ex * en + ES(4) * en + kOne) /
                               ((ex + kOne) * (ex * en + ES(3) * en + kOne))) -
                delta * (delta - ES(4) * (ex + en + kOne) * (ex * ex + ES(3) * ex - kTwo * en + kOne) /
                                     kappa) +
                ES(8) * H2(n + 3, x) - ES(4) * H2(2 * n + 1, x) +
                ES(8) * (ex * ex + ES(3) * ex + ES(3) * en * en - en + kOne) / kappa);
    }
    throw std::domain_error("rhs_family3: weight exponent must be 0, 1, or 2");
}

// ---- integer-shift consequences ----

namespace {

/// First-family correction term A_n(p).
ES corr_a(long n, long p) {
    if (p % 2 == 0) {
        const long q = p / 2;
        const ES u = Hc(2 * q + 2 * n + 1) - Hc(q + n) - Hc(2 * q + 1) + Hc(q);
        return u * (u + kTwo / ES(2 * q + 1));
    }
    const long q = (p - 1) / 2;
    const ES v = Hc(2 * q + 2 * n + 2) - Hc(q + n + 1) - Hc(2 * q + 2) + Hc(q + 1);
    return v * (v - kOne / ES(q + 1));
}

/// Second-family correction term B_n(p).
ES corr_b(long n, long p) {
    if (p % 2 == 0) {
        const long q = p / 2;
        const ES u = Hc(2 * q + 2 * n + 1) - Hc(q + n) - Hc(2 * q + 1) + Hc(q);
        return u * (u - kTwo / ES(n));
    }
    const long q = (p - 1) / 2;
    const ES v = Hc(2 * q + 2 * n + 2) - Hc(q + n + 1) - Hc(2 * q + 2) + Hc(q + 1);
    return v * (v + kTwo / ES(n));
}

/// Third-family correction term C_n(p).
ES corr_c(long n, long p) {
    const ES en(n);
    if (p % 2 == 0) {
        const long q = p / 2;
        const ES eq(q);
        const ES w = Hc(2 * q + 2 * n + 1) - Hc(q + n) - Hc(2 * q) + Hc(q);
        return w * (w + kTwo * (kTwo * eq + en + kOne) *
                            (ES(4) * eq * eq + ES(6) * eq - kTwo * en + kOne) /
                            (en * ES(2 * q + 1) * (kTwo * eq * en + ES(3) * en + kOne)));
    }
    const long q = (p - 1) / 2;
    const ES eq(q);
    const ES z = Hc(2 * q + 2 * n + 2) - Hc(q + n + 1) - Hc(2 * q + 1) + Hc(q);
    return z * (z - (kTwo * eq + en + kTwo) *
                        (ES(4) * eq * eq + ES(10) * eq - kTwo * en + ES(5)) /
                        (en * ES(q + 1) * (kTwo * eq * en + ES(4) * en + kOne)));
}

}  // namespace

ExactScalar rhs_corollary(int family, long t, long n, long p) {
    if (family < 1 || family > 3)
        throw std::domain_error("rhs_corollary: family must be 1, 2, or 3");
    const ES en(n), ep(p);
    if (family == 1) {
        const ParityCase pc = parity_split(n);
        const long m = pc.m;
        if (t == 0) {
            ES brace;
            if (pc.parity == Parity::even)
                brace = kTwo * Hc(2 * m) - Hc(m) + Hc(p + m) - Hc(p);
            else
                brace = Hc(p) - Hc(p + m) + Hc(m) - kTwo * Hc(2 * m + 1);
            return B(ES(2 * p + n), p) * brace;
        }
        if (t == 1) {
            if (n == 0) return kZero;
            ES brace;
            if (pc.parity == Parity::even)
                brace = kTwo * Hc(2 * m) - Hc(m) + Hc(p + m) - Hc(p + 1);
            else
                brace = Hc(m) - kTwo * Hc(2 * m) + Hc(p + 1) - Hc(p + m + 1) -
                        ES(p + 1) / (ES(2 * m + 1) * ES(p + m + 1));
            return en * B(ES(2 * p + n + 1), p + 1) * brace;
        }
        if (t == 2) {
            if (n == 0) return kZero;
            const ES pref = en * (en * en + en + kTwo * ep * en - ep) / (ep + kTwo) *
                            B(ES(2 * p + n + 1), p + 1);
            ES brace;
            if (pc.parity == Parity::even)
                brace = kTwo * Hc(2 * m) - Hc(m) + Hc(p + m) - Hc(p + 2) +
                        (kOne - ep) / (ES(2 * m) * ES(2 * p + 2 * m + 1) - ep);
            else
                brace = Hc(m) - kTwo * Hc(2 * m) + Hc(p + 2) - Hc(p + m + 1) -
                        ES(p + 3) / (ES(2 * m) * ES(2 * p + 2 * m + 3) + ep + kTwo);
            return pref * brace;
        }
        throw std::domain_error("rhs_corollary: weight exponent must be 0, 1, or 2");
    }
    if (family == 2) {
        if (t == 0) {
            return B(ES(p + 2 * n + 1), n) / kTwo *
                   (H2(p + 2 * n + 1, kZero) + H2(p, kZero) - corr_a(n, p) - kOne / sq(ep + kOne));
        }
        if (t == 1) {
            return ES(p + 1) / kTwo * B(ES(p + 2 * n + 1), n - 1) *
                   (H2(p + 2 * n + 1, kZero) + H2(p + 1, kZero) - corr_b(n, p));
        }
        if (t == 2) {
            return ES(p + 1) * (ep * en + ES(3) * en + kOne) / (kTwo * ES(n - 1)) *
                   B(ES(p + 2 * n + 1), n - 2) *
                   (H2(p + 2 * n + 1, kZero) + H2(p, kZero) - corr_c(n, p) +
                    kTwo * (ep * ep + ES(3) * ep + en * en - en + kOne) /
                        (en * (ep + kOne) * (ep * en + ES(3) * en + kOne)));
        }
        throw std::domain_error("rhs_corollary: weight exponent must be 0, 1, or 2");
    }
    // family == 3
    if (t == 0) {
        const ES gap = Hc(p + n + 1) - Hc(p + 2 * n + 1);
        return B(ES(p + 2 * n + 1), n) / kTwo *
               (kTwo * H2(p + n + 1, kZero) - H2(p + 2 * n + 1, kZero) - H2(p + 1, kZero) +
                kTwo * sq(gap) - kTwo * Hc(p) * (kTwo * gap - Hc(p)) - corr_a(n, p));
    }
    if (t == 1) {
        const ES gap = Hc(p + n + 2) - Hc(p + 2 * n + 1);
        return ES(p + 1) / kTwo * B(ES(p + 2 * n + 1), n - 1) *
               (kTwo * H2(p + n + 2, kZero) - H2(p + 2 * n + 1, kZero) - H2(p + 1, kZero) +
                kTwo * sq(gap) - kTwo * Hc(p + 1) * (kTwo * gap - Hc(p + 1)) - corr_b(n, p));
    }
    if (t == 2) {
        const ES gap = Hc(p + n + 3) - Hc(p + 2 * n + 1);
        const ES tail = ep * en + ES(3) * en + kOne;
        return ES(p + 1) * tail / (kTwo * ES(n - 1)) * B(ES(p + 2 * n + 1), n - 2) *
               (kTwo * gap * (gap - kTwo * Hc(p + 1) - kTwo * en / tail) + kTwo * sq(Hc(p)) +
                ES(4) * (kTwo * ep * en + ES(4) * en + kOne) / ((ep + kOne) * tail) * Hc(p) +
                kTwo * (ep * ep + ES(3) * ep + ES(3) * en * en - en + kOne) /
                    (en * (ep + kOne) * tail) +
                kTwo * H2(p + n + 3, kZero) - H2(p + 2 * n + 1, kZero) - H2(p, kZero) -
                corr_c(n, p));
    }
    throw std::domain_error("rhs_corollary: weight exponent must be 0, 1, or 2");
}

// ---- classical specializations ----

ExactScalar rhs_concise(int family, long t, long n) {
    if (family < 1 || family > 3)
        throw std::domain_error("rhs_concise: family must be 1, 2, or 3");
    const ES en(n);
    if (family == 1) {
        const ParityCase pc = parity_split(n);
        const long m = pc.m;
        if (t == 0) {
            if (pc.parity == Parity::even) return kTwo * Hc(2 * m) - Hc(m);
            return Hc(m) - kTwo * Hc(2 * m + 1);
        }
        if (t == 1) {
            if (pc.parity == Parity::even) return ES(4 * m) * (kTwo * Hc(2 * m) - Hc(m));
            return kTwo * ES(2 * m + 1) * (Hc(m) - kTwo * Hc(2 * m + 1)) + kTwo;
        }
        if (t == 2) {
            const ES pref = kTwo * en * (kTwo * en - kOne);
            if (pc.parity == Parity::even)
                return pref * (kTwo * Hc(2 * m) - Hc(m) - kOne / ES(4 * m - 1));
            return pref * (Hc(m) - kTwo * Hc(2 * m) - kOne / ES(4 * m + 1));
        }
        throw std::domain_error("rhs_concise: weight exponent must be 0, 1, or 2");
    }
    if (family == 2) {
        const ES gap = Hc(2 * n + 1) - Hc(n);
        if (t == 0)
            return B(ES(2 * n + 1), n) / kTwo * (H2(2 * n + 1, kZero) - sq(gap));
        if (t == 1)
            return B(ES(2 * n + 1), n - 1) / kTwo *
                   (H2(2 * n + 1, kZero) - kTwo / en - gap * (gap - kTwo - kTwo / en));
        if (t == 2)
            return (ES(3) * en + kOne) / (kTwo * ES(n - 1)) * B(ES(2 * n + 1), n - 2) *
                   (H2(2 * n + 1, kZero) -
                    gap * (gap - kTwo * (en + kOne) * (kTwo * en - kOne) /
                                     (en * (ES(3) * en + kOne))) +
                    kTwo * (en * en - en + kOne) / (en * (ES(3) * en + kOne)));
        throw std::domain_error("rhs_concise: weight exponent must be 0, 1, or 2");
    }
    // family == 3
    if (t == 0) {
        return B(ES(2 * n + 1), n) / kTwo *
               (kTwo * H2(n + 1, kZero) - H2(2 * n + 1, kZero) + kTwo * sq(Hc(n + 1)) -
                sq(Hc(n)) + Hc(2 * n + 1) * (Hc(2 * n + 1) - ES(4) * Hc(n + 1) + kTwo * Hc(n)));
    }
    if (t == 1) {
        const ES gap = Hc(2 * n + 1) - Hc(n + 2);
        return B(ES(2 * n + 1), n - 1) / kTwo *
               (kTwo * H2(n + 2, kZero) - H2(2 * n + 1, kZero) +
                gap * (gap + kTwo * (ES(3) * en * en * en + ES(8) * en * en + ES(6) * en + kTwo) /
                                 (en * (en + kOne) * (en + kTwo))) +
                (kTwo * en * en * en * en + ES(6) * en * en * en + ES(6) * en * en + ES(5) * en +
                 ES(4)) /
                    (en * sq(en + kOne) * sq(en + kTwo)));
    }
    if (t == 2) {
        const ES gap3 = Hc(2 * n + 1) - Hc(n + 3);
        const ES gap0 = Hc(2 * n + 1) - Hc(n);
        return (ES(3) * en + kOne) / (kTwo * ES(n - 1)) * B(ES(2 * n + 1), n - 2) *
               (kTwo * gap3 * (gap3 + (ES(8) * en + kTwo) / (ES(3) * en + kOne)) -
                gap0 * (gap0 - kTwo * (en + kOne) * (kTwo * en - kOne) /
                                   (en * (ES(3) * en + kOne))) +
                kTwo * H2(n + 3, kZero) - H2(2 * n + 1, kZero) +
                kTwo * (ES(3) * en * en - en + kOne) / (en * (ES(3) * en + kOne)));
    }
    throw std::domain_error("rhs_concise: weight exponent must be 0, 1, or 2");
}

// ---- terminating series closed forms ----

ExactScalar rhs_terminating_lemmas(TerminatingVariant v, const ExactScalar& a,
                                   const ExactScalar& b, long n) {
    if (n < 0) throw std::domain_error("rhs_terminating_lemmas: requires n >= 0");
    const ES half(1, 2);
    switch (v) {
        case TerminatingVariant::watson_terminating:
            // ((1+a)/2)_n ((1+b)/2)_n / ((1/2)_n ((1+a+b)/2)_n)
            return P((kOne + a) / kTwo, n) * P((kOne + b) / kTwo, n) /
                   (P(half, n) * P((kOne + a + b) / kTwo, n));
        case TerminatingVariant::lemma_e: {
            const ES den = P(half, n) * P((kTwo + b) / kTwo, n);
            return a / b * P((kTwo + a) / kTwo, n) * P((kOne + b - a) / kTwo, n) / den +
                   (b - a) / b * P((kOne + a) / kTwo, n) * P((kTwo + b - a) / kTwo, n) / den;
        }
        case TerminatingVariant::watson_d: {
            const ES den = P(half, n + 1) * P((kTwo + b) / kTwo, n + 1);
            return (kTwo * a - b + kTwo + ES(2 * n)) / b * P(a / kTwo, n + 1) *
                       P((kOne + b - a) / kTwo, n + 1) / den +
                   (b - kTwo * a + kTwo + ES(2 * n)) / b * P((kOne + a) / kTwo, n + 1) *
                       P((b - a) / kTwo, n + 1) / den;
        }
        case TerminatingVariant::lemma_f: {
            const ES den = P(half, n) * P((ES(4) + b) / kTwo, n);
            const ES common = a * (b - a) / (b * (b + kTwo));
            return common * (kTwo * a - b + ES(2 * n)) * P((kOne + a) / kTwo, n) *
                       P((kTwo + b - a) / kTwo, n) / den +
                   common * (b - kTwo * a + ES(2 * n)) * P((kTwo + a) / kTwo, n) *
                       P((kOne + b - a) / kTwo, n) / den;
        }
        case TerminatingVariant::watson_f: {
            const ES den = P(ES(-1, 2), n + 2) * P((kTwo + b) / kTwo, n + 2);
            const ES np1(n + 1);
            const ES c1 = (a * (kTwo * a - b + np1) - np1 * (b - a + kTwo * ES(n) + ES(4))) /
                          (np1 * (a - kOne) * b);
            const ES c2 = ((b - a) * (b - kTwo * a + np1) - np1 * (a + kTwo * ES(n) + ES(4))) /
                          (np1 * (b - a - kOne) * b);
            return c1 * P((a - kOne) / kTwo, n + 2) * P((b - a) / kTwo, n + 2) / den +
                   c2 * P(a / kTwo, n + 2) * P((b - a - kOne) / kTwo, n + 2) / den;
        }
        case TerminatingVariant::lemma_g: {
            const ES den = P(half, n) * P((ES(4) + b) / kTwo, n + 1);
            const ES en(n);
            const ES theta =
                (kTwo * a * a * a * (kTwo * a - ES(3) * b + kTwo * en) +
                 kTwo * a * a * (b * b - b - ES(3) * b * en - kTwo * en * en + kTwo * en + kTwo) +
                 a * (kTwo * en + kOne) * (b * b - kTwo * b + kTwo * b * en + ES(4) * en)) /
                (b * (b + kTwo));
            const ES amb = a - b;
            const ES omega =
                (amb * amb * amb * (kTwo * a + kOne) +
                 kTwo * amb * amb * (a * a - a * en + en + kOne) -
                 amb * (kTwo * en + kOne) * (a * a - kTwo * a + kTwo * a * en + ES(4) * en)) /
                (b * (b + kTwo));
            return theta * P((kOne + a) / kTwo, n) * P((b - a) / kTwo, n + 1) / den +
                   omega * P(a / kTwo, n + 1) * P((kOne + b - a) / kTwo, n) / den;
        }
    }
    throw std::domain_error("rhs_terminating_lemmas: unknown variant");
}

// ---- exact binomial/harmonic sums ----

ExactScalar rhs_binomial_sums(BinomialSumVariant v, const Binding& binding) {
    const long n = binding_int(binding, "n");
    const ES en(n);
    switch (v) {
        case BinomialSumVariant::watson_c: {
            const ES x = binding_get(binding, "x");
            const ES y = binding_get(binding, "y");
            const ES four_n = pow_int(ES(4), n);
            const ES den = B((y + kTwo) / kTwo + en, n);
            return four_n * (x + kOne) / (y + kTwo) * B((x + kOne) / kTwo + en, n) *
                       B((y - x) / kTwo + en, n) / den +
                   four_n * (y - x + kOne) / (y + kTwo) * B(x / kTwo + en, n) *
                       B((y - x + kOne) / kTwo + en, n) / den;
        }
        case BinomialSumVariant::watson_e: {
            const ES x = binding_get(binding, "x");
            const ES y = binding_get(binding, "y");
            const ES four_n = pow_int(ES(4), n);
            const ES den = B((y + ES(4)) / kTwo + en, n);
            const ES common = four_n * (x + kOne) * (y - x + kOne) / ((y + kTwo) * (y + ES(4)));
            return common * (kTwo * x - y + kTwo * en) * B(x / kTwo + en, n) *
                       B((y - x + kOne) / kTwo + en, n) / den +
                   common * (y - kTwo * x + kTwo * en) * B((x + kOne) / kTwo + en, n) *
                       B((y - x) / kTwo + en, n) / den;
        }
        case BinomialSumVariant::watson_g: {
            const ES x = binding_get(binding, "x");
            const ES y = binding_get(binding, "y");
            const ES four_n = pow_int(ES(4), n);
            const ES den = B((y + ES(6)) / kTwo + en, n + 1);
            const ES delta =
                four_n * (x - y - kOne) / (y + kTwo) *
                (kTwo * x * x * (kTwo * x - ES(3) * y - kTwo * en) +
                 kTwo * x * (y * y - ES(3) * y + y * en - kTwo - kTwo * en * en) +
                 ES(3) * y * y + kTwo * y - ES(4) * en - ES(12) * en * en) /
                (y + ES(4));
            const ES xi =
                four_n * (x + kOne) / (y + kTwo) *
                (kTwo * x * x * (kTwo * x - ES(3) * y + kTwo * en) +
                 kTwo * x * (y * y - ES(3) * y - ES(3) * y * en - kTwo - kTwo * en * en) +
                 (kTwo * en + ES(3)) * y * y + kTwo * (kTwo * en * en + kOne) * y + ES(4) * en +
                 ES(12) * en * en) /
                (y + ES(4));
            return delta * B((x + kOne) / kTwo + en, n + 1) * B((y - x) / kTwo + en, n) / den +
                   xi * B(x / kTwo + en, n) * B((y - x + kOne) / kTwo + en, n + 1) / den;
        }
        case BinomialSumVariant::watson_h: {
            const ES x = binding_get(binding, "x");
            return B(x + ES(2 * n + 1), n);
        }
        case BinomialSumVariant::watson_i: {
            const ES x = binding_get(binding, "x");
            return (x + kOne) * B(x + ES(2 * n + 1), n - 1);
        }
        case BinomialSumVariant::watson_j: {
            const ES x = binding_get(binding, "x");
            return (x + kOne) * (x * en + ES(3) * en + kOne) / ES(n - 1) *
                   B(x + ES(2 * n + 1), n - 2);
        }
        case BinomialSumVariant::harmonic_a: {
            const ES x = binding_get(binding, "x");
            return B(x + ES(2 * n + 1), n) * (H(2 * n + 1, x) - H(n + 1, x));
        }
        case BinomialSumVariant::harmonic_b: {
            const ES x = binding_get(binding, "x");
            return (x + kOne) * B(x + ES(2 * n + 1), n - 1) *
                   (H(2 * n + 1, x) - H(n + 1, x + kOne));
        }
        case BinomialSumVariant::harmonic_c: {
            const ES x = binding_get(binding, "x");
            const ES tail = x * en + ES(3) * en + kOne;
            return (x + kOne) * tail / ES(n - 1) * B(x + ES(2 * n + 1), n - 2) *
                   (H(2 * n + 1, x) - H(n + 2, x + kOne) + en / tail);
        }
        case BinomialSumVariant::vandermonde: {
            const ES x = binding_get(binding, "x");
            const ES y = binding_get(binding, "y");
            return B(x + y, n);
        }
    }
    throw std::domain_error("rhs_binomial_sums: unknown variant");
}

// ---- non-terminating Gamma-ratio right-hand sides ----

namespace {

/// Sum of independently tagged ratio terms: exact when every term is exact.
SideResult combine_terms(const std::vector<RatioValue>& terms) {
    bool all_exact = true;
    for (const auto& t : terms)
        if (!t.is_exact()) all_exact = false;
    if (all_exact) {
        ES sum(0);
        for (const auto& t : terms)
            if (t.kind == RatioValue::Kind::exact) sum += t.exact;
        return SideResult{Value::make_exact(sum), 0};
    }
    double sum = 0.0;
    for (const auto& t : terms) sum += t.as_double();
    return SideResult{Value::make_numeric(sum), 0};
}

}  // namespace

SideResult rhs_nonterminating(NonterminatingVariant v, const Binding& binding,
                              const EvalOptions& opts) {
    const ES a = binding_get(binding, "a");
    const ES b = binding_get(binding, "b");
    const ES c = binding_get(binding, "c");
    const ES half(1, 2);
    const ES kOneL(1), kTwoL(2);
    switch (v) {
        case NonterminatingVariant::watson: {
            GammaRatioSpec spec;
            spec.numerator_args = {half, (kOneL + a + b) / kTwoL, half + c,
                                   (kOneL - a - b) / kTwoL + c};
            spec.denominator_args = {(kOneL + a) / kTwoL, (kOneL + b) / kTwoL,
                                     (kOneL - a) / kTwoL + c, (kOneL - b) / kTwoL + c};
            return combine_terms({eval_ratio(spec)});
        }
        case NonterminatingVariant::lemma_b: {
            const std::vector<ES> num = {half, (kOneL + a + b) / kTwoL, c - half,
                                         c - (kOneL + a + b) / kTwoL};
            GammaRatioSpec t1{num, {a / kTwoL, b / kTwoL, c - a / kTwoL, c - b / kTwoL}, ES(1)};
            GammaRatioSpec t2{num,
                              {(kOneL + a) / kTwoL, (kOneL + b) / kTwoL,
                               c - (kOneL + a) / kTwoL, c - (kOneL + b) / kTwoL},
                              ES(1)};
            return combine_terms({eval_ratio(t1), eval_ratio(t2)});
        }
        case NonterminatingVariant::lemma_c: {
            const std::vector<ES> num = {half, (kOneL + a + b) / kTwoL, c - half,
                                         c - (ES(3) + a + b) / kTwoL};
            GammaRatioSpec t1{num,
                              {(kOneL + a) / kTwoL, (kOneL + b) / kTwoL,
                               c - (kOneL + a) / kTwoL, c - (kOneL + b) / kTwoL},
                              a * b};
            GammaRatioSpec t2{num,
                              {a / kTwoL, b / kTwoL, c - a / kTwoL, c - b / kTwoL},
                              kTwoL * c * c - (a + b + ES(3)) * c + (a + kOneL) * (b + kOneL)};
            return combine_terms({eval_ratio(t1), eval_ratio(t2)});
        }
        case NonterminatingVariant::lemma_d: {
            const std::vector<ES> num = {ES(3, 2), (kOneL + a + b) / kTwoL, c - half,
                                         c - (ES(5) + a + b) / kTwoL};
            const ES phi = a * b * (kTwoL * c * c - (kOneL + a + b) * c +
                                    kTwoL * (a + b + a * b - kOneL));
            const ES psi =
                ES(4) * c * c * c + kTwoL * (a + b + ES(3) * a * b - ES(5)) * c * c -
                (ES(3) * a * a * b + ES(3) * a * b * b + ES(11) * a * b + kTwoL * a * a +
                 kTwoL * a + kTwoL * b * b + kTwoL * b - ES(8)) *
                    c +
                kTwoL * (kOneL + a) * (kOneL + b) * (a + b + a * b - kOneL);
            GammaRatioSpec t1{num,
                              {(kOneL + a) / kTwoL, (kOneL + b) / kTwoL,
                               c - (kOneL + a) / kTwoL, c - (kOneL + b) / kTwoL},
                              phi};
            GammaRatioSpec t2{num, {a / kTwoL, b / kTwoL, c - a / kTwoL, c - b / kTwoL}, psi};
            return combine_terms({eval_ratio(t1), eval_ratio(t2)});
        }
        case NonterminatingVariant::whipple_a:
        case NonterminatingVariant::whipple_b:
        case NonterminatingVariant::whipple_c: {
            const std::vector<ES> num = {c, kOneL + kTwoL * b - c};
            std::vector<RatioValue> parts;
            if (v == NonterminatingVariant::whipple_a) {
                GammaRatioSpec t1{num,
                                  {(a + c) / kTwoL, (kOneL + a - c) / kTwoL + b,
                                   (kOneL - a + c) / kTwoL, (kTwoL - a - c) / kTwoL + b},
                                  ES(1)};
                GammaRatioSpec t2{num,
                                  {(kOneL + a + c) / kTwoL, (kTwoL + a - c) / kTwoL + b,
                                   (c - a) / kTwoL, (kOneL - a - c) / kTwoL + b},
                                  ES(1)};
                parts = {eval_ratio(t1), eval_ratio(t2)};
            } else if (v == NonterminatingVariant::whipple_b) {
                GammaRatioSpec t1{num,
                                  {(kOneL + a + c) / kTwoL, (kTwoL + a - c) / kTwoL + b,
                                   (c - a) / kTwoL, (kOneL - a - c) / kTwoL + b},
                                  ES(1)};
                GammaRatioSpec t2{num,
                                  {(a + c) / kTwoL, (kOneL + a - c) / kTwoL + b,
                                   (kOneL - a + c) / kTwoL, (kTwoL - a - c) / kTwoL + b},
                                  (a * a + a + (kOneL + kTwoL * b - c) * c) /
                                      ((kOneL + a + kTwoL * b - c) * (a + c))};
                parts = {eval_ratio(t1), eval_ratio(t2)};
            } else {
                GammaRatioSpec t1{num,
                                  {(kOneL + a + c) / kTwoL, (kTwoL + a - c) / kTwoL + b,
                                   (c - a) / kTwoL, (kOneL - a - c) / kTwoL + b},
                                  ((kTwoL + a) * (kOneL + a + b) + (kOneL + kTwoL * b - c) * c) /
                                      ((kTwoL + a + kTwoL * b - c) * (kOneL + a + c))};
                GammaRatioSpec t2{num,
                                  {(kTwoL + a + c) / kTwoL, (ES(3) + a - c) / kTwoL + b,
                                   (c - a - kOneL) / kTwoL, b - (a + c) / kTwoL},
                                  (a * (kOneL + a - b) + (kOneL + kTwoL * b - c) * c) /
                                      ((a - kTwoL * b + c) * (kOneL + a - c))};
                parts = {eval_ratio(t1), eval_ratio(t2)};
            }
            // Transcendental prefactor pi / 4^b applies to every term.
            double sum = 0.0;
            for (const auto& p : parts) sum += p.as_double();
            const double factor = M_PI * std::pow(4.0, -b.to_double());
            return SideResult{Value::make_numeric(factor * sum), 0};
        }
        case NonterminatingVariant::kummer: {
            const ES d = binding_get(binding, "d");
            const ES e = binding_get(binding, "e");
            const ES s = d + e - a - b - c;
            GammaRatioSpec ratio{{d, e, s}, {a, d + e - a - b, d + e - a - c}, ES(1)};
            const RatioValue r = eval_ratio(ratio);
            HypergeometricSpec series;
            series.upper = {d - a, e - a, s};
            series.lower = {d + e - a - b, d + e - a - c};
            const double series_tol = std::max(opts.tol * 1e-4, 1e-14);
            const NumericSum ns = eval_numeric(series, series_tol, opts.max_terms);
            return SideResult{Value::make_numeric(r.as_double() * ns.value), ns.terms_used};
        }
        case NonterminatingVariant::watson_a: {
            const std::vector<ES> num = {half, (kOneL + a + b) / kTwoL, c - half,
                                         c - (ES(3) + a + b) / kTwoL};
            GammaRatioSpec t1{num,
                              {a / kTwoL, b / kTwoL, c - (kTwoL + a) / kTwoL,
                               c - (kTwoL + b) / kTwoL},
                              kTwoL / (c - kOneL)};
            GammaRatioSpec t2{num,
                              {(kOneL + a) / kTwoL, (kOneL + b) / kTwoL,
                               c - (kOneL + a) / kTwoL, c - (kOneL + b) / kTwoL},
                              (kTwoL * c * c - (a + b + ES(5)) * c + a * b + a + b + ES(3)) /
                                  (kTwoL * (c - kOneL))};
            return combine_terms({eval_ratio(t1), eval_ratio(t2)});
        }
        case NonterminatingVariant::watson_b: {
            const ES coef1 =
                kOneL + ES(3) * a * b * (c - ES(3)) /
                            ((c - kOneL) * (kTwoL * c - a - ES(5)) * (kTwoL * c - b - ES(5)));
            GammaRatioSpec t1{{half, (kOneL + a + b) / kTwoL, c - ES(5, 2),
                               c - (ES(5) + a + b) / kTwoL},
                              {(kOneL + a) / kTwoL, (kOneL + b) / kTwoL,
                               c - (ES(5) + a) / kTwoL, c - (ES(5) + b) / kTwoL},
                              coef1};
            const ES coef2 =
                kTwoL *
                (ES(6) * c * c - ES(3) * c * (a + b + ES(7)) + kTwoL * a * b + ES(5) * a +
                 ES(5) * b + ES(17)) /
                ((c - kOneL) * (kTwoL * c - a - ES(4)) * (kTwoL * c - b - ES(4)));
            GammaRatioSpec t2{{half, (kOneL + a + b) / kTwoL, c - ES(3, 2),
                               c - (ES(5) + a + b) / kTwoL},
                              {a / kTwoL, b / kTwoL, c - (ES(4) + a) / kTwoL,
                               c - (ES(4) + b) / kTwoL},
                              coef2};
            return combine_terms({eval_ratio(t1), eval_ratio(t2)});
        }
    }
    throw std::domain_error("rhs_nonterminating: unknown variant");
}

}  // namespace hwsum
