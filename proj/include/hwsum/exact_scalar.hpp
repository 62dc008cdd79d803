/**
 * @file exact_scalar.hpp
 * @brief Arbitrary-precision rational scalar backed by GMP's mpq_class.
 *
 * Key design decisions:
 *   - every value is kept canonical at all times: lowest terms, denominator > 0;
 *   - construction from a numerator/denominator pair canonicalizes eagerly;
 *   - division by zero throws std::domain_error instead of producing a poison value;
 *   - only exact sources are accepted (integers, rational strings); there is no
 *     constructor from floating point.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace hwsum {

class ExactScalar {
public:
    // ---- constructors ----

    ExactScalar() : v_(0) {}
    ExactScalar(int n) : v_(n) {}
    ExactScalar(long n) : v_(static_cast<signed long>(n)) {}
    ExactScalar(long long n) : v_(from_long_long(n)) {}

    ExactScalar(long num, long den) : v_(make_canonical(mpq_class(num, den))) {}

    explicit ExactScalar(const mpz_class& z) : v_(z) {}
    explicit ExactScalar(mpq_class q) : v_(make_canonical(std::move(q))) {}

    /// Parses "p", "-p", "p/q", "-p/q" (optional '+' sign, arbitrary magnitude).
    /// Rejects anything else — in particular decimal or exponent notation.
    static ExactScalar from_string(const std::string& text);

    // ---- observers ----

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }

    /// Exact conversion to long; throws std::domain_error unless the value is an
    /// integer that fits.
    long to_long() const;

    /// Nearest double (GMP rounding); intended for reporting and numeric modes.
    double to_double() const { return v_.get_d(); }

    /// Canonical text form: "p" for integers, "p/q" otherwise.
    std::string str() const;

    // ---- arithmetic ----

    ExactScalar operator-() const { return ExactScalar(mpq_class(-v_)); }

    ExactScalar& operator+=(const ExactScalar& o) { v_ += o.v_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { v_ -= o.v_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { v_ *= o.v_; return *this; }
    ExactScalar& operator/=(const ExactScalar& o) {
        if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { a += b; return a; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { a -= b; return a; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { a *= b; return a; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { a /= b; return a; }

    // ---- comparisons ----

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const ExactScalar& a, const ExactScalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const ExactScalar& a, const ExactScalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const ExactScalar& a, const ExactScalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const ExactScalar& a, const ExactScalar& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

private:
    static mpq_class make_canonical(mpq_class q) {
        if (q.get_den() == 0) throw std::domain_error("ExactScalar: zero denominator");
        q.canonicalize();
        return q;
    }
    static mpq_class from_long_long(long long n) {
        if (n >= 0) {
            mpz_class z;
            mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
            return mpq_class(z);
        }
        unsigned long long mag = -static_cast<unsigned long long>(n);
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
        return mpq_class(-z);
    }

    mpq_class v_;
};

// ---- free helpers ----

/// x^e for integer e; e < 0 inverts (throws on zero base), x^0 == 1.
ExactScalar pow_int(const ExactScalar& x, long e);

/// Absolute value.
inline ExactScalar abs(const ExactScalar& x) { return x.is_negative() ? -x : x; }

}  // namespace hwsum
