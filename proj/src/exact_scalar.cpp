/**
 * @file exact_scalar.cpp
 * @brief Parsing, printing, and integer-power helpers for ExactScalar.
 */
#include "hwsum/exact_scalar.hpp"

#include <cctype>
#include <ostream>

namespace hwsum {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

ExactScalar ExactScalar::from_string(const std::string& text) {
    std::string s = text;
    // trim surrounding whitespace
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::domain_error("ExactScalar: empty literal");
    s = s.substr(first, last - first + 1);

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }

    std::string num = s, den = "1";
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw std::domain_error("ExactScalar: malformed rational literal '" + text + "'");

    mpz_class n(num), d(den);
    if (d == 0) throw std::domain_error("ExactScalar: zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return ExactScalar(std::move(q));
}

long ExactScalar::to_long() const {
    if (!is_integer()) throw std::domain_error("ExactScalar: to_long on non-integer");
    mpz_class n = numerator();
    if (!n.fits_slong_p()) throw std::domain_error("ExactScalar: to_long overflow");
    return n.get_si();
}

std::string ExactScalar::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

ExactScalar pow_int(const ExactScalar& x, long e) {
    if (e == 0) return ExactScalar(1);
    if (e < 0) {
        if (x.is_zero()) throw std::domain_error("ExactScalar: zero to a negative power");
        return ExactScalar(1) / pow_int(x, -e);
    }
    ExactScalar acc(1), base(x);
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

}  // namespace hwsum
