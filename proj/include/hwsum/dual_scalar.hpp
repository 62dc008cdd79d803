/**
 * @file dual_scalar.hpp
 * @brief Exact forward-mode differentiation on rational dual numbers.
 *
 * A DualScalar carries (value, deriv) and propagates derivatives through
 * +, -, *, / by the usual first-order Taylor rules, entirely in exact
 * arithmetic. Division checks the divisor's value field and throws
 * std::domain_error on zero.
 */
#pragma once

#include "hwsum/exact_scalar.hpp"

namespace hwsum {

struct DualScalar {
    ExactScalar value;
    ExactScalar deriv;

    DualScalar() : value(0), deriv(0) {}
    DualScalar(ExactScalar v, ExactScalar d) : value(std::move(v)), deriv(std::move(d)) {}

    /// A constant c: derivative 0.
    static DualScalar constant(ExactScalar c) { return DualScalar(std::move(c), ExactScalar(0)); }

    /// The evaluation variable seeded at x0: derivative 1.
    static DualScalar variable(ExactScalar x0) { return DualScalar(std::move(x0), ExactScalar(1)); }

    DualScalar operator-() const { return DualScalar(-value, -deriv); }

    DualScalar& operator+=(const DualScalar& o) {
        value += o.value;
        deriv += o.deriv;
        return *this;
    }
    DualScalar& operator-=(const DualScalar& o) {
        value -= o.value;
        deriv -= o.deriv;
        return *this;
    }
    DualScalar& operator*=(const DualScalar& o) {
        deriv = deriv * o.value + value * o.deriv;
        value *= o.value;
        return *this;
    }
    DualScalar& operator/=(const DualScalar& o) {
        if (o.value.is_zero()) throw std::domain_error("DualScalar: division by zero value");
        // (u/v)' = (u' v - u v') / v^2
        deriv = (deriv * o.value - value * o.deriv) / (o.value * o.value);
        value /= o.value;
        return *this;
    }

    friend DualScalar operator+(DualScalar a, const DualScalar& b) { a += b; return a; }
    friend DualScalar operator-(DualScalar a, const DualScalar& b) { a -= b; return a; }
    friend DualScalar operator*(DualScalar a, const DualScalar& b) { a *= b; return a; }
    friend DualScalar operator/(DualScalar a, const DualScalar& b) { a /= b; return a; }

    friend bool operator==(const DualScalar& a, const DualScalar& b) {
        return a.value == b.value && a.deriv == b.deriv;
    }
    friend bool operator!=(const DualScalar& a, const DualScalar& b) { return !(a == b); }
};

}  // namespace hwsum
