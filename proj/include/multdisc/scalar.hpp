#pragma once

// Exact scalars: arbitrary-precision integers and reduced rationals.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

#include "multdisc/errors.hpp"

namespace multdisc {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }

/// Quotient a / b in the integers; throws NonExactDivision when b does not divide a.
Integer exact_div(const Integer& a, const Integer& b);

Integer factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);
Integer pow(const Integer& base, unsigned long exp);

std::string to_string(const Integer& a);

/// Integer or rational value. Rationals are kept reduced with positive
/// denominator, and a rational whose denominator is 1 is stored as an integer.
class ExactScalar {
public:
    ExactScalar() : value_(Integer(0)) {}
    ExactScalar(long v) : value_(Integer(v)) {}  // NOLINT(google-explicit-constructor)
    ExactScalar(int v) : value_(Integer(v)) {}   // NOLINT(google-explicit-constructor)
    ExactScalar(Integer v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    ExactScalar(const Rational& q);               // NOLINT(google-explicit-constructor)
    ExactScalar(const Integer& num, const Integer& den);

    /// Accepts "12", "-7", "3/4", "-10/6" (reduced on construction).
    static ExactScalar parse(std::string_view text);

    bool is_integer() const { return std::holds_alternative<Integer>(value_); }
    bool is_zero() const;
    int sign() const;

    /// Throws Errc::precondition if the value is not an integer.
    const Integer& as_integer() const;
    Rational as_rational() const;
    Integer numerator() const;
    Integer denominator() const;

    ExactScalar& operator+=(const ExactScalar& rhs);
    ExactScalar& operator-=(const ExactScalar& rhs);
    ExactScalar& operator*=(const ExactScalar& rhs);
    ExactScalar& operator/=(const ExactScalar& rhs);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    ExactScalar operator-() const;

    friend bool operator==(const ExactScalar& a, const ExactScalar& b);
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }
    friend bool operator<(const ExactScalar& a, const ExactScalar& b);

    std::string to_string() const;

private:
    static std::variant<Integer, Rational> normalize(Rational q);

    std::variant<Integer, Rational> value_;
};

inline bool is_zero(const ExactScalar& a) { return a.is_zero(); }
inline std::string to_string(const ExactScalar& a) { return a.to_string(); }

}  // namespace multdisc

namespace multdisc {

/// Field division; exists so that ring-generic kernels also run over rationals.
inline ExactScalar exact_div(const ExactScalar& a, const ExactScalar& b) { return a / b; }

}  // namespace multdisc
