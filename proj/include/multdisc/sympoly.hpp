#pragma once

// Sparse multivariate polynomials over the integers in the coefficient
// indeterminates a0, a1, ..., a15.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multdisc/scalar.hpp"

namespace multdisc {

inline constexpr std::size_t kMaxIndeterminates = 16;

/// Exponent vector over a0..a15; each exponent fits in a byte.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(std::size_t index, unsigned exponent = 1);

    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned total_degree() const;
    bool is_one() const;

    /// Throws CapExceeded if any exponent would exceed 255.
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    bool divides(const Monomial& other) const;
    /// this / divisor; requires divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

    /// Graded lexicographic order with a0 > a1 > ... .
    friend bool graded_lex_greater(const Monomial& a, const Monomial& b);

    std::size_t hash() const;
    std::string to_string() const;

private:
    std::array<std::uint8_t, kMaxIndeterminates> exps_{};
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class SymPoly {
public:
    using Term = std::pair<Monomial, Integer>;

    SymPoly() = default;
    SymPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
    SymPoly(long c) : SymPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
    SymPoly(int c) : SymPoly(Integer(c)) {}   // NOLINT(google-explicit-constructor)

    /// The indeterminate a_index.
    static SymPoly variable(std::size_t index);
    static SymPoly from_terms(std::vector<Term> terms);
    /// Inverse of to_string(); also accepts explicit "1*" coefficients and "^1" exponents.
    static SymPoly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Terms in graded-lex descending order.
    const std::vector<Term>& terms() const { return terms_; }

    std::optional<unsigned> total_degree() const;
    unsigned degree_in(std::size_t index) const;
    /// True for the zero polynomial too.
    bool is_homogeneous() const;

    Integer evaluate(std::span<const Integer> values) const;

    SymPoly& operator+=(const SymPoly& rhs);
    SymPoly& operator-=(const SymPoly& rhs);
    SymPoly& operator*=(const SymPoly& rhs);
    friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    SymPoly operator-() const;

    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract);

    std::vector<Term> terms_;
};

inline bool is_zero(const SymPoly& p) { return p.is_zero(); }
inline std::string to_string(const SymPoly& p) { return p.to_string(); }

/// Exact quotient a / b; throws NonExactDivision when b does not divide a.
SymPoly exact_div(const SymPoly& a, const SymPoly& b);

}  // namespace multdisc
