#pragma once

// Dense univariate polynomials in x over an exact ring R, stored with
// descending powers: coeffs()[0] is the leading coefficient.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multdisc/errors.hpp"
#include "multdisc/scalar.hpp"
#include "multdisc/sympoly.hpp"

namespace multdisc {

/// Degree of a univariate polynomial; the zero polynomial has degree minus infinity.
class Degree {
public:
    static constexpr Degree minus_infinity() { return Degree(); }
    constexpr explicit Degree(std::size_t d) : finite_(true), value_(d) {}

    constexpr bool is_minus_infinity() const { return !finite_; }
    std::size_t value() const {
        if (!finite_) fail(Errc::zero_polynomial, "degree of the zero polynomial");
        return value_;
    }

    friend constexpr bool operator==(Degree a, Degree b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator<(Degree a, Degree b) {
        if (!a.finite_) return b.finite_;
        return b.finite_ && a.value_ < b.value_;
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

private:
    constexpr Degree() = default;
    bool finite_ = false;
    std::size_t value_ = 0;
};

namespace detail {
template <class R>
bool coefficient_is_zero(const R& c) {
    return ::multdisc::is_zero(c);
}
}  // namespace detail

template <class R>
class Poly {
public:
    using coefficient_type = R;

    Poly() = default;
    /// Leading zeros are stripped.
    explicit Poly(std::vector<R> descending) : coeffs_(std::move(descending)) { strip(); }

    static Poly constant(R c) { return Poly(std::vector<R>{std::move(c)}); }
    static Poly monomial(R c, std::size_t power) {
        std::vector<R> v(power + 1, R(0));
        v.front() = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    Degree degree() const { return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1); }
    std::span<const R> coeffs() const { return coeffs_; }
    const R& leading() const {
        if (coeffs_.empty()) fail(Errc::zero_polynomial, "leading coefficient of the zero polynomial");
        return coeffs_.front();
    }
    /// Coefficient of x^power (zero beyond the degree).
    R coeff(std::size_t power) const {
        if (power >= coeffs_.size()) return R(0);
        return coeffs_[coeffs_.size() - 1 - power];
    }

    Poly& operator+=(const Poly& rhs) { return accumulate(rhs, false); }
    Poly& operator-=(const Poly& rhs) { return accumulate(rhs, true); }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::coefficient_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }
    friend Poly operator*(const R& s, const Poly& p) {
        std::vector<R> out;
        out.reserve(p.coeffs_.size());
        for (const auto& c : p.coeffs_) out.push_back(s * c);
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// The ordinary derivative.
    Poly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<R> out;
        const std::size_t n = coeffs_.size() - 1;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(R(Integer(static_cast<unsigned long>(n - i))) * coeffs_[i]);
        return Poly(std::move(out));
    }

private:
    void strip() {
        auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const R& c) { return !detail::coefficient_is_zero(c); });
        coeffs_.erase(coeffs_.begin(), first);
    }

    Poly& accumulate(const Poly& rhs, bool subtract) {
        if (rhs.coeffs_.size() > coeffs_.size())
            coeffs_.insert(coeffs_.begin(), rhs.coeffs_.size() - coeffs_.size(), R(0));
        const std::size_t offset = coeffs_.size() - rhs.coeffs_.size();
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            if (subtract)
                coeffs_[offset + i] -= rhs.coeffs_[i];
            else
                coeffs_[offset + i] += rhs.coeffs_[i];
        }
        strip();
        return *this;
    }

    std::vector<R> coeffs_;
};

using IntPoly = Poly<Integer>;
using UniPoly = Poly<ExactScalar>;
using SymUniPoly = Poly<SymPoly>;

/// F^(k) / k!: the coefficient of x^(j-k) is C(j, k) times the coefficient of x^j.
/// Stays in the coefficient ring.
template <class R>
Poly<R> taylor_derivative(const Poly<R>& p, std::size_t k) {
    if (p.is_zero() || k > p.degree().value()) return {};
    const std::size_t n = p.degree().value();
    std::vector<R> out;
    out.reserve(n - k + 1);
    for (std::size_t i = 0; i + k <= n; ++i) {
        const auto j = static_cast<unsigned>(n - i);  // power of x in p
        out.push_back(R(binomial(j, static_cast<unsigned>(k))) * p.coeffs()[i]);
    }
    return Poly<R>(std::move(out));
}

/// x^k * P.
template <class R>
Poly<R> shift_mul(const Poly<R>& p, std::size_t k) {
    if (p.is_zero()) return {};
    std::vector<R> out(p.coeffs().begin(), p.coeffs().end());
    out.resize(out.size() + k, R(0));
    return Poly<R>(std::move(out));
}

/// Horner evaluation.
template <class R, class S>
S poly_eval(const Poly<R>& p, const S& x) {
    S acc(0);
    for (const auto& c : p.coeffs()) acc = acc * x + S(c);
    return acc;
}

/// Exact quotient in R[x]; throws NonExactDivision on a nonzero remainder.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) fail(Errc::non_exact_division, "division by the zero polynomial");
    if (a.is_zero()) return {};
    const std::size_t da = a.degree().value();
    const std::size_t db = b.degree().value();
    if (da < db) fail(Errc::non_exact_division, "divisor degree exceeds dividend degree");
    std::vector<R> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<R> quot(da - db + 1, R(0));
    for (std::size_t i = 0; i + db <= da; ++i) {
        if (is_zero(rem[i])) continue;
        quot[i] = exact_div(rem[i], b.leading());
        for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= quot[i] * b.coeffs()[j];
    }
    for (const auto& r : rem)
        if (!is_zero(r)) fail(Errc::non_exact_division, "nonzero remainder in polynomial division");
    return Poly<R>(std::move(quot));
}

template <class R>
std::string to_string(const Poly<R>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i != 0) out += ',';
        out += to_string(p.coeffs()[i]);
    }
    return out;
}

/// Splits "1,-1,-3,5,-2" into scalars, keeping any leading zeros.
std::vector<ExactScalar> parse_coefficients(std::string_view text);

/// Parses a coefficient list; a zero leading coefficient is a LeadingZero error.
UniPoly parse_unipoly(std::string_view text);

/// Multiplies by the lcm of the denominators; returns the integer polynomial and that lcm.
std::pair<IntPoly, Integer> clear_denominators(const UniPoly& p);

UniPoly to_unipoly(const IntPoly& p);

/// a0 x^n + a1 x^(n-1) + ... + an with the coefficients as indeterminates.
SymUniPoly symbolic_polynomial(std::size_t n);

/// Substitutes integer values for a0..an in every coefficient.
IntPoly specialize(const SymUniPoly& p, std::span<const Integer> values);

}  // namespace multdisc
