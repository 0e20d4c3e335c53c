#pragma once

// Subresultants S_k(G, G') of a polynomial and its derivative.
//
// Two independent routes are provided: the determinant definition over
// Sylvester submatrices (works on formal coefficient vectors whose leading
// entry may vanish, and is the route used for symbolic coefficients), and a
// subresultant polynomial remainder sequence that produces the whole chain at
// once (the route used for integer coefficients).

#include <cstddef>
#include <map>
#include <span>
#include <type_traits>
#include <vector>

#include "multdisc/matrix.hpp"
#include "multdisc/poly.hpp"

namespace multdisc {

/// Formal derivative of a descending coefficient vector (formal degree = size - 1).
template <class R>
std::vector<R> formal_derivative(std::span<const R> coeffs) {
    std::vector<R> out;
    if (coeffs.size() <= 1) return out;
    const std::size_t d = coeffs.size() - 1;
    out.reserve(d);
    for (std::size_t i = 0; i < d; ++i) out.push_back(R(Integer(static_cast<unsigned long>(d - i))) * coeffs[i]);
    return out;
}

/// k-th subresultant of P and Q (formal degrees p = |P|-1 > q = |Q|-1, k <= q)
/// by the determinant definition. Returns k+1 coefficients, x^k first.
template <class R>
std::vector<R> subresultant_by_determinant(std::span<const R> p_coeffs, std::span<const R> q_coeffs, std::size_t k) {
    if (p_coeffs.empty() || q_coeffs.empty()) fail(Errc::degree_out_of_range, "empty coefficient vector");
    const std::size_t p = p_coeffs.size() - 1;
    const std::size_t q = q_coeffs.size() - 1;
    if (q >= p || k > q) fail(Errc::degree_out_of_range, "subresultant index out of range");
    const std::size_t width = p + q - k;
    const std::size_t rows = p + q - 2 * k;
    Matrix<R> sylvester(rows, width);
    std::size_t r = 0;
    for (std::size_t s = 0; s < q - k; ++s, ++r)
        for (std::size_t c = 0; c <= p; ++c) sylvester(r, s + c) = p_coeffs[c];
    for (std::size_t s = 0; s < p - k; ++s, ++r)
        for (std::size_t c = 0; c <= q; ++c) sylvester(r, s + c) = q_coeffs[c];

    std::vector<R> out;
    out.reserve(k + 1);
    for (std::size_t j = k + 1; j-- > 0;) {
        // Leading rows-1 columns plus the column of x^j.
        Matrix<R> sub(rows, rows);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t c = 0; c + 1 < rows; ++c) sub(i, c) = sylvester(i, c);
            sub(i, rows - 1) = sylvester(i, width - 1 - j);
        }
        out.push_back(det(sub));
    }
    return out;
}

/// S_k(G, G') by the determinant definition, treating G as having its actual degree.
template <class R>
Poly<R> subresultant_by_determinant(const Poly<R>& g, std::size_t k) {
    if (g.is_zero() || g.degree().value() < 1 || k >= g.degree().value())
        fail(Errc::degree_out_of_range, "S_k(G, G') needs 0 <= k < deg G");
    const auto deriv = formal_derivative(g.coeffs());
    return Poly<R>(subresultant_by_determinant<R>(g.coeffs(), std::span<const R>(deriv), k));
}

/// Sylvester matrix of P (degree p) and Q (degree q): q shifted rows of P over p shifted rows of Q.
template <class R>
Matrix<R> sylvester_matrix(const Poly<R>& p_poly, const Poly<R>& q_poly) {
    if (p_poly.is_zero() || q_poly.is_zero()) fail(Errc::zero_polynomial, "Sylvester matrix of a zero polynomial");
    const std::size_t p = p_poly.degree().value();
    const std::size_t q = q_poly.degree().value();
    Matrix<R> m(p + q, p + q);
    for (std::size_t s = 0; s < q; ++s)
        for (std::size_t c = 0; c <= p; ++c) m(s, s + c) = p_poly.coeffs()[c];
    for (std::size_t s = 0; s < p; ++s)
        for (std::size_t c = 0; c <= q; ++c) m(q + s, s + c) = q_poly.coeffs()[c];
    return m;
}

/// res(P, Q) as the determinant of the Sylvester matrix.
template <class R>
R resultant(const Poly<R>& p_poly, const Poly<R>& q_poly) {
    return det(sylvester_matrix(p_poly, q_poly));
}

namespace detail {

/// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B. Returns the remainder and the exponent used.
template <class R>
std::pair<Poly<R>, std::size_t> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
    if (a.is_zero()) return {a, 0};
    const std::size_t da = a.degree().value();
    const std::size_t db = b.degree().value();
    if (da < db) return {a, 0};
    std::vector<R> rem(a.coeffs().begin(), a.coeffs().end());
    const R& lead = b.leading();
    for (std::size_t i = 0; i + db <= da; ++i) {
        const R factor = rem[i];
        for (auto& c : rem) c = c * lead;
        for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= factor * b.coeffs()[j];
    }
    return {Poly<R>(std::move(rem)), da - db + 1};
}

template <class R>
Poly<R> divide_coefficients(const Poly<R>& p, const R& d) {
    std::vector<R> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(exact_div(c, d));
    return Poly<R>(std::move(out));
}

template <class R>
R power(const R& base, std::size_t e) {
    R r(1);
    for (std::size_t i = 0; i < e; ++i) r = r * base;
    return r;
}

}  // namespace detail

/// All subresultants S_0 .. S_{n-1} of (G, G'), n = deg G >= 1, by the
/// subresultant remainder sequence (signed chain, converted to the standard
/// sign convention). Entry k is S_k, possibly zero.
template <class R>
std::vector<Poly<R>> subresultant_chain(const Poly<R>& g) {
    if (g.is_zero() || g.degree().value() < 1) fail(Errc::degree_out_of_range, "subresultant chain needs deg G >= 1");
    const auto n = static_cast<long>(g.degree().value());
    std::map<long, Poly<R>> sres;
    std::map<long, R> s;
    std::map<long, R> t;
    sres[n] = g;
    sres[n - 1] = g.derivative();
    s[n] = R(1);
    t[n] = R(1);
    t[n - 1] = sres[n - 1].leading();
    long i = n + 1;
    long j = n;
    while (!sres[j - 1].is_zero()) {
        const auto k = static_cast<long>(sres[j - 1].degree().value());
        const Poly<R>& prev = sres[j - 1];
        if (k == j - 1) {
            s[j - 1] = t[j - 1];
            if (k == 0) break;
            auto [rem, e] = detail::pseudo_remainder(R(s[j - 1] * s[j - 1]) * sres[i - 1], prev);
            R denom = detail::power(prev.leading(), e);
            denom = denom * s[j];
            denom = denom * t[i - 1];
            sres[k - 1] = -detail::divide_coefficients(rem, denom);
        } else {
            s[j - 1] = R(0);
            for (long l = k + 1; l < j - 1; ++l) {
                sres[l] = Poly<R>();
                s[l] = R(0);
            }
            const long gap = j - k;
            R sk = exact_div(detail::power(t[j - 1], static_cast<std::size_t>(gap)),
                             detail::power(s[j], static_cast<std::size_t>(gap - 1)));
            if (((gap * (gap - 1)) / 2) % 2 != 0) sk = -sk;
            s[k] = sk;
            sres[k] = detail::divide_coefficients(sk * prev, t[j - 1]);
            if (k == 0) break;
            auto [rem, e] = detail::pseudo_remainder(R(t[j - 1] * s[k]) * sres[i - 1], prev);
            R denom = detail::power(prev.leading(), e);
            denom = denom * s[j];
            denom = denom * t[i - 1];
            sres[k - 1] = -detail::divide_coefficients(rem, denom);
        }
        t[k - 1] = sres[k - 1].is_zero() ? R(0) : sres[k - 1].leading();
        i = j;
        j = k;
    }
    std::vector<Poly<R>> chain(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) {
        auto it = sres.find(k);
        if (it == sres.end() || it->second.is_zero()) continue;
        const long d = n - k;
        chain[static_cast<std::size_t>(k)] = ((d * (d - 1)) / 2) % 2 == 0 ? it->second : -it->second;
    }
    return chain;
}

/// S_k(G, G'). Integer and rational coefficients go through the remainder
/// sequence; symbolic coefficients through the determinant definition.
template <class R>
Poly<R> subresultant(const Poly<R>& g, std::size_t k) {
    if (g.is_zero() || g.degree().value() < 1 || k >= g.degree().value())
        fail(Errc::degree_out_of_range, "S_k(G, G') needs 0 <= k < deg G");
    if constexpr (std::is_same_v<R, SymPoly>) {
        return subresultant_by_determinant(g, k);
    } else {
        return subresultant_chain(g)[k];
    }
}

/// Coefficient of x^k in S_k(G, G'), for k = 0 .. deg G - 1.
template <class R>
std::vector<R> principal_subresultant_coefficients(const Poly<R>& g) {
    const auto chain = subresultant_chain(g);
    std::vector<R> out;
    out.reserve(chain.size());
    for (std::size_t k = 0; k < chain.size(); ++k) out.push_back(chain[k].coeff(k));
    return out;
}

/// Same values through the determinant definition; the cross-check route.
template <class R>
std::vector<R> principal_subresultant_coefficients_by_determinant(const Poly<R>& g) {
    if (g.is_zero() || g.degree().value() < 1) fail(Errc::degree_out_of_range, "needs deg G >= 1");
    const std::size_t n = g.degree().value();
    const auto deriv = formal_derivative(g.coeffs());
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(subresultant_by_determinant<R>(g.coeffs(), std::span<const R>(deriv), k).front());
    return out;
}

}  // namespace multdisc
