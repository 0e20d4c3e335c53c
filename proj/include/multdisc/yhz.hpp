#pragma once

// The repeated-subresultant multiplicity condition used as the comparison
// baseline: the chain G_0 = F, G_i = S_{s_i}(G_{i-1}, G_{i-1}') with
// s_i = sum_j max(mu_j - i, 0), and the principal coefficients it produces.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "multdisc/partition.hpp"
#include "multdisc/poly.hpp"
#include "multdisc/scalar.hpp"
#include "multdisc/subresultant.hpp"
#include "multdisc/sympoly.hpp"

namespace multdisc {

/// s_1 .. s_{mu_1}; element i-1 holds s_i.
std::vector<std::size_t> s_sequence(const Partition& mu);

/// #{k : mu_k > j}.
std::size_t parts_above(const Partition& mu, std::size_t j);

/// 1 + sum C(mu_i - 1, 2).
Integer yhz_count(const Partition& mu);

/// Closed-form maximal total degree of the condition polynomials. Needs m >= 2.
Integer yhz_degree(const Partition& mu);

/// 2n + 3^mu2 - 4 mu2.
Integer yhz_degree_lower_bound(std::size_t n, std::size_t mu2);

template <class R>
struct YhzCondition {
    Partition mu;
    /// G_0 .. G_{mu_1-1} as formal coefficient vectors (x^{s_i} first, leading entries may vanish).
    std::vector<std::vector<R>> chain;
    std::vector<std::size_t> s;
    std::vector<R> equations;
    R inequation;

    /// All equations vanish and the inequation does not.
    bool holds() const {
        for (const auto& e : equations)
            if (!detail::coefficient_is_zero(e)) return false;
        return !detail::coefficient_is_zero(inequation);
    }
};

/// Builds the chain and collects the coefficient of x^j in S_j(G_i) for
/// i = 1..mu_1-2, j = 0..s_{i+1}-1, plus the inequation S_0(G_{mu_1-1})-bar.
/// Subresultants are taken by their determinant definition on formal
/// degrees, so a numeric evaluation is the specialization of the symbolic one.
template <class R>
YhzCondition<R> yhz_condition(const Poly<R>& f, const Partition& mu) {
    if (f.is_zero()) fail(Errc::zero_polynomial, "YHZ condition of the zero polynomial");
    const std::size_t n = f.degree().value();
    if (static_cast<std::size_t>(mu.total()) != n)
        fail(Errc::degree_mismatch, "deg F = " + std::to_string(n) + " but " + mu.bracketed() + " sums to " +
                                        std::to_string(mu.total()));
    if (mu.largest() < 2) fail(Errc::precondition, "the YHZ chain needs mu_1 >= 2");

    constexpr bool symbolic = std::is_same_v<R, SymPoly>;
    YhzCondition<R> out;
    out.mu = mu;
    out.s = s_sequence(mu);
    const auto top = static_cast<std::size_t>(mu.largest());

    auto principal = [](const std::vector<R>& g, std::size_t k) {
        const auto deriv = formal_derivative(std::span<const R>(g));
        return subresultant_by_determinant<R>(std::span<const R>(g), std::span<const R>(deriv), k).front();
    };

    out.chain.emplace_back(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t i = 1; i < top; ++i) {
        const auto& prev = out.chain.back();
        const auto deriv = formal_derivative(std::span<const R>(prev));
        auto next = subresultant_by_determinant<R>(std::span<const R>(prev), std::span<const R>(deriv), out.s[i - 1]);
        if constexpr (symbolic) {
            bool all_zero = true;
            for (const auto& c : next) all_zero = all_zero && c.is_zero();
            if (all_zero)
                fail(Errc::chain_degenerate, "G_" + std::to_string(i) + " is identically zero for " + mu.bracketed());
        }
        out.chain.push_back(std::move(next));
    }
    for (std::size_t i = 1; i + 1 < top; ++i)
        for (std::size_t j = 0; j < out.s[i]; ++j) out.equations.push_back(principal(out.chain[i], j));
    out.inequation = principal(out.chain[top - 1], 0);
    return out;
}

YhzCondition<SymPoly> yhz_condition_symbolic(std::size_t n, const Partition& mu);

/// Largest total degree among the equations and the inequation.
std::optional<unsigned> yhz_max_degree(const YhzCondition<SymPoly>& condition);

}  // namespace multdisc
