#pragma once

// Ground truth built from prescribed roots: polynomials with a known
// multiplicity structure, the root-side permanental discriminant, and
// checkers for the determinant-permanent and dp-ratio identities.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "multdisc/matrix.hpp"
#include "multdisc/partition.hpp"
#include "multdisc/poly.hpp"
#include "multdisc/scalar.hpp"

namespace multdisc {

struct RootSpec {
    std::vector<ExactScalar> roots;
    std::vector<int> mults;
    ExactScalar lead{1};

    /// Throws DuplicateRoots, ZeroLead or Precondition.
    void validate() const;
    std::size_t degree() const;
    /// Multiplicities sorted descending.
    Partition structure() const;
    /// alpha_1..alpha_n: each root repeated by its multiplicity, larger multiplicities first.
    std::vector<ExactScalar> flattened() const;
};

/// lead * prod (x - r_i)^{mult_i}.
UniPoly poly_from_roots(const RootSpec& spec);

/// per[F^{(p_i)}(alpha_j)/p_i!] / prod q_i!. Throws RootMismatch if some alpha_j is not a root.
ExactScalar dbar_mu(const UniPoly& f, const std::vector<ExactScalar>& alphas, const Partition& mu,
                    std::size_t permanent_cap = kDefaultPermanentCap);

/// Calls fn(tau) for every permutation of 0..n-1 in lexicographic order.
template <class Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
    Permutation tau(n);
    for (std::size_t i = 0; i < n; ++i) tau[i] = i;
    do {
        fn(static_cast<const Permutation&>(tau));
    } while (std::next_permutation(tau.begin(), tau.end()));
}

/// Sum over tau of det(A o P_tau B), the left side of the determinant-permanent identity.
template <class R>
R det_hadamard_sum(const Matrix<R>& a, const Matrix<R>& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        fail(Errc::dimension_mismatch, "A and B must be square of the same size");
    R sum(0);
    for_each_permutation(a.rows(), [&](const Permutation& tau) { sum += det(hadamard(a, row_permute(tau, b))); });
    return sum;
}

/// sum_tau det(A o P_tau B) == det(A) per(B).
template <class R>
bool check_det_per_identity(const Matrix<R>& a, const Matrix<R>& b) {
    const R lhs = det_hadamard_sum(a, b);
    return lhs == R(det(a) * permanent(b));
}

struct DpRatioSides {
    ExactScalar lhs;  ///< dp(x^{n-2}F, ..., F, G_1..G_n) * det V
    ExactScalar rhs;  ///< a0^{n-1} det[G_i(alpha_j)]
};

/// Both sides of the cross-multiplied dp ratio identity; V has rows
/// alpha_j^{n-1}, ..., alpha_j^0. Throws DuplicateRoots, RootMismatch, DegreeTooHigh.
DpRatioSides dp_ratio_sides(const UniPoly& f, const std::vector<ExactScalar>& roots, const std::vector<UniPoly>& g);
bool check_dp_ratio(const UniPoly& f, const std::vector<ExactScalar>& roots, const std::vector<UniPoly>& g);

inline constexpr long kRootRange = 6;

/// Deterministic for a fixed seed: m distinct integer roots in [-kRootRange, kRootRange]
/// (widened when m needs more room), multiplicities a uniformly chosen m-partition of n,
/// lead in {+-1, +-2, +-3}. Throws EmptyDomain unless 1 <= m <= n.
RootSpec random_instance(std::uint64_t seed, std::size_t n, std::size_t m);

/// Uniform integers in [lo, hi] by rejection on a 64-bit Mersenne twister, so the
/// stream depends only on the seed and not on the standard library's distributions.
class SeededDraw {
public:
    explicit SeededDraw(std::uint64_t seed) : engine_(seed) {}
    long uniform(long lo, long hi);
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace multdisc
