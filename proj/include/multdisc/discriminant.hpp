#pragma once

// The multiplicity discriminant D_mu(F): a sum, over the distinct
// rearrangements sigma of the expanded tuple p of mu, of determinants of the
// stack
//
//     x^(n-mu_m-1) F, ..., x^0 F,
//     x^(n-1) F^(sigma_1)/sigma_1!, ..., x^0 F^(sigma_n)/sigma_n!
//
// For F of degree n with m distinct roots and mu an m-partition of n,
// D_mu(F) != 0 exactly when the multiplicity structure of F is mu.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "multdisc/partition.hpp"
#include "multdisc/poly.hpp"
#include "multdisc/scalar.hpp"
#include "multdisc/sympoly.hpp"

namespace multdisc {

enum class DmuEngine {
    automatic,  ///< reduced for numeric input, direct for symbolic input
    direct,     ///< stream S_p and sum one determinant per rearrangement
    reduced,    ///< eliminate the F block once, then one pass over (columns, counts) states
};

inline constexpr std::size_t kDefaultSymbolicCap = 6;

struct DmuOptions {
    DmuEngine engine = DmuEngine::automatic;
    /// Worker threads for the direct engine; 0 means the available parallelism.
    unsigned workers = 0;
    /// Largest degree accepted in symbolic mode.
    std::size_t symbolic_cap = kDefaultSymbolicCap;
};

enum class DmuMode { numeric, symbolic };

template <class V>
struct DmuResult {
    Partition mu;
    DmuMode mode = DmuMode::numeric;
    V value;
    std::uint64_t term_count = 0;  ///< |S_p|
    std::size_t matrix_dim = 0;    ///< 2n - mu_m
};

/// 2n - mu_m.
std::size_t dmu_degree(std::size_t n, const Partition& mu);

/// The 2n - mu_m rows of the dp stack for one rearrangement sigma.
template <class R>
std::vector<Poly<R>> dmu_rows(std::size_t n, const Partition& mu, const ExpandedTuple& sigma, const Poly<R>& f) {
    if (f.is_zero() || f.degree().value() != n)
        fail(Errc::degree_mismatch, "F must have degree " + std::to_string(n));
    if (static_cast<std::size_t>(mu.total()) != n)
        fail(Errc::degree_mismatch, "partition " + mu.to_string() + " does not sum to " + std::to_string(n));
    if (sigma.size() != n) fail(Errc::degree_mismatch, "rearrangement has the wrong length");
    const auto f_rows = n - static_cast<std::size_t>(mu.smallest());
    std::vector<Poly<R>> rows;
    rows.reserve(f_rows + n);
    for (std::size_t r = 0; r < f_rows; ++r) rows.push_back(shift_mul(f, f_rows - 1 - r));
    for (std::size_t i = 1; i <= n; ++i)
        rows.push_back(shift_mul(taylor_derivative(f, static_cast<std::size_t>(sigma[i - 1])), n - i));
    return rows;
}

DmuResult<Integer> dmu(const IntPoly& f, const Partition& mu, const DmuOptions& options = {});

/// Rational coefficients: evaluated on the denominator-cleared polynomial and
/// scaled back by homogeneity, so the value is exact for F itself.
DmuResult<ExactScalar> dmu(const UniPoly& f, const Partition& mu, const DmuOptions& options = {});

/// Symbolic coefficients (always the direct engine).
DmuResult<SymPoly> dmu(const SymUniPoly& f, const Partition& mu, const DmuOptions& options = {});

/// D_mu of the generic polynomial a0 x^n + ... + an.
DmuResult<SymPoly> dmu_symbolic(std::size_t n, const Partition& mu, const DmuOptions& options = {});

/// The direct engine: one determinant per rearrangement, split by rank range across workers.
Integer dmu_direct(const IntPoly& f, const Partition& mu, unsigned workers = 0);
SymPoly dmu_direct(const SymUniPoly& f, const Partition& mu, unsigned workers = 0);

/// The reduced engine for integer coefficients.
Integer dmu_reduced(const IntPoly& f, const Partition& mu);

struct PsdReport {
    std::vector<ExactScalar> psd;  ///< psd[k] = coefficient of x^k in S_k(F, F'), k = 0..n-1
    std::size_t ndr = 0;           ///< number of distinct roots
};

/// Principal subresultant coefficients of (F, F') and the distinct-root count
/// they determine. Throws DegreeMismatch for constant F.
PsdReport psd_sequence(const UniPoly& f);
PsdReport psd_sequence(const IntPoly& f);

struct Certificate {
    Partition mu;
    Integer value;
};

struct ClassifyReport {
    std::size_t degree = 0;
    std::size_t ndr = 0;
    Partition multiplicity;
    /// D_nu of the denominator-cleared F for every candidate nu; empty when
    /// the root count alone forces the answer.
    std::vector<Certificate> certificates;
};

/// Multiplicity structure of F. Throws ZeroPolynomial, DegreeMismatch (constant F)
/// or AmbiguousClassification.
ClassifyReport classify_report(const UniPoly& f, const DmuOptions& options = {});
Partition classify(const UniPoly& f, const DmuOptions& options = {});
Partition classify(const IntPoly& f, const DmuOptions& options = {});

unsigned resolve_workers(unsigned requested);

}  // namespace multdisc
