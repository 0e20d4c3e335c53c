#pragma once

// Size comparison between D_mu (one polynomial of degree 2n - mu_m) and the
// repeated-subresultant baseline, for every mu with 2 <= m <= n-2.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "multdisc/discriminant.hpp"
#include "multdisc/partition.hpp"
#include "multdisc/scalar.hpp"

namespace multdisc {

struct MeasuredSizes {
    std::size_t num_new = 0;
    std::optional<unsigned> d_new;
    bool new_homogeneous = false;
    std::size_t num_yhz = 0;
    std::optional<unsigned> d_yhz;
    bool chain_degenerate = false;
    bool matches = false;  ///< every measured value equals its closed form
};

struct ComparisonRow {
    std::size_t n = 0;
    std::size_t m = 0;
    Partition mu;
    Integer num_new{1};
    Integer num_yhz;
    Integer d_new;
    Integer d_yhz;
    /// D_mu at lead * prod (x - i)^{mu_i}, i = 0..m-1; nonzero by the main theorem.
    std::optional<Integer> witness;
    /// D_mu(2F) == 2^{d_new} D_mu(F) at the witness polynomial.
    bool witness_degree_ok = false;
    std::optional<MeasuredSizes> measured;
};

struct TableOptions {
    bool witness = false;
    /// Measure symbolic sizes when n <= measure_upto (bounded by the symbolic cap).
    std::size_t measure_upto = 0;
    DmuOptions dmu;
};

/// Rows grouped by m ascending, partitions ascending-lex within each m.
std::vector<ComparisonRow> comparison_table(std::size_t n, const TableOptions& options = {});

/// Polynomial with roots 0..m-1 of multiplicities mu (lead 1).
IntPoly witness_polynomial(const Partition& mu);

MeasuredSizes measure_sizes(std::size_t n, const Partition& mu, const DmuOptions& options = {});

}  // namespace multdisc
