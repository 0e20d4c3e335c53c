#pragma once

// Independent reference implementations used only by the tests. None of
// these share code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "multdisc/matrix.hpp"
#include "multdisc/partition.hpp"
#include "multdisc/scalar.hpp"

namespace oracle {

using multdisc::Integer;

/// Laplace expansion along the first row.
template <class R>
R cofactor_det(const std::vector<std::vector<R>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    if (n == 1) return m[0][0];
    R total(0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<R>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<R> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        const R term = m[0][j] * cofactor_det(minor);
        if (j % 2 == 0)
            total = total + term;
        else
            total = total - term;
    }
    return total;
}

/// Sum over all n! column assignments.
template <class R>
R naive_permanent(const std::vector<std::vector<R>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    R total(0);
    do {
        R prod(1);
        for (std::size_t i = 0; i < n; ++i) prod = prod * m[i][perm[i]];
        total = total + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

template <class R>
std::vector<std::vector<R>> rows_of(const multdisc::Matrix<R>& m) {
    std::vector<std::vector<R>> out(m.rows(), std::vector<R>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

/// All non-increasing sequences of m positive parts summing to n, by filtering every composition.
inline std::vector<std::vector<int>> brute_partitions(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (static_cast<int>(cur.size()) == m) {
            if (left == 0 && std::is_sorted(cur.rbegin(), cur.rend())) out.push_back(cur);
            return;
        }
        for (int v = 1; v <= left; ++v) {
            cur.push_back(v);
            rec(left - v);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

inline Integer random_integer(std::mt19937_64& rng, long bound) {
    return Integer(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound);
}

inline multdisc::Matrix<Integer> random_matrix(std::mt19937_64& rng, std::size_t n, long bound) {
    multdisc::Matrix<Integer> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_integer(rng, bound);
    return m;
}

}  // namespace oracle
