#include "multdisc/comparison.hpp"

#include <algorithm>

#include "multdisc/yhz.hpp"

namespace multdisc {

IntPoly witness_polynomial(const Partition& mu) {
    IntPoly f = IntPoly::constant(Integer(1));
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const IntPoly factor(std::vector<Integer>{Integer(1), Integer(-static_cast<long>(i))});
        for (int k = 0; k < mu[i]; ++k) f = f * factor;
    }
    return f;
}

MeasuredSizes measure_sizes(std::size_t n, const Partition& mu, const DmuOptions& options) {
    MeasuredSizes out;
    const auto d = dmu_symbolic(n, mu, options).value;
    out.num_new = d.is_zero() ? 0 : 1;
    out.d_new = d.total_degree();
    out.new_homogeneous = d.is_homogeneous();
    try {
        const auto y = yhz_condition_symbolic(n, mu);
        out.num_yhz = y.equations.size() + 1;
        out.d_yhz = yhz_max_degree(y);
    } catch (const Error& e) {
        if (e.code() != Errc::chain_degenerate) throw;
        out.chain_degenerate = true;
    }
    out.matches = out.num_new == 1 && out.new_homogeneous && out.d_new && Integer(*out.d_new) == Integer(dmu_degree(n, mu)) &&
                  !out.chain_degenerate && Integer(static_cast<unsigned long>(out.num_yhz)) == yhz_count(mu) && out.d_yhz &&
                  Integer(*out.d_yhz) == yhz_degree(mu);
    return out;
}

std::vector<ComparisonRow> comparison_table(std::size_t n, const TableOptions& options) {
    std::vector<ComparisonRow> rows;
    if (n < 4) return rows;
    for (std::size_t m = 2; m + 2 <= n; ++m) {
        auto shapes = partitions(static_cast<int>(n), static_cast<int>(m));
        std::reverse(shapes.begin(), shapes.end());
        for (const auto& mu : shapes) {
            ComparisonRow row;
            row.n = n;
            row.m = m;
            row.mu = mu;
            row.num_yhz = yhz_count(mu);
            row.d_new = Integer(static_cast<unsigned long>(dmu_degree(n, mu)));
            row.d_yhz = yhz_degree(mu);
            if (options.witness) {
                const auto f = witness_polynomial(mu);
                row.witness = dmu(f, mu, options.dmu).value;
                const auto scaled = dmu(Integer(2) * f, mu, options.dmu).value;
                row.witness_degree_ok = scaled == pow(Integer(2), row.d_new.get_ui()) * *row.witness;
            }
            if (n <= options.measure_upto && n <= options.dmu.symbolic_cap)
                row.measured = measure_sizes(n, mu, options.dmu);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace multdisc
