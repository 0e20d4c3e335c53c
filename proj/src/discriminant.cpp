#include "multdisc/discriminant.hpp"

#include <bit>
#include <thread>
#include <unordered_map>

#include "multdisc/matrix.hpp"
#include "multdisc/subresultant.hpp"

namespace multdisc {

std::size_t dmu_degree(std::size_t n, const Partition& mu) { return 2 * n - static_cast<std::size_t>(mu.smallest()); }

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

void check_shape(const Degree& degree, const Partition& mu) {
    if (degree.is_minus_infinity()) fail(Errc::zero_polynomial, "D_mu of the zero polynomial");
    if (degree.value() != static_cast<std::size_t>(mu.total()))
        fail(Errc::degree_mismatch, "deg F = " + degree.to_string() + " but " + mu.bracketed() + " sums to " +
                                        std::to_string(mu.total()));
}

template <class R>
R direct_sum(const Poly<R>& f, const Partition& mu, unsigned workers) {
    check_shape(f.degree(), mu);
    const std::size_t n = f.degree().value();
    const MultisetPermutations perms(expand_partition(mu));
    const std::uint64_t total = perms.count();
    const std::uint64_t chunks = std::min<std::uint64_t>(resolve_workers(workers), total);

    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        R acc(0);
        auto cursor = perms.stream(begin, end);
        ExpandedTuple sigma;
        while (cursor.next(sigma)) acc += dp(dmu_rows(n, mu, sigma, f));
        return acc;
    };

    if (chunks <= 1) return work(0, total);
    std::vector<R> partial(chunks, R(0));
    {
        std::vector<std::jthread> pool;
        const std::uint64_t step = (total + chunks - 1) / chunks;
        for (std::uint64_t c = 0; c < chunks; ++c)
            pool.emplace_back([&, c] { partial[c] = work(c * step, std::min(total, (c + 1) * step)); });
    }
    R sum(0);
    for (const auto& p : partial) sum += p;  // fixed chunk order
    return sum;
}

}  // namespace

Integer dmu_direct(const IntPoly& f, const Partition& mu, unsigned workers) { return direct_sum(f, mu, workers); }

SymPoly dmu_direct(const SymUniPoly& f, const Partition& mu, unsigned workers) { return direct_sum(f, mu, workers); }

Integer dmu_reduced(const IntPoly& f, const Partition& mu) {
    check_shape(f.degree(), mu);
    const std::size_t n = f.degree().value();
    const auto k = n - static_cast<std::size_t>(mu.smallest());  // rows in the F block
    const std::size_t width = n + k;                              // 2n - mu_m
    if (n > 30) fail(Errc::dimension_too_large, "reduced engine supports degree <= 30");
    const Integer& a0 = f.leading();
    const auto fc = f.coeffs();

    // Distinct values of p and their multiplicities.
    std::vector<int> values;
    std::vector<int> quota;
    for (int part : mu.parts()) {
        if (!values.empty() && values.back() == part) {
            quota.back() += part;
        } else {
            values.push_back(part);
            quota.push_back(part);
        }
    }
    std::vector<std::uint64_t> stride(values.size(), 1);
    for (std::size_t t = 1; t < values.size(); ++t) stride[t] = stride[t - 1] * static_cast<std::uint64_t>(quota[t - 1] + 1);

    // reduced[i][t]: row x^(n-1-i) F^(v_t)/v_t!, scaled by a0^k and cleared
    // against the F block, restricted to the last n columns.
    std::vector<std::vector<std::vector<Integer>>> reduced(n, std::vector<std::vector<Integer>>(values.size()));
    for (std::size_t t = 0; t < values.size(); ++t) {
        const auto deriv = taylor_derivative(f, static_cast<std::size_t>(values[t]));
        for (std::size_t i = 0; i < n; ++i) {
            const auto g = shift_mul(deriv, n - 1 - i);
            std::vector<Integer> row(width, Integer(0));
            const std::size_t offset = width - g.coeffs().size();
            for (std::size_t c = 0; c < g.coeffs().size(); ++c) row[offset + c] = g.coeffs()[c];
            for (std::size_t c = 0; c < k; ++c) {
                const Integer factor = row[c];
                for (auto& e : row) e *= a0;
                if (is_zero(factor)) continue;
                for (std::size_t j = 0; j <= n; ++j) mpz_submul(row[c + j].get_mpz_t(), factor.get_mpz_t(), fc[j].get_mpz_t());
            }
            reduced[i][t].assign(row.begin() + static_cast<std::ptrdiff_t>(k), row.end());
        }
    }

    // Expand the determinants row by row. State: columns used so far and how
    // many copies of each value have been placed; rearrangements that share a
    // state share all of their partial products.
    std::unordered_map<std::uint64_t, Integer> level;
    level.emplace(0, Integer(1));
    std::vector<int> counts(values.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::unordered_map<std::uint64_t, Integer> next;
        for (const auto& [key, val] : level) {
            if (is_zero(val)) continue;
            const auto mask = static_cast<std::uint32_t>(key & 0xffffffffULL);
            const std::uint64_t cidx = key >> 32;
            for (std::size_t t = 0; t < values.size(); ++t) {
                const auto used = static_cast<int>((cidx / stride[t]) % static_cast<std::uint64_t>(quota[t] + 1));
                if (used == quota[t]) continue;
                const auto& row = reduced[i][t];
                for (std::size_t j = 0; j < n; ++j) {
                    const std::uint32_t bit = std::uint32_t{1} << j;
                    if ((mask & bit) != 0 || is_zero(row[j])) continue;
                    const std::uint64_t nkey = std::uint64_t{mask | bit} | ((cidx + stride[t]) << 32);
                    Integer& slot = next[nkey];
                    if (std::popcount(mask >> (j + 1)) % 2 == 0)
                        mpz_addmul(slot.get_mpz_t(), row[j].get_mpz_t(), val.get_mpz_t());
                    else
                        mpz_submul(slot.get_mpz_t(), row[j].get_mpz_t(), val.get_mpz_t());
                }
            }
        }
        level = std::move(next);
    }
    std::uint64_t full_counts = 0;
    for (std::size_t t = 0; t < values.size(); ++t) full_counts += stride[t] * static_cast<std::uint64_t>(quota[t]);
    const std::uint64_t final_key = static_cast<std::uint64_t>((std::uint64_t{1} << n) - 1) | (full_counts << 32);
    auto it = level.find(final_key);
    if (it == level.end()) return Integer(0);
    return exact_div(it->second, pow(a0, static_cast<unsigned long>(k * (n - 1))));
}

DmuResult<Integer> dmu(const IntPoly& f, const Partition& mu, const DmuOptions& options) {
    check_shape(f.degree(), mu);
    const std::size_t n = f.degree().value();
    DmuResult<Integer> r;
    r.mu = mu;
    r.mode = DmuMode::numeric;
    r.term_count = multiset_permutation_count(expand_partition(mu));
    r.matrix_dim = dmu_degree(n, mu);
    r.value = options.engine == DmuEngine::direct ? dmu_direct(f, mu, options.workers) : dmu_reduced(f, mu);
    return r;
}

DmuResult<ExactScalar> dmu(const UniPoly& f, const Partition& mu, const DmuOptions& options) {
    check_shape(f.degree(), mu);
    auto [fi, l] = clear_denominators(f);
    const auto ri = dmu(fi, mu, options);
    DmuResult<ExactScalar> r;
    r.mu = ri.mu;
    r.mode = ri.mode;
    r.term_count = ri.term_count;
    r.matrix_dim = ri.matrix_dim;
    // D_mu is homogeneous of degree 2n - mu_m in the coefficients.
    r.value = ExactScalar(ri.value, pow(l, static_cast<unsigned long>(ri.matrix_dim)));
    return r;
}

DmuResult<SymPoly> dmu(const SymUniPoly& f, const Partition& mu, const DmuOptions& options) {
    check_shape(f.degree(), mu);
    const std::size_t n = f.degree().value();
    if (n > options.symbolic_cap)
        fail(Errc::cap_exceeded, "symbolic D_mu limited to degree " + std::to_string(options.symbolic_cap));
    if (options.engine == DmuEngine::reduced) fail(Errc::precondition, "the reduced engine needs integer coefficients");
    DmuResult<SymPoly> r;
    r.mu = mu;
    r.mode = DmuMode::symbolic;
    r.term_count = multiset_permutation_count(expand_partition(mu));
    r.matrix_dim = dmu_degree(n, mu);
    r.value = dmu_direct(f, mu, options.workers);
    return r;
}

DmuResult<SymPoly> dmu_symbolic(std::size_t n, const Partition& mu, const DmuOptions& options) {
    if (n > options.symbolic_cap)
        fail(Errc::cap_exceeded, "symbolic D_mu limited to degree " + std::to_string(options.symbolic_cap));
    return dmu(symbolic_polynomial(n), mu, options);
}

namespace {

template <class V>
PsdReport report_from(const std::vector<V>& psd) {
    PsdReport r;
    const std::size_t n = psd.size();
    r.psd.assign(psd.begin(), psd.end());
    std::size_t first = 0;
    while (first < n && r.psd[first].is_zero()) ++first;
    // psd_{n-1} = n * a0 is never zero, so first < n.
    r.ndr = n - first;
    return r;
}

}  // namespace

PsdReport psd_sequence(const IntPoly& f) {
    if (f.is_zero() || f.degree().value() < 1) fail(Errc::degree_mismatch, "psd sequence needs deg F >= 1");
    return report_from(principal_subresultant_coefficients(f));
}

PsdReport psd_sequence(const UniPoly& f) {
    if (f.is_zero() || f.degree().value() < 1) fail(Errc::degree_mismatch, "psd sequence needs deg F >= 1");
    bool integral = true;
    for (const auto& c : f.coeffs()) integral = integral && c.is_integer();
    if (integral) return psd_sequence(clear_denominators(f).first);
    return report_from(principal_subresultant_coefficients(f));
}

ClassifyReport classify_report(const UniPoly& f, const DmuOptions& options) {
    if (f.is_zero()) fail(Errc::zero_polynomial, "cannot classify the zero polynomial");
    if (f.degree().value() < 1) fail(Errc::degree_mismatch, "cannot classify a constant polynomial");
    const auto fi = clear_denominators(f).first;
    const std::size_t n = fi.degree().value();
    const auto m = psd_sequence(fi).ndr;

    ClassifyReport report;
    report.degree = n;
    report.ndr = m;
    if (m == n) {
        report.multiplicity = Partition(std::vector<int>(n, 1));
        return report;
    }
    if (m == 1) {
        report.multiplicity = Partition({static_cast<int>(n)});
        return report;
    }
    if (m == n - 1) {
        std::vector<int> parts(n - 1, 1);
        parts.front() = 2;
        report.multiplicity = Partition(std::move(parts));
        return report;
    }
    std::vector<Partition> winners;
    for (const auto& nu : partitions(static_cast<int>(n), static_cast<int>(m))) {
        auto value = dmu(fi, nu, options).value;
        if (!is_zero(value)) winners.push_back(nu);
        report.certificates.push_back({nu, std::move(value)});
    }
    if (winners.size() != 1) {
        std::string detail = std::to_string(winners.size()) + " candidates with D_nu != 0 for F = " + to_string(f);
        for (const auto& w : winners) detail += " " + w.bracketed();
        fail(Errc::ambiguous_classification, detail);
    }
    report.multiplicity = winners.front();
    return report;
}

Partition classify(const UniPoly& f, const DmuOptions& options) { return classify_report(f, options).multiplicity; }

Partition classify(const IntPoly& f, const DmuOptions& options) { return classify(to_unipoly(f), options); }

}  // namespace multdisc
