#include "multdisc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace multdisc {

void RootSpec::validate() const {
    if (roots.size() != mults.size()) fail(Errc::precondition, "roots and multiplicities differ in length");
    if (roots.empty()) fail(Errc::precondition, "no roots");
    if (lead.is_zero()) fail(Errc::zero_lead, "leading coefficient is zero");
    for (int k : mults)
        if (k < 1) fail(Errc::precondition, "multiplicities must be positive");
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j]) fail(Errc::duplicate_roots, "root " + roots[i].to_string() + " listed twice");
}

std::size_t RootSpec::degree() const {
    return static_cast<std::size_t>(std::accumulate(mults.begin(), mults.end(), 0));
}

Partition RootSpec::structure() const {
    std::vector<int> parts = mults;
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::vector<ExactScalar> RootSpec::flattened() const {
    std::vector<std::size_t> order(roots.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return mults[a] > mults[b]; });
    std::vector<ExactScalar> out;
    for (std::size_t i : order)
        for (int k = 0; k < mults[i]; ++k) out.push_back(roots[i]);
    return out;
}

UniPoly poly_from_roots(const RootSpec& spec) {
    spec.validate();
    UniPoly f = UniPoly::constant(spec.lead);
    for (std::size_t i = 0; i < spec.roots.size(); ++i) {
        const UniPoly factor(std::vector<ExactScalar>{ExactScalar(1), -spec.roots[i]});
        for (int k = 0; k < spec.mults[i]; ++k) f = f * factor;
    }
    return f;
}

ExactScalar dbar_mu(const UniPoly& f, const std::vector<ExactScalar>& alphas, const Partition& mu,
                    std::size_t permanent_cap) {
    if (f.is_zero()) fail(Errc::zero_polynomial, "dbar of the zero polynomial");
    const std::size_t n = f.degree().value();
    if (alphas.size() != n || static_cast<std::size_t>(mu.total()) != n)
        fail(Errc::degree_mismatch, "need deg F = |alpha| = sum mu");
    for (const auto& a : alphas)
        if (!poly_eval(f, a).is_zero()) fail(Errc::root_mismatch, a.to_string() + " is not a root of F");
    const auto p = expand_partition(mu);
    Matrix<ExactScalar> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto t = taylor_derivative(f, static_cast<std::size_t>(p[i]));
        for (std::size_t j = 0; j < n; ++j) m(i, j) = poly_eval(t, alphas[j]);
    }
    return exact_div(permanent(m, permanent_cap), ExactScalar(repetition_constant(p)));
}

DpRatioSides dp_ratio_sides(const UniPoly& f, const std::vector<ExactScalar>& roots, const std::vector<UniPoly>& g) {
    if (f.is_zero()) fail(Errc::zero_polynomial, "F is zero");
    const std::size_t n = f.degree().value();
    if (roots.size() != n || g.size() != n) fail(Errc::dimension_mismatch, "need n roots and n polynomials G_i");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j)
            if (roots[i] == roots[j]) fail(Errc::duplicate_roots, "roots must be distinct");
        if (!poly_eval(f, roots[i]).is_zero()) fail(Errc::root_mismatch, roots[i].to_string() + " is not a root of F");
    }
    std::vector<UniPoly> rows;
    for (std::size_t r = 0; r + 1 < n; ++r) rows.push_back(shift_mul(f, n - 2 - r));
    rows.insert(rows.end(), g.begin(), g.end());

    Matrix<ExactScalar> vandermonde(n, n);
    Matrix<ExactScalar> values(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        ExactScalar power(1);
        for (std::size_t i = n; i-- > 0;) {
            vandermonde(i, j) = power;
            power = power * roots[j];
        }
        for (std::size_t i = 0; i < n; ++i) values(i, j) = poly_eval(g[i], roots[j]);
    }
    ExactScalar lead_power(1);
    for (std::size_t k = 0; k + 1 < n; ++k) lead_power = lead_power * f.leading();
    return {dp(rows) * det(vandermonde), lead_power * det(values)};
}

bool check_dp_ratio(const UniPoly& f, const std::vector<ExactScalar>& roots, const std::vector<UniPoly>& g) {
    const auto sides = dp_ratio_sides(f, roots, g);
    return sides.lhs == sides.rhs;
}

long SeededDraw::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<long>(x % span);
}

RootSpec random_instance(std::uint64_t seed, std::size_t n, std::size_t m) {
    if (m < 1 || m > n) fail(Errc::empty_domain, "need 1 <= m <= n");
    SeededDraw draw(seed);
    const auto shapes = partitions(static_cast<int>(n), static_cast<int>(m));
    const auto& shape = shapes[static_cast<std::size_t>(draw.uniform(0, static_cast<long>(shapes.size()) - 1))];

    const long range = std::max(kRootRange, static_cast<long>(m));
    RootSpec spec;
    while (spec.roots.size() < m) {
        const ExactScalar r(draw.uniform(-range, range));
        if (std::find(spec.roots.begin(), spec.roots.end(), r) == spec.roots.end()) spec.roots.push_back(r);
    }
    spec.mults = shape.parts();
    const long lead = draw.uniform(1, 3);
    spec.lead = ExactScalar(draw.uniform(0, 1) == 0 ? lead : -lead);
    return spec;
}

}  // namespace multdisc
