#include <doctest.h>

#include "multdisc/discriminant.hpp"
#include "multdisc/oracle.hpp"
#include "multdisc/verify.hpp"

using namespace multdisc;

namespace {
Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::precondition;
}
RootSpec spec_of(std::vector<long> roots, std::vector<int> mults, long lead = 1) {
    RootSpec s;
    for (long r : roots) s.roots.emplace_back(r);
    s.mults = std::move(mults);
    s.lead = ExactScalar(lead);
    return s;
}
}  // namespace

TEST_CASE("poly_from_roots") {
    CHECK(to_string(poly_from_roots(spec_of({1, -2}, {3, 1}))) == "1,-1,-3,5,-2");
    CHECK(to_string(poly_from_roots(spec_of({1, -1}, {2, 2}))) == "1,0,-2,0,1");
    CHECK(code_of([] { poly_from_roots(spec_of({5, 5}, {1, 1})); }) == Errc::duplicate_roots);
    CHECK(code_of([] { poly_from_roots(spec_of({1}, {1}, 0)); }) == Errc::zero_lead);
    RootSpec rational;
    rational.roots = {ExactScalar(Integer(1), Integer(2))};
    rational.mults = {2};
    CHECK(to_string(poly_from_roots(rational)) == "1,-1,1/4");
}

TEST_CASE("dbar_mu") {
    const auto spec = spec_of({1, -2}, {3, 1});
    const auto f = poly_from_roots(spec);
    CHECK(spec.flattened() == std::vector<ExactScalar>{1, 1, 1, -2});
    CHECK(dbar_mu(f, spec.flattened(), Partition({3, 1})) == ExactScalar(-729));
    CHECK(dbar_mu(f, spec.flattened(), Partition({2, 2})).is_zero());
    CHECK(code_of([&] { dbar_mu(f, {1, 1, 1, 3}, Partition({3, 1})); }) == Errc::root_mismatch);

    const auto sq = spec_of({1, 2, 3}, {1, 1, 1});
    const auto g = poly_from_roots(sq);
    ExactScalar prod(1);
    for (const auto& r : sq.roots) prod = prod * poly_eval(g.derivative(), r);
    CHECK(dbar_mu(g, sq.flattened(), Partition({1, 1, 1})) == prod);
}

TEST_CASE("root-side and coefficient-side discriminants") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const std::size_t n = 4 + seed % 5;
        const std::size_t m = 2 + seed % (n - 3);
        const auto spec = random_instance(seed, n, m);
        const auto f = poly_from_roots(spec);
        auto alphas = spec.flattened();
        for (const auto& nu : partitions(static_cast<int>(n), static_cast<int>(m))) {
            const auto db = dbar_mu(f, alphas, nu);
            CHECK(db.is_zero() != (nu == spec.structure()));
            ExactScalar scale(1);
            for (int k = 0; k < static_cast<int>(n) - nu.smallest(); ++k) scale = scale * f.leading();
            CHECK(dmu(f, nu).value == scale * db);
        }
        std::rotate(alphas.begin(), alphas.begin() + 1, alphas.end());
        CHECK(dbar_mu(f, alphas, spec.structure()) == dbar_mu(f, spec.flattened(), spec.structure()));
    }
}

TEST_CASE("dp ratio identity") {
    const auto spec = spec_of({1, 2, 3}, {1, 1, 1});
    const auto f = poly_from_roots(spec);
    std::vector<UniPoly> g;
    for (std::size_t i = 1; i <= 3; ++i) g.push_back(shift_mul(taylor_derivative(f, i), 2));
    const auto sides = dp_ratio_sides(f, spec.roots, g);
    CHECK(sides.lhs == sides.rhs);
    // dp = 9 a0^3 a3^2 = 324, det V = (1-2)(1-3)(2-3) = -2.
    CHECK(sides.lhs == ExactScalar(324 * -2));

    std::vector<UniPoly> dependent;
    for (std::size_t i = 1; i <= 3; ++i) dependent.push_back(shift_mul(f, std::min<std::size_t>(i - 1, 1)));
    const auto zero = dp_ratio_sides(f, spec.roots, dependent);
    CHECK(zero.lhs.is_zero());
    CHECK(zero.rhs.is_zero());
    CHECK(code_of([&] { check_dp_ratio(f, {1, 1, 3}, g); }) == Errc::duplicate_roots);
}

TEST_CASE("random_instance contract") {
    const auto x = random_instance(42, 8, 3);
    const auto y = random_instance(42, 8, 3);
    CHECK(x.roots == y.roots);
    CHECK(x.mults == y.mults);
    CHECK(x.lead == y.lead);
    const auto z = random_instance(1, 4, 2);
    CHECK(z.roots.size() == 2);
    CHECK(z.degree() == 4);
    CHECK_NOTHROW(z.validate());
    CHECK(code_of([] { random_instance(3, 4, 5); }) == Errc::empty_domain);
    const auto wide = random_instance(9, 20, 20);
    CHECK_NOTHROW(wide.validate());
}

TEST_CASE("suites run clean on small trial counts") {
    VerifyOptions o;
    o.trials = 20;
    for (const auto& name : suite_names()) {
        const auto r = run_suite(name, o);
        CHECK_MESSAGE(r.ok(), name);
        CHECK(r.checks > 0);
    }
    CHECK(code_of([] { run_suite("nosuch"); }) == Errc::unknown_suite);
}
