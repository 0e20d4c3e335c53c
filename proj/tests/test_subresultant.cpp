#include <doctest.h>

#include <random>

#include "multdisc/subresultant.hpp"
#include "test_oracles.hpp"

using namespace multdisc;

namespace {

IntPoly from_roots(const std::vector<long>& roots, long lead = 1) {
    IntPoly f = IntPoly::constant(Integer(lead));
    for (long r : roots) f = f * IntPoly(std::vector<Integer>{Integer(1), Integer(-r)});
    return f;
}

IntPoly random_poly(std::mt19937_64& rng, std::size_t degree, bool sparse) {
    std::vector<Integer> c;
    for (std::size_t i = 0; i <= degree; ++i) {
        Integer v = oracle::random_integer(rng, 7);
        if (sparse && rng() % 3 != 0) v = 0;
        c.push_back(v);
    }
    if (c.front() == 0) c.front() = 1 + static_cast<long>(rng() % 3);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("subresultant examples") {
    const auto g = from_roots({1, 1, -2});
    CHECK(to_string(subresultant(g, 1)) == "-18,18");
    CHECK(subresultant(g, 0).is_zero());
    const auto h = from_roots({1, 2, -3});
    CHECK(to_string(subresultant(h, 0)) == "-400");
    CHECK(subresultant(h, 0).coeff(0) == resultant(h, h.derivative()));
    CHECK_THROWS_AS(subresultant(h, 3), Error);
    try {
        subresultant(h, 5);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::degree_out_of_range);
    }
}

TEST_CASE("principal coefficients from the frozen oracle") {
    const auto check = [](const IntPoly& f, const std::vector<long>& expected) {
        const auto got = principal_subresultant_coefficients(f);
        REQUIRE(got.size() == expected.size());
        for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == expected[k]);
    };
    check(from_roots({1, 1, 1, -2}), {0, 0, -27, 4});
    check(from_roots({1, 1, -1, -1}), {0, 0, -16, 4});
    check(IntPoly(std::vector<Integer>{1, 0, 0, 0, 1}), {256, 0, 0, 4});
    check(IntPoly(std::vector<Integer>{1, 0, 0}), {0, 2});
}

TEST_CASE("remainder sequence agrees with the determinant definition") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = 1 + t % 7;
        IntPoly f;
        if (t % 3 == 0) {
            std::vector<long> roots;
            for (std::size_t i = 0; i < d; ++i) roots.push_back(static_cast<long>(rng() % 5) - 2);  // many repeats
            f = from_roots(roots, 1 + static_cast<long>(rng() % 3));
        } else {
            f = random_poly(rng, d, t % 3 == 1);
        }
        const auto chain = subresultant_chain(f);
        for (std::size_t k = 0; k < d; ++k) CHECK(chain[k] == subresultant_by_determinant(f, k));
        CHECK(principal_subresultant_coefficients(f) == principal_subresultant_coefficients_by_determinant(f));
    }
}

TEST_CASE("rational coefficients") {
    const UniPoly f(std::vector<ExactScalar>{ExactScalar(Integer(1), Integer(2)), ExactScalar(0), ExactScalar(-2)});
    CHECK(principal_subresultant_coefficients(f) == principal_subresultant_coefficients_by_determinant(f));
}

TEST_CASE("symbolic subresultant specializes to the numeric one") {
    const auto g = symbolic_polynomial(4);
    const std::vector<Integer> vals{Integer(2), Integer(-1), Integer(3), Integer(0), Integer(-5)};
    const auto f = specialize(g, vals);
    for (std::size_t k = 0; k < 4; ++k) CHECK(specialize(subresultant(g, k), vals) == subresultant(f, k));
}

TEST_CASE("resultant via Sylvester matrix") {
    const auto p = IntPoly(std::vector<Integer>{1, 0, -1});
    const auto q = IntPoly(std::vector<Integer>{1, -2});
    CHECK(resultant(p, q) == 3);
    CHECK(resultant(p, IntPoly(std::vector<Integer>{1, -1})) == 0);
}
