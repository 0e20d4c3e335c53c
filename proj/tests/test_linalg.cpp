#include <doctest.h>

#include <random>

#include "multdisc/matrix.hpp"
#include "multdisc/oracle.hpp"
#include "test_oracles.hpp"

using namespace multdisc;

namespace {
SymPoly a(std::size_t i) { return SymPoly::variable(i); }
}  // namespace

TEST_CASE("det small cases") {
    CHECK(det(Matrix<Integer>{{1, 2}, {3, 4}}) == -2);
    CHECK(det(Matrix<Integer>::identity(5)) == 1);
    CHECK(det(Matrix<Integer>{{0, 1}, {1, 0}}) == -1);
    CHECK(det(Matrix<Integer>{{1, 2}, {2, 4}}) == 0);
    CHECK(det(Matrix<Integer>{{0, 0}, {0, 0}}) == 0);
    CHECK_THROWS_AS(det(Matrix<Integer>(2, 3)), Error);
}

TEST_CASE("det matches cofactor expansion; both methods; multiplicativity") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 1 + t % 6;
        auto m = oracle::random_matrix(rng, n, 6);
        if (t % 4 == 0) m(0, 0) = 0;  // forces a pivot search
        const Integer expected = oracle::cofactor_det(oracle::rows_of(m));
        CHECK(det(m, DetMethod::bareiss) == expected);
        CHECK(det(m, DetMethod::minor_expansion) == expected);
        if (n <= 5) {
            const auto b = oracle::random_matrix(rng, n, 6);
            CHECK(det(m * b) == det(m) * det(b));
        }
    }
}

TEST_CASE("symbolic det by both methods") {
    const Matrix<SymPoly> m{{a(0), a(1), SymPoly(0)}, {a(2), a(0), a(1)}, {SymPoly(0), a(2), a(0)}};
    const SymPoly expected = oracle::cofactor_det(oracle::rows_of(m));
    CHECK(det(m, DetMethod::bareiss) == expected);
    CHECK(det(m, DetMethod::minor_expansion) == expected);
    CHECK(expected.to_string() == "a0^3 - 2*a0*a1*a2");
}

TEST_CASE("permanent") {
    CHECK(permanent(Matrix<Integer>{{1, 2}, {3, 4}}) == 10);
    CHECK(permanent(Matrix<Integer>::identity(4)) == 1);
    CHECK(permanent(Matrix<Integer>{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) == 6);
    CHECK_THROWS_AS(permanent(Matrix<Integer>(15, 15)), Error);
    CHECK_THROWS_AS(permanent(Matrix<Integer>(2, 3)), Error);
    try {
        permanent(Matrix<Integer>(15, 15));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::dimension_too_large);
    }
    CHECK(permanent(Matrix<Integer>(3, 3), 3) == 0);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 60; ++t) {
        const auto m = oracle::random_matrix(rng, 1 + t % 6, 5);
        CHECK(permanent(m) == oracle::naive_permanent(oracle::rows_of(m)));
    }
}

TEST_CASE("hadamard") {
    const Matrix<Integer> x{{1, 2}, {3, 4}};
    CHECK(hadamard(x, Matrix<Integer>{{5, 6}, {7, 8}}) == Matrix<Integer>{{5, 12}, {21, 32}});
    CHECK(hadamard(x, Matrix<Integer>{{1, 1}, {1, 1}}) == x);
    CHECK(hadamard(x, Matrix<Integer>(2, 2)) == Matrix<Integer>(2, 2));
    CHECK_THROWS_AS(hadamard(x, Matrix<Integer>(2, 3)), Error);
}

TEST_CASE("row_permute convention") {
    const Matrix<SymPoly> b{{a(0), a(1)}, {a(2), a(3)}};
    CHECK(row_permute(Permutation{0, 1}, b) == b);
    CHECK(row_permute(Permutation{1, 0}, b) == Matrix<SymPoly>{{a(2), a(3)}, {a(0), a(1)}});
    const Matrix<Integer> m{{1, 2}, {3, 4}, {5, 6}};
    const Permutation tau{2, 0, 1};
    CHECK(row_permute(inverse(tau), row_permute(tau, m)) == m);
    CHECK(row_permute(tau, m) == Matrix<Integer>{{3, 4}, {5, 6}, {1, 2}});
    CHECK_THROWS_AS(row_permute(Permutation{0, 0, 1}, m), Error);
    CHECK_THROWS_AS(row_permute(Permutation{0, 1}, m), Error);
}

TEST_CASE("determinant-permanent identity on the 2x2 symbolic instance and random pairs") {
    const Matrix<SymPoly> am{{a(0), a(1)}, {a(2), a(3)}};
    const Matrix<SymPoly> bm{{a(4), a(5)}, {a(6), a(7)}};
    CHECK(det_hadamard_sum(am, bm) == (a(0) * a(3) - a(1) * a(2)) * (a(4) * a(7) + a(5) * a(6)));
    CHECK(check_det_per_identity(am, bm));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + t % 5;
        const auto x = oracle::random_matrix(rng, n, 5);
        const auto y = oracle::random_matrix(rng, n, 5);
        CHECK(check_det_per_identity(x, y));
        CHECK(check_det_per_identity(Matrix<Integer>::identity(n), y));
    }
    CHECK_THROWS_AS(check_det_per_identity(Matrix<Integer>(2, 2), Matrix<Integer>(3, 3)), Error);
}

TEST_CASE("dp") {
    const auto f = symbolic_polynomial(3);
    std::vector<SymUniPoly> rows{shift_mul(f, 1), f};
    for (std::size_t i = 1; i <= 3; ++i) rows.push_back(shift_mul(taylor_derivative(f, i), 2));
    CHECK(dp(rows).to_string() == "9*a0^3*a3^2");

    std::vector<IntPoly> basis;
    for (std::size_t k = 4; k-- > 0;) basis.push_back(IntPoly::monomial(Integer(1), k));
    CHECK(dp(basis) == 1);

    std::vector<IntPoly> repeated{IntPoly(std::vector<Integer>{1, 2}), IntPoly(std::vector<Integer>{1, 2})};
    CHECK(dp(repeated) == 0);

    std::vector<IntPoly> too_high{IntPoly::monomial(Integer(1), 2), IntPoly::constant(Integer(1))};
    CHECK_THROWS_AS(dp(too_high), Error);
}

TEST_CASE("dp is alternating and multilinear in rows") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + t % 4;
        std::vector<IntPoly> rows;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Integer> c;
            for (std::size_t k = 0; k < n; ++k) c.push_back(oracle::random_integer(rng, 5));
            rows.emplace_back(c);
        }
        const Integer base = dp(rows);
        auto swapped = rows;
        std::swap(swapped[0], swapped[n - 1]);
        CHECK(dp(swapped) == -base);
        auto scaled = rows;
        const Integer s = oracle::random_integer(rng, 4);
        scaled[1] = s * scaled[1];
        CHECK(dp(scaled) == s * base);
        auto added = rows;
        added[0] = added[0] + added[1];
        CHECK(dp(added) == base);
    }
}
