#include <doctest.h>

#include <random>

#include "multdisc/poly.hpp"
#include "multdisc/scalar.hpp"
#include "multdisc/sympoly.hpp"
#include "test_oracles.hpp"

using namespace multdisc;

namespace {

SymPoly a(std::size_t i) { return SymPoly::variable(i); }

ExactScalar random_scalar(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 41) - 20;
    const long den = static_cast<long>(rng() % 6) + 1;
    return ExactScalar(Integer(num), Integer(den));
}

SymPoly random_sympoly(std::mt19937_64& rng) {
    SymPoly p;
    for (int t = 0; t < 4; ++t) {
        SymPoly term(oracle::random_integer(rng, 5));
        for (std::size_t v = 0; v < 3; ++v)
            for (std::uint64_t e = rng() % 3; e > 0; --e) term = term * a(v);
        p = p + term;
    }
    return p;
}

UniPoly random_unipoly(std::mt19937_64& rng, std::size_t degree) {
    std::vector<ExactScalar> c;
    for (std::size_t i = 0; i <= degree; ++i) c.push_back(random_scalar(rng));
    if (c.front().is_zero()) c.front() = ExactScalar(1);
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("ExactScalar keeps rationals reduced and collapses integers") {
    const auto q = ExactScalar::parse("-10/6");
    CHECK(q.to_string() == "-5/3");
    CHECK(q.denominator() == 3);
    CHECK(ExactScalar::parse("4/2").is_integer());
    CHECK(ExactScalar::parse("3/-4").to_string() == "-3/4");
    CHECK((ExactScalar::parse("1/3") + ExactScalar::parse("2/3")) == ExactScalar(1));
    CHECK_THROWS_AS(ExactScalar::parse("1/0"), Error);
    CHECK_THROWS_AS(ExactScalar::parse("abc"), Error);
    CHECK_THROWS_AS(ExactScalar(1) / ExactScalar(0), Error);
    CHECK_THROWS_AS(ExactScalar::parse("1/2").as_integer(), Error);
}

TEST_CASE("ExactScalar ring axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const auto x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK(((x + y) - y) == x);
        CHECK(((x * y) * z) == (x * (y * z)));
        CHECK((x * (y + z)) == (x * y + x * z));
        CHECK((x + (-x)).is_zero());
    }
}

TEST_CASE("integer exact division") {
    CHECK(exact_div(Integer(6), Integer(3)) == 2);
    CHECK(exact_div(Integer(-12), Integer(4)) == -3);
    try {
        exact_div(Integer(5), Integer(2));
        FAIL("expected NonExactDivision");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::non_exact_division);
    }
    CHECK_THROWS_AS(exact_div(Integer(5), Integer(0)), Error);
}

TEST_CASE("SymPoly canonical form, printing and parsing") {
    const SymPoly p = SymPoly(-1) * a(0) * a(1) * a(1) + SymPoly(3) * a(2) + a(0) * a(1) * a(1);
    CHECK(p.to_string() == "3*a2");
    CHECK((a(0) - a(0)).is_zero());
    CHECK((a(0) - a(0)).to_string() == "0");

    const std::string c1 = "-64*a0^5*a3^2 + 64*a0^4*a1*a2*a3 - 16*a0^3*a1^3*a3 - 16*a0^3*a1^2*a2^2 + 8*a0^2*a1^4*a2 - a0*a1^6";
    const auto parsed = SymPoly::parse(c1);
    CHECK(parsed.to_string() == c1);
    CHECK(parsed.term_count() == 6);
    CHECK(parsed.total_degree() == 7u);
    CHECK(parsed.is_homogeneous());
    CHECK(parsed.degree_in(1) == 6);
    // Reordered input normalizes to the same terms.
    CHECK(SymPoly::parse("-a0*a1^6 - 64*a0^5*a3^2 + 8*a0^2*a1^4*a2 + 64*a0^4*a1*a2*a3 - 16*a0^3*a1^3*a3 - 16*a0^3*a1^2*a2^2") ==
          parsed);
    CHECK_FALSE((a(0) + SymPoly(1)).is_homogeneous());
    CHECK_FALSE(SymPoly().total_degree().has_value());
}

TEST_CASE("SymPoly ring axioms and exact division") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        const auto x = random_sympoly(rng), y = random_sympoly(rng), z = random_sympoly(rng);
        CHECK(((x * y) * z) == (x * (y * z)));
        CHECK((x * (y + z)) == (x * y + x * z));
        CHECK(((x + y) - y) == x);
        if (!y.is_zero()) CHECK(exact_div(x * y, y) == x);
    }
    const auto num = a(0) * a(0) * a(1) - a(0) * a(1) * a(1);
    CHECK(exact_div(num, a(0) * a(1)) == a(0) - a(1));
    CHECK_THROWS_AS(exact_div(a(0) + SymPoly(1), a(1)), Error);
}

TEST_CASE("SymPoly evaluation") {
    const auto p = SymPoly::parse("3*a0^2*a1 - a2");
    const std::vector<Integer> vals{Integer(2), Integer(5), Integer(7)};
    CHECK(p.evaluate(vals) == 53);
}

TEST_CASE("UniPoly degree sentinel and canonical storage") {
    const UniPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree().is_minus_infinity());
    CHECK(zero.degree() == Degree::minus_infinity());
    CHECK_THROWS_AS(zero.degree().value(), Error);
    const UniPoly p(std::vector<ExactScalar>{0, 0, 1, 2});
    CHECK(p.degree().value() == 1);
    CHECK(to_string(p) == "1,2");
}

TEST_CASE("parsing coefficient lists") {
    const auto f = parse_unipoly("1,-1,-3,5,-2");
    CHECK(f.degree().value() == 4);
    CHECK(to_string(f) == "1,-1,-3,5,-2");
    CHECK(to_string(parse_unipoly(" 1/2 , -3/4 ,1")) == "1/2,-3/4,1");
    try {
        parse_unipoly("0,1,2");
        FAIL("expected LeadingZero");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::leading_zero);
    }
    CHECK_THROWS_AS(parse_unipoly("1,,2"), Error);
    CHECK_THROWS_AS(parse_unipoly(""), Error);
    const auto [g, l] = clear_denominators(parse_unipoly("1/2,-3/4,1"));
    CHECK(l == 4);
    CHECK(to_string(g) == "2,-3,4");
}

TEST_CASE("taylor_derivative on the generic quartic") {
    const auto f = symbolic_polynomial(4);
    const auto t3 = taylor_derivative(f, 3);
    REQUIRE(t3.degree().value() == 1);
    CHECK(t3.coeffs()[0] == SymPoly(4) * a(0));
    CHECK(t3.coeffs()[1] == a(1));
    const auto t1 = taylor_derivative(f, 1);
    REQUIRE(t1.degree().value() == 3);
    CHECK(t1.coeffs()[0] == SymPoly(4) * a(0));
    CHECK(t1.coeffs()[1] == SymPoly(3) * a(1));
    CHECK(t1.coeffs()[2] == SymPoly(2) * a(2));
    CHECK(t1.coeffs()[3] == a(3));
    CHECK(taylor_derivative(f, 0) == f);
    CHECK(taylor_derivative(parse_unipoly("1,0,1"), 5).is_zero());
}

TEST_CASE("k! taylor_derivative equals the k-fold derivative") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const auto p = random_unipoly(rng, 3 + rng() % 5);
        for (std::size_t k = 0; k <= 5; ++k) {
            UniPoly d = p;
            for (std::size_t i = 0; i < k; ++i) d = d.derivative();
            CHECK(ExactScalar(factorial(static_cast<unsigned>(k))) * taylor_derivative(p, k) == d);
        }
    }
}

TEST_CASE("shift_mul") {
    CHECK(to_string(shift_mul(parse_unipoly("1,1"), 2)) == "1,1,0,0");
    CHECK(shift_mul(UniPoly(), 3).is_zero());
    const auto lin = SymUniPoly(std::vector<SymPoly>{a(0), a(1)});
    const auto shifted = shift_mul(lin, 1);
    CHECK(shifted.degree().value() == 2);
    CHECK(shifted.coeff(1) == a(1));
    CHECK(shifted.coeff(0).is_zero());
}

TEST_CASE("poly_eval") {
    CHECK(poly_eval(parse_unipoly("1,0,-1"), ExactScalar(2)) == ExactScalar(3));
    CHECK(poly_eval(parse_unipoly("1,-1,-3,5,-2"), ExactScalar(1)).is_zero());
    CHECK(poly_eval(parse_unipoly("4,3,7"), ExactScalar(0)) == ExactScalar(7));
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const auto p = random_unipoly(rng, rng() % 5), q = random_unipoly(rng, rng() % 5);
        const auto x = random_scalar(rng);
        CHECK(poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x));
        CHECK(poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x));
    }
}

TEST_CASE("polynomial exact division") {
    const auto f = parse_unipoly("1,-1,-3,5,-2");
    const auto g = parse_unipoly("1,-1");
    CHECK(to_string(exact_div(f, g)) == "1,0,-3,2");
    CHECK_THROWS_AS(exact_div(f, parse_unipoly("1,5")), Error);
}

TEST_CASE("specialization of the generic polynomial") {
    const std::vector<Integer> vals{Integer(1), Integer(-1), Integer(-3), Integer(5), Integer(-2)};
    CHECK(to_string(specialize(symbolic_polynomial(4), vals)) == "1,-1,-3,5,-2");
}
