#include "multdisc/poly.hpp"

namespace multdisc {

std::vector<ExactScalar> parse_coefficients(std::string_view text) {
    std::vector<ExactScalar> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(ExactScalar::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

UniPoly parse_unipoly(std::string_view text) {
    auto coeffs = parse_coefficients(text);
    if (coeffs.front().is_zero()) fail(Errc::leading_zero, "leading coefficient is zero in '" + std::string(text) + "'");
    return UniPoly(std::move(coeffs));
}

std::pair<IntPoly, Integer> clear_denominators(const UniPoly& p) {
    Integer l(1);
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back((c * ExactScalar(l)).as_integer());
    return {IntPoly(std::move(out)), l};
}

UniPoly to_unipoly(const IntPoly& p) {
    std::vector<ExactScalar> out(p.coeffs().begin(), p.coeffs().end());
    return UniPoly(std::move(out));
}

SymUniPoly symbolic_polynomial(std::size_t n) {
    std::vector<SymPoly> c;
    c.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c.push_back(SymPoly::variable(i));
    return SymUniPoly(std::move(c));
}

IntPoly specialize(const SymUniPoly& p, std::span<const Integer> values) {
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.evaluate(values));
    return IntPoly(std::move(out));
}

}  // namespace multdisc
