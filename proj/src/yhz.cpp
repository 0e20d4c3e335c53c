#include "multdisc/yhz.hpp"

#include <algorithm>

namespace multdisc {

std::vector<std::size_t> s_sequence(const Partition& mu) {
    std::vector<std::size_t> s;
    for (int i = 1; i <= mu.largest(); ++i) {
        std::size_t total = 0;
        for (int part : mu.parts()) total += static_cast<std::size_t>(std::max(part - i, 0));
        s.push_back(total);
    }
    return s;
}

std::size_t parts_above(const Partition& mu, std::size_t j) {
    return static_cast<std::size_t>(
        std::count_if(mu.parts().begin(), mu.parts().end(), [j](int part) { return static_cast<std::size_t>(part) > j; }));
}

Integer yhz_count(const Partition& mu) {
    Integer total(1);
    for (int part : mu.parts())
        if (part >= 3) total += binomial(static_cast<unsigned long>(part - 1), 2);
    return total;
}

Integer yhz_degree(const Partition& mu) {
    if (mu.size() < 2) fail(Errc::precondition, "yhz_degree needs at least two parts");
    const auto mu1 = static_cast<std::size_t>(mu[0]);
    const auto mu2 = static_cast<std::size_t>(mu[1]);
    auto factor = [&](std::size_t j) { return Integer(static_cast<unsigned long>(2 * parts_above(mu, j) - 1)); };
    Integer d(1);
    for (std::size_t j = 0; j + 1 < mu2; ++j) d *= factor(j);
    if (mu1 == mu2 + 1) return d * Integer(static_cast<unsigned long>(2 * parts_above(mu, mu2 - 1) + 1));
    d *= factor(mu2 - 1);
    if (mu1 > mu2 + 1) d *= Integer(static_cast<unsigned long>(2 * (mu1 - mu2) - 1));
    return d;
}

Integer yhz_degree_lower_bound(std::size_t n, std::size_t mu2) {
    if (mu2 < 1) fail(Errc::precondition, "lower bound needs mu2 >= 1");
    return Integer(static_cast<unsigned long>(2 * n)) + pow(Integer(3), static_cast<unsigned long>(mu2)) -
           Integer(static_cast<unsigned long>(4 * mu2));
}

YhzCondition<SymPoly> yhz_condition_symbolic(std::size_t n, const Partition& mu) {
    return yhz_condition(symbolic_polynomial(n), mu);
}

std::optional<unsigned> yhz_max_degree(const YhzCondition<SymPoly>& condition) {
    std::optional<unsigned> best = condition.inequation.total_degree();
    for (const auto& e : condition.equations) {
        const auto d = e.total_degree();
        if (d && (!best || *d > *best)) best = d;
    }
    return best;
}

}  // namespace multdisc
