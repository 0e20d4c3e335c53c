#include "multdisc/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "multdisc/subresultant.hpp"
#include "multdisc/yhz.hpp"

namespace multdisc {

namespace {

template <class R>
std::string matrix_text(const Matrix<R>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i == 0 ? "[" : ",[";
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j == 0 ? "" : ",") + to_string(m(i, j));
        out += "]";
    }
    return out + "]";
}

std::string spec_text(const RootSpec& spec) {
    std::string out = "lead " + spec.lead.to_string() + " roots";
    for (std::size_t i = 0; i < spec.roots.size(); ++i)
        out += " " + spec.roots[i].to_string() + "^" + std::to_string(spec.mults[i]);
    return out;
}

Matrix<Integer> random_matrix(SeededDraw& draw, std::size_t n, long bound) {
    Matrix<Integer> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Integer(draw.uniform(-bound, bound));
    return m;
}

UniPoly random_poly(SeededDraw& draw, std::size_t max_degree, long bound) {
    std::vector<ExactScalar> c;
    for (std::size_t k = 0; k <= max_degree; ++k) c.push_back(ExactScalar(draw.uniform(-bound, bound)));
    return UniPoly(std::move(c));
}

/// F(x + t).
IntPoly translate(const IntPoly& f, const Integer& t) {
    const IntPoly shift(std::vector<Integer>{Integer(1), t});
    IntPoly out;
    for (const auto& c : f.coeffs()) out = out * shift + IntPoly::constant(c);
    return out;
}

std::size_t trials_or_default(const VerifyOptions& options, std::string_view suite) {
    return options.trials != 0 ? options.trials : default_trials(suite);
}

SuiteReport start(std::string_view suite, const VerifyOptions& options) {
    SuiteReport r;
    r.suite = std::string(suite);
    r.trials = trials_or_default(options, suite);
    r.seed = options.seed;
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lemma2", "lemma3", "lemma1", "roundtrip", "scaling", "yhz-agree"};
    return names;
}

std::size_t default_trials(std::string_view suite) {
    static const std::map<std::string, std::size_t, std::less<>> defaults{
        {"lemma2", 200}, {"lemma3", 100}, {"lemma1", 500}, {"roundtrip", 500}, {"scaling", 50}, {"yhz-agree", 60}};
    const auto it = defaults.find(suite);
    if (it == defaults.end()) fail(Errc::unknown_suite, "unknown suite '" + std::string(suite) + "'");
    return it->second;
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) {
    // splitmix64 finalizer over the pair.
    std::uint64_t z = base * 0x9E3779B97F4A7C15ULL + trial + 0x632BE59BD9B4E019ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RootSpec roundtrip_instance(std::uint64_t base_seed, std::uint64_t trial) {
    const std::uint64_t seed = trial_seed(base_seed, trial);
    SeededDraw draw(seed);
    const auto n = static_cast<std::size_t>(draw.uniform(4, 10));
    const auto m = static_cast<std::size_t>(draw.uniform(2, static_cast<long>(n) - 2));
    return random_instance(seed, n, m);
}

SuiteReport verify_lemma2(const VerifyOptions& options) {
    auto r = start("lemma2", options);
    // The 2x2 symbolic instance: A = (a0 a1; a2 a3), B = (a4 a5; a6 a7).
    {
        const Matrix<SymPoly> a{{SymPoly::variable(0), SymPoly::variable(1)}, {SymPoly::variable(2), SymPoly::variable(3)}};
        const Matrix<SymPoly> b{{SymPoly::variable(4), SymPoly::variable(5)}, {SymPoly::variable(6), SymPoly::variable(7)}};
        const auto lhs = det_hadamard_sum(a, b);
        const auto expected = (SymPoly::variable(0) * SymPoly::variable(3) - SymPoly::variable(1) * SymPoly::variable(2)) *
                              (SymPoly::variable(4) * SymPoly::variable(7) + SymPoly::variable(5) * SymPoly::variable(6));
        ++r.checks;
        if (lhs != expected || !check_det_per_identity(a, b))
            r.failures.push_back("symbolic 2x2: sum = " + lhs.to_string() + ", expected " + expected.to_string());
    }
    for (std::size_t t = 0; t < r.trials; ++t) {
        SeededDraw draw(trial_seed(options.seed, t));
        const std::size_t n = 1 + t % 5;
        const auto a = random_matrix(draw, n, 5);
        const auto b = random_matrix(draw, n, 5);
        const Integer lhs = det_hadamard_sum(a, b);
        const Integer rhs = det(a) * permanent(b);
        ++r.checks;
        if (lhs != rhs)
            r.failures.push_back("trial " + std::to_string(t) + ": A=" + matrix_text(a) + " B=" + matrix_text(b) +
                                 " sum=" + to_string(lhs) + " det*per=" + to_string(rhs));
    }
    return r;
}

SuiteReport verify_lemma3(const VerifyOptions& options) {
    auto r = start("lemma3", options);
    // Cubic instance: G_i = x^2 F^{(i)}/i!, dp = 9 a0^3 a3^2.
    {
        const auto f = symbolic_polynomial(3);
        std::vector<SymUniPoly> rows{shift_mul(f, 1), f};
        for (std::size_t i = 1; i <= 3; ++i) rows.push_back(shift_mul(taylor_derivative(f, i), 2));
        const auto value = dp(rows);
        const auto expected = SymPoly(9) * SymPoly::variable(0) * SymPoly::variable(0) * SymPoly::variable(0) *
                              SymPoly::variable(3) * SymPoly::variable(3);
        ++r.checks;
        if (value != expected) r.failures.push_back("cubic dp = " + value.to_string() + ", expected 9*a0^3*a3^2");

        RootSpec spec{{ExactScalar(1), ExactScalar(2), ExactScalar(3)}, {1, 1, 1}, ExactScalar(1)};
        const auto fn = poly_from_roots(spec);
        std::vector<UniPoly> g;
        for (std::size_t i = 1; i <= 3; ++i) g.push_back(shift_mul(taylor_derivative(fn, i), 2));
        const auto sides = dp_ratio_sides(fn, spec.roots, g);
        ++r.checks;
        if (!(sides.lhs == sides.rhs))
            r.failures.push_back("cubic at roots 1,2,3: " + sides.lhs.to_string() + " != " + sides.rhs.to_string());
    }
    for (std::size_t t = 0; t < r.trials; ++t) {
        const std::uint64_t seed = trial_seed(options.seed, t);
        SeededDraw draw(seed);
        const std::size_t n = 1 + t % 5;
        auto spec = random_instance(seed, n, n);
        const auto f = poly_from_roots(spec);
        std::vector<UniPoly> g;
        for (std::size_t i = 0; i < n; ++i) g.push_back(random_poly(draw, 2 * n - 2, 6));
        const auto sides = dp_ratio_sides(f, spec.roots, g);
        ++r.checks;
        if (!(sides.lhs == sides.rhs)) {
            std::string gs;
            for (const auto& gi : g) gs += " [" + to_string(gi) + "]";
            r.failures.push_back("trial " + std::to_string(t) + ": " + spec_text(spec) + " G:" + gs + " lhs=" +
                                 sides.lhs.to_string() + " rhs=" + sides.rhs.to_string());
        }
    }
    return r;
}

SuiteReport verify_lemma1(const VerifyOptions& options) {
    auto r = start("lemma1", options);
    // Anchor: F = (x-1)^3 (x+2), mu = (3,1): both sides -729.
    {
        RootSpec spec{{ExactScalar(1), ExactScalar(-2)}, {3, 1}, ExactScalar(1)};
        const auto f = poly_from_roots(spec);
        const auto mu = Partition({3, 1});
        const auto lhs = dmu(f, mu, options.dmu).value;
        const auto rhs = dbar_mu(f, spec.flattened(), mu);
        ++r.checks;
        if (!(lhs == ExactScalar(-729)) || !(rhs == ExactScalar(-729)))
            r.failures.push_back("anchor (x-1)^3(x+2): dmu=" + lhs.to_string() + " dbar=" + rhs.to_string() + ", expected -729");
    }
    std::size_t instances = 0;
    std::size_t exact_holds = 0;
    std::size_t exact_total = 0;
    for (std::size_t t = 0; t < r.trials; ++t) {
        const auto spec = roundtrip_instance(options.seed, t);
        const std::size_t n = spec.degree();
        if (n > 8) continue;
        ++instances;
        const auto f = poly_from_roots(spec);
        const auto alphas = spec.flattened();
        const auto truth = spec.structure();
        for (const auto& nu : partitions(static_cast<int>(n), static_cast<int>(spec.roots.size()))) {
            const auto d = dmu(f, nu, options.dmu).value;
            const auto db = dbar_mu(f, alphas, nu);
            ++r.checks;
            const bool expect_nonzero = nu == truth;
            if (d.is_zero() != db.is_zero() || db.is_zero() == expect_nonzero)
                r.failures.push_back("trial " + std::to_string(t) + ": " + spec_text(spec) + " nu=" + nu.bracketed() +
                                     " dmu=" + d.to_string() + " dbar=" + db.to_string());
            ExactScalar scale(1);
            for (int k = 0; k < static_cast<int>(n) - nu.smallest(); ++k) scale = scale * f.leading();
            ++exact_total;
            if (d == scale * db) ++exact_holds;
        }
        // Column order of the roots does not matter.
        auto shuffled = alphas;
        std::reverse(shuffled.begin(), shuffled.end());
        ++r.checks;
        if (!(dbar_mu(f, shuffled, truth) == dbar_mu(f, alphas, truth)))
            r.failures.push_back("trial " + std::to_string(t) + ": dbar depends on root order for " + spec_text(spec));
    }
    r.notes.push_back("instances with n <= 8: " + std::to_string(instances));
    r.notes.push_back("dmu == lead^(n-mu_m) * dbar_mu held on " + std::to_string(exact_holds) + "/" +
                      std::to_string(exact_total) + " (instance, candidate) pairs");
    return r;
}

SuiteReport verify_roundtrip(const VerifyOptions& options) {
    auto r = start("roundtrip", options);
    for (std::size_t t = 0; t < r.trials; ++t) {
        const auto spec = roundtrip_instance(options.seed, t);
        const auto f = poly_from_roots(spec);
        const auto truth = spec.structure();
        ++r.checks;
        try {
            const auto ndr = psd_sequence(f).ndr;
            if (ndr != spec.roots.size())
                r.failures.push_back("trial " + std::to_string(t) + ": " + spec_text(spec) + " psd ndr=" + std::to_string(ndr));
            const auto got = classify(f, options.dmu);
            if (got != truth)
                r.failures.push_back("trial " + std::to_string(t) + ": " + spec_text(spec) + " classified " + got.bracketed() +
                                     ", expected " + truth.bracketed());
        } catch (const Error& e) {
            r.failures.push_back("trial " + std::to_string(t) + ": " + spec_text(spec) + " raised " + std::string(errc_name(e.code())) + ": " +
                                 e.what());
        }
    }
    return r;
}

SuiteReport verify_scaling(const VerifyOptions& options) {
    auto r = start("scaling", options);
    for (std::size_t t = 0; t < r.trials; ++t) {
        const std::uint64_t seed = trial_seed(options.seed, t);
        SeededDraw draw(seed);

        // Homogeneity and translation invariance on a structured instance.
        const auto n = static_cast<std::size_t>(draw.uniform(4, 7));
        const auto m = static_cast<std::size_t>(draw.uniform(2, static_cast<long>(n) - 2));
        const auto spec = random_instance(seed, n, m);
        const auto f = clear_denominators(poly_from_roots(spec)).first;
        Integer s(draw.uniform(2, 5));
        if (draw.uniform(0, 1) == 1) s = -s;
        const Integer shift(draw.uniform(-3, 3));
        const auto moved = translate(f, shift);
        for (const auto& nu : partitions(static_cast<int>(n), static_cast<int>(m))) {
            const auto d = dmu(f, nu, options.dmu).value;
            const auto ds = dmu(s * f, nu, options.dmu).value;
            const Integer expected = pow(s, static_cast<unsigned long>(dmu_degree(n, nu))) * d;
            ++r.checks;
            if (ds != expected)
                r.failures.push_back("trial " + std::to_string(t) + ": " + spec_text(spec) + " nu=" + nu.bracketed() + " s=" +
                                     to_string(s) + " dmu(sF)=" + to_string(ds) + " s^d*dmu(F)=" + to_string(expected));
            const auto dt = dmu(moved, nu, options.dmu).value;
            ++r.checks;
            if (is_zero(dt) != is_zero(d))
                r.failures.push_back("trial " + std::to_string(t) + ": " + spec_text(spec) + " nu=" + nu.bracketed() +
                                     " shift=" + to_string(shift) + " dmu(F)=" + to_string(d) + " dmu(F(x+t))=" + to_string(dt));
        }

        // dmu(F, (1,...,1)) = +-res(F, F') for squarefree F of degree <= 6:
        // even trials root-constructed, odd trials random coefficients.
        IntPoly g;
        if (t % 2 == 0) {
            const auto k = static_cast<std::size_t>(draw.uniform(1, 6));
            g = clear_denominators(poly_from_roots(random_instance(seed ^ 0x5bd1e995ULL, k, k))).first;
        } else {
            do {
                const auto k = static_cast<std::size_t>(draw.uniform(1, 6));
                std::vector<Integer> c{Integer(draw.uniform(1, 4) * (draw.uniform(0, 1) == 0 ? 1 : -1))};
                for (std::size_t i = 0; i < k; ++i) c.emplace_back(draw.uniform(-9, 9));
                g = IntPoly(std::move(c));
            } while (is_zero(resultant(g, g.derivative())));
        }
        const std::size_t k = g.degree().value();
        const auto ones = Partition(std::vector<int>(k, 1));
        const auto d1 = dmu(g, ones, options.dmu).value;
        const auto res = resultant(g, g.derivative());
        ++r.checks;
        if (abs(d1) != abs(res) || is_zero(res))
            r.failures.push_back("trial " + std::to_string(t) + ": F=" + to_string(g) + " dmu(F,1^n)=" + to_string(d1) +
                                 " res(F,F')=" + to_string(res));
    }
    return r;
}

SuiteReport verify_yhz_agree(const VerifyOptions& options) {
    auto r = start("yhz-agree", options);
    for (std::size_t t = 0; t < r.trials; ++t) {
        const std::uint64_t seed = trial_seed(options.seed, t);
        SeededDraw draw(seed);
        const auto n = static_cast<std::size_t>(draw.uniform(4, 6));
        const auto m = static_cast<std::size_t>(draw.uniform(2, static_cast<long>(n) - 2));
        const auto spec = random_instance(seed, n, m);
        const auto f = clear_denominators(poly_from_roots(spec)).first;
        const auto truth = spec.structure();
        for (const auto& nu : partitions(static_cast<int>(n), static_cast<int>(m))) {
            const bool expected = nu == truth;
            const bool baseline = yhz_condition(f, nu).holds();
            const bool ours = !is_zero(dmu(f, nu, options.dmu).value);
            ++r.checks;
            if (baseline != expected || ours != expected)
                r.failures.push_back("trial " + std::to_string(t) + ": " + spec_text(spec) + " nu=" + nu.bracketed() +
                                     " yhz=" + (baseline ? "true" : "false") + " dmu!=0: " + (ours ? "true" : "false"));
        }
    }
    return r;
}

SuiteReport run_suite(std::string_view suite, const VerifyOptions& options) {
    if (suite == "lemma2") return verify_lemma2(options);
    if (suite == "lemma3") return verify_lemma3(options);
    if (suite == "lemma1") return verify_lemma1(options);
    if (suite == "roundtrip") return verify_roundtrip(options);
    if (suite == "scaling") return verify_scaling(options);
    if (suite == "yhz-agree") return verify_yhz_agree(options);
    fail(Errc::unknown_suite, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace multdisc
