#include "multdisc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "multdisc/comparison.hpp"
#include "multdisc/discriminant.hpp"
#include "multdisc/verify.hpp"
#include "multdisc/yhz.hpp"

namespace multdisc::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
    std::string format = "text";
    std::optional<unsigned> workers;
    std::string engine = "automatic";
    std::size_t truncate = 0;
};

unsigned env_workers() {
    if (const char* v = std::getenv("MULTDISC_WORKERS")) {
        try {
            const long w = std::stol(v);
            if (w >= 1) return static_cast<unsigned>(w);
        } catch (const std::exception&) {
        }
    }
    return 0;
}

DmuOptions dmu_options(const Common& c) {
    DmuOptions o;
    o.workers = c.workers ? *c.workers : env_workers();
    if (c.engine == "direct") o.engine = DmuEngine::direct;
    else if (c.engine == "reduced") o.engine = DmuEngine::reduced;
    return o;
}

void add_common(CLI::App* sub, Common& c, const std::vector<std::string>& formats) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--workers", c.workers, "Worker threads (default: MULTDISC_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--engine", c.engine, "Numeric D_mu engine")->check(CLI::IsMember({"automatic", "direct", "reduced"}));
}

Json parts_json(const Partition& mu) { return Json(mu.parts()); }

std::string show(const std::string& decimal, const Common& c) { return truncate_digits(decimal, c.truncate); }

int exit_for(const Error& e) {
    switch (e.code()) {
        case Errc::ambiguous_classification:
        case Errc::chain_degenerate: return anomaly;
        case Errc::parse_error:
        case Errc::leading_zero:
        case Errc::degree_mismatch:
        case Errc::degree_out_of_range:
        case Errc::zero_polynomial:
        case Errc::cap_exceeded:
        case Errc::unknown_suite:
        case Errc::empty_domain:
        case Errc::precondition:
        case Errc::duplicate_roots:
        case Errc::zero_lead: return usage;
        default: return internal;
    }
}

// ---- classify -------------------------------------------------------------

Json classify_json(const ClassifyReport& r) {
    Json j;
    j["degree"] = r.degree;
    j["ndr"] = r.ndr;
    j["multiplicity"] = parts_json(r.multiplicity);
    Json certs = Json::array();
    for (const auto& c : r.certificates) certs.push_back(Json{{"mu", parts_json(c.mu)}, {"value", to_string(c.value)}});
    j["certificates"] = certs;
    return j;
}

std::string classify_text(const std::string& input, const ClassifyReport& r, const Common& c) {
    std::string line = input + ": multiplicity " + r.multiplicity.bracketed() + " (degree " + std::to_string(r.degree) +
                       ", ndr " + std::to_string(r.ndr) + ")";
    if (!r.certificates.empty()) {
        line += ";";
        for (const auto& cert : r.certificates) line += " D" + cert.mu.bracketed() + "=" + show(to_string(cert.value), c);
    }
    return line;
}

std::string strip_comment(std::string line) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

int cmd_classify(const std::optional<std::string>& coeffs, const std::optional<std::string>& file, const Common& c,
                 std::ostream& out, std::ostream& err) {
    std::vector<std::pair<std::string, std::size_t>> inputs;  // text, line number (0 for inline)
    if (coeffs) {
        inputs.emplace_back(*coeffs, 0);
    } else {
        std::ifstream in(*file);
        if (!in) {
            err << "error: cannot read " << *file << "\n";
            return usage;
        }
        std::string line;
        for (std::size_t no = 1; std::getline(in, line); ++no) {
            auto text = strip_comment(line);
            if (!text.empty()) inputs.emplace_back(std::move(text), no);
        }
    }
    const auto options = dmu_options(c);
    int status = ok;
    for (const auto& [text, no] : inputs) {
        try {
            const auto report = classify_report(parse_unipoly(text), options);
            if (c.format == "json")
                out << classify_json(report).dump() << "\n";
            else
                out << classify_text(text, report, c) << "\n";
        } catch (const Error& e) {
            err << "error" << (no != 0 ? " (line " + std::to_string(no) + ")" : std::string()) << ": " << e.what() << "\n";
            status = std::max(status, exit_for(e));
        }
    }
    return status;
}

// ---- dmu --------------------------------------------------------------------

Partition parse_mu_for(std::size_t n, const std::string& text) {
    const auto mu = Partition::parse(text);
    if (static_cast<std::size_t>(mu.total()) != n)
        fail(Errc::parse_error, "partition " + mu.bracketed() + " sums to " + std::to_string(mu.total()) + ", not " +
                                    std::to_string(n));
    return mu;
}

UniPoly parse_eval(std::size_t n, const std::string& text) {
    auto f = parse_unipoly(text);
    if (f.degree().value() != n)
        fail(Errc::degree_mismatch, "--eval needs " + std::to_string(n + 1) + " coefficients (degree " + std::to_string(n) + ")");
    return f;
}

int cmd_dmu(std::size_t n, const std::string& mu_text, bool symbolic, const std::optional<std::string>& eval,
            std::size_t cap, const Common& c, std::ostream& out) {
    const auto mu = parse_mu_for(n, mu_text);
    auto options = dmu_options(c);
    options.symbolic_cap = cap;
    if (symbolic) {
        const auto r = dmu_symbolic(n, mu, options);
        const auto degree = r.value.total_degree();
        if (c.format == "json") {
            Json j;
            j["n"] = n;
            j["mu"] = parts_json(mu);
            j["mode"] = "symbolic";
            j["value"] = r.value.to_string();
            j["total_degree"] = degree ? Json(*degree) : Json(nullptr);
            j["terms"] = r.value.term_count();
            j["homogeneous"] = r.value.is_homogeneous();
            j["rearrangements"] = r.term_count;
            j["matrix_dim"] = r.matrix_dim;
            out << j.dump() << "\n";
        } else {
            out << r.value.to_string() << "\n";
            out << "total degree: " << (degree ? std::to_string(*degree) : std::string("-inf")) << "\n";
            out << "terms: " << r.value.term_count() << "\n";
            out << "homogeneous: " << (r.value.is_homogeneous() ? "yes" : "no") << "\n";
            out << "rearrangements: " << r.term_count << "\n";
            out << "matrix size: " << r.matrix_dim << "\n";
        }
        return ok;
    }
    const auto r = dmu(parse_eval(n, *eval), mu, options);
    if (c.format == "json") {
        Json j;
        j["n"] = n;
        j["mu"] = parts_json(mu);
        j["mode"] = "numeric";
        j["value"] = r.value.to_string();
        j["rearrangements"] = r.term_count;
        j["matrix_dim"] = r.matrix_dim;
        out << j.dump() << "\n";
    } else {
        out << show(r.value.to_string(), c) << "\n";
    }
    return ok;
}

// ---- yhz --------------------------------------------------------------------

template <class R>
Json yhz_json(const YhzCondition<R>& y, std::size_t n) {
    Json j;
    j["n"] = n;
    j["mu"] = parts_json(y.mu);
    j["s"] = y.s;
    Json eqs = Json::array();
    for (const auto& e : y.equations) eqs.push_back(to_string(e));
    j["equations"] = eqs;
    j["inequation"] = to_string(y.inequation);
    j["count"] = y.equations.size() + 1;
    return j;
}

int cmd_yhz(std::size_t n, const std::string& mu_text, bool symbolic, const std::optional<std::string>& eval,
            std::size_t cap, const Common& c, std::ostream& out) {
    const auto mu = parse_mu_for(n, mu_text);
    std::string s_text;
    if (symbolic) {
        if (n > cap) fail(Errc::cap_exceeded, "symbolic YHZ condition limited to degree " + std::to_string(cap));
        const auto y = yhz_condition_symbolic(n, mu);
        const auto degree = yhz_max_degree(y);
        if (c.format == "json") {
            auto j = yhz_json(y, n);
            j["max_degree"] = degree ? Json(*degree) : Json(nullptr);
            j["closed_form_count"] = to_string(yhz_count(mu));
            j["closed_form_degree"] = mu.size() >= 2 ? Json(to_string(yhz_degree(mu))) : Json(nullptr);
            out << j.dump() << "\n";
            return ok;
        }
        for (std::size_t i = 0; i < y.equations.size(); ++i) out << "E" << i + 1 << " = " << y.equations[i].to_string() << " = 0\n";
        out << "I = " << y.inequation.to_string() << " != 0\n";
        out << "count: " << y.equations.size() + 1 << "\n";
        out << "max degree: " << (degree ? std::to_string(*degree) : std::string("-inf")) << "\n";
        return ok;
    }
    const auto f = clear_denominators(parse_eval(n, *eval)).first;
    const auto y = yhz_condition(f, mu);
    if (c.format == "json") {
        auto j = yhz_json(y, n);
        j["holds"] = y.holds();
        out << j.dump() << "\n";
        return ok;
    }
    for (std::size_t i = 0; i < y.equations.size(); ++i) out << "E" << i + 1 << " = " << show(to_string(y.equations[i]), c) << "\n";
    out << "I = " << show(to_string(y.inequation), c) << "\n";
    out << "holds: " << (y.holds() ? "yes" : "no") << "\n";
    return ok;
}

// ---- table ------------------------------------------------------------------

int cmd_table(std::size_t n, std::size_t measure_upto, bool witness, const Common& c, std::ostream& out) {
    TableOptions options;
    options.witness = witness;
    options.measure_upto = measure_upto;
    options.dmu = dmu_options(c);
    const auto rows = comparison_table(n, options);
    const bool measured = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.measured.has_value(); });

    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json j;
            j["n"] = r.n;
            j["m"] = r.m;
            j["mu"] = parts_json(r.mu);
            j["num_new"] = to_string(r.num_new);
            j["num_yhz"] = to_string(r.num_yhz);
            j["d_new"] = to_string(r.d_new);
            j["d_yhz"] = to_string(r.d_yhz);
            if (r.witness) {
                j["witness"] = to_string(*r.witness);
                j["witness_degree_ok"] = r.witness_degree_ok;
            }
            if (r.measured) {
                const auto& ms = *r.measured;
                j["measured"] = Json{{"num_new", ms.num_new},
                                     {"d_new", ms.d_new ? Json(*ms.d_new) : Json(nullptr)},
                                     {"num_yhz", ms.num_yhz},
                                     {"d_yhz", ms.d_yhz ? Json(*ms.d_yhz) : Json(nullptr)},
                                     {"chain_degenerate", ms.chain_degenerate},
                                     {"match", ms.matches}};
            }
            arr.push_back(std::move(j));
        }
        out << arr.dump() << "\n";
        return ok;
    }
    if (c.format == "csv") {
        out << "n,m,mu,num_new,num_yhz,d_new,d_yhz";
        if (witness) out << ",witness_nonzero";
        if (measured) out << ",measured_d_new,measured_num_yhz,measured_d_yhz,match";
        out << "\n";
        for (const auto& r : rows) {
            out << r.n << "," << r.m << ",\"" << r.mu.bracketed() << "\"," << r.num_new << "," << r.num_yhz << "," << r.d_new
                << "," << r.d_yhz;
            if (witness) out << "," << (r.witness && !is_zero(*r.witness) ? "true" : "false");
            if (measured) {
                if (r.measured) {
                    const auto& ms = *r.measured;
                    out << "," << (ms.d_new ? std::to_string(*ms.d_new) : "") << "," << ms.num_yhz << ","
                        << (ms.d_yhz ? std::to_string(*ms.d_yhz) : "") << "," << (ms.matches ? "true" : "false");
                } else {
                    out << ",,,,";
                }
            }
            out << "\n";
        }
        return ok;
    }
    out << "  n  m  mu               #NEW  #YHZ  dNEW  dYHZ";
    if (witness) out << "  witness";
    if (measured) out << "  measured";
    out << "\n";
    for (const auto& r : rows) {
        std::ostringstream line;
        line << std::setw(3) << r.n << std::setw(3) << r.m << "  " << std::left << std::setw(15) << r.mu.bracketed()
             << std::right << std::setw(6) << r.num_new << std::setw(6) << r.num_yhz << std::setw(6) << r.d_new
             << std::setw(6) << r.d_yhz;
        if (witness) line << "  " << (r.witness && !is_zero(*r.witness) ? "nonzero" : "ZERO");
        if (r.measured) line << "  " << (r.measured->matches ? "match" : "MISMATCH");
        out << line.str() << "\n";
    }
    return ok;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const std::string& suite, std::size_t trials, std::uint64_t seed, const Common& c, std::ostream& out) {
    VerifyOptions options;
    options.trials = trials;
    options.seed = seed;
    options.dmu = dmu_options(c);
    const auto report = run_suite(suite, options);
    if (c.format == "json") {
        Json j;
        j["suite"] = report.suite;
        j["trials"] = report.trials;
        j["seed"] = report.seed;
        j["checks"] = report.checks;
        j["pass"] = report.ok();
        j["failures"] = report.failures;
        j["notes"] = report.notes;
        out << j.dump() << "\n";
    } else {
        out << "suite " << report.suite << ": " << (report.ok() ? "PASS" : "FAIL") << " (" << report.checks << " checks, "
            << report.trials << " trials, seed " << report.seed << ")\n";
        for (const auto& f : report.failures) out << "  counterexample: " << f << "\n";
        for (const auto& note : report.notes) out << "  note: " << note << "\n";
    }
    return report.ok() ? ok : anomaly;
}

}  // namespace

std::string truncate_digits(const std::string& decimal, std::size_t max_digits) {
    const std::size_t sign = !decimal.empty() && decimal[0] == '-' ? 1 : 0;
    const std::size_t digits = decimal.size() - sign;
    if (max_digits == 0 || digits <= max_digits) return decimal;
    const std::size_t head = (max_digits + 1) / 2;
    const std::size_t tail = max_digits - head;
    return decimal.substr(0, sign + head) + "…(" + std::to_string(digits) + " digits)…" +
           decimal.substr(decimal.size() - tail);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact multiplicity discriminants of univariate polynomials", "multdisc"};
    app.require_subcommand(1);

    Common common;
    std::optional<std::string> coeffs;
    std::optional<std::string> file;
    std::size_t n = 0;
    std::string mu;
    bool symbolic = false;
    std::optional<std::string> eval;
    std::size_t cap = kDefaultSymbolicCap;
    std::size_t measure_upto = 0;
    bool witness = false;
    std::string suite;
    std::size_t trials = 0;
    std::uint64_t seed = 7;

    auto* classify_cmd = app.add_subcommand("classify", "Multiplicity structure of a polynomial");
    auto* coeffs_opt = classify_cmd->add_option("--coeffs", coeffs, "Coefficients, leading first, comma separated");
    auto* file_opt = classify_cmd->add_option("--file", file, "One polynomial per line; '#' starts a comment");
    coeffs_opt->excludes(file_opt);
    classify_cmd->add_option("--truncate-digits", common.truncate, "Elide the middle of long values in text output");
    add_common(classify_cmd, common, {"text", "json"});

    auto* dmu_cmd = app.add_subcommand("dmu", "The discriminant D_mu, symbolic or evaluated");
    auto* yhz_cmd = app.add_subcommand("yhz", "The repeated-subresultant baseline condition");
    for (auto* sub : {dmu_cmd, yhz_cmd}) {
        sub->add_option("--n", n, "Degree")->required()->check(CLI::PositiveNumber);
        sub->add_option("--mu", mu, "Partition of n, e.g. 3,1")->required();
        auto* sym = sub->add_flag("--symbolic", symbolic, "Generic coefficients a0..an");
        auto* ev = sub->add_option("--eval", eval, "Concrete coefficients, leading first");
        sym->excludes(ev);
        sub->add_option("--symbolic-cap", cap, "Largest degree accepted in symbolic mode");
        sub->add_option("--truncate-digits", common.truncate, "Elide the middle of long values in text output");
        add_common(sub, common, {"text", "json"});
    }

    auto* table_cmd = app.add_subcommand("table", "Size comparison with the baseline condition");
    table_cmd->add_option("--n", n, "Degree")->required();
    table_cmd->add_option("--measure-upto", measure_upto, "Also measure symbolic sizes when n <= K");
    table_cmd->add_flag("--witness", witness, "Evaluate D_mu at a polynomial of structure mu");
    add_common(table_cmd, common, {"text", "csv", "json"});

    auto* verify_cmd = app.add_subcommand("verify", "Run a seeded invariant suite");
    verify_cmd->add_option("--suite", suite, "lemma2 | lemma3 | lemma1 | roundtrip | scaling | yhz-agree")->required();
    verify_cmd->add_option("--trials", trials, "Number of trials (default per suite)");
    verify_cmd->add_option("--seed", seed, "Base seed");
    add_common(verify_cmd, common, {"text", "json"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (classify_cmd->parsed()) {
            if (!coeffs && !file) {
                err << "error: classify needs --coeffs or --file\n";
                return usage;
            }
            return cmd_classify(coeffs, file, common, out, err);
        }
        if (dmu_cmd->parsed() || yhz_cmd->parsed()) {
            if (symbolic == eval.has_value()) {
                err << "error: give exactly one of --symbolic or --eval\n";
                return usage;
            }
            return dmu_cmd->parsed() ? cmd_dmu(n, mu, symbolic, eval, cap, common, out)
                                     : cmd_yhz(n, mu, symbolic, eval, cap, common, out);
        }
        if (table_cmd->parsed()) return cmd_table(n, measure_upto, witness, common, out);
        if (verify_cmd->parsed()) return cmd_verify(suite, trials, seed, common, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal;
    }
    return usage;
}

}  // namespace multdisc::cli
