#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "multdisc/cli.hpp"
#include "multdisc/comparison.hpp"
#include "multdisc/discriminant.hpp"
#include "multdisc/oracle.hpp"
#include "multdisc/verify.hpp"
#include "multdisc/yhz.hpp"

namespace py = pybind11;
using namespace multdisc;

namespace {

py::object to_py(const Integer& v) { return py::module_::import("builtins").attr("int")(to_string(v)); }

py::object to_py(const ExactScalar& v) {
    if (v.is_integer()) return to_py(v.as_integer());
    return py::module_::import("fractions").attr("Fraction")(v.to_string());
}

/// A comma-separated string or a sequence of ints / Fractions / strings.
UniPoly to_poly(const py::handle& obj) {
    if (py::isinstance<py::str>(obj)) return parse_unipoly(obj.cast<std::string>());
    std::string text;
    for (const auto& item : obj) {
        if (!text.empty()) text += ",";
        text += py::str(item).cast<std::string>();
    }
    return parse_unipoly(text);
}

Partition to_partition(const py::handle& obj) {
    if (py::isinstance<py::str>(obj)) return Partition::parse(obj.cast<std::string>());
    return Partition(obj.cast<std::vector<int>>());
}

ExactScalar to_scalar(const py::handle& obj) { return ExactScalar::parse(py::str(obj).cast<std::string>()); }

DmuOptions options(const std::string& engine, unsigned workers) {
    DmuOptions o;
    o.workers = workers;
    if (engine == "direct") o.engine = DmuEngine::direct;
    else if (engine == "reduced") o.engine = DmuEngine::reduced;
    else if (engine != "automatic") fail(Errc::parse_error, "engine must be automatic, direct or reduced");
    return o;
}

py::list coefficient_list(const UniPoly& f) {
    py::list out;
    for (const auto& c : f.coeffs()) out.append(to_py(c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_multdisc, m) {
    m.doc() = "Exact multiplicity discriminants of univariate polynomials";
    py::register_exception<Error>(m, "MultdiscError");

    m.def("partitions", [](int n, int k) {
        std::vector<std::vector<int>> out;
        for (const auto& p : partitions(n, k)) out.push_back(p.parts());
        return out;
    }, py::arg("n"), py::arg("m"));

    m.def("classify", [](const py::object& coeffs, const std::string& engine, unsigned workers) {
        const auto r = classify_report(to_poly(coeffs), options(engine, workers));
        py::list certs;
        for (const auto& c : r.certificates) certs.append(py::make_tuple(c.mu.parts(), to_py(c.value)));
        py::dict d;
        d["degree"] = r.degree;
        d["ndr"] = r.ndr;
        d["multiplicity"] = r.multiplicity.parts();
        d["certificates"] = certs;
        return d;
    }, py::arg("coeffs"), py::arg("engine") = "automatic", py::arg("workers") = 0);

    m.def("dmu", [](const py::object& coeffs, const py::object& mu, const std::string& engine, unsigned workers) {
        return to_py(dmu(to_poly(coeffs), to_partition(mu), options(engine, workers)).value);
    }, py::arg("coeffs"), py::arg("mu"), py::arg("engine") = "automatic", py::arg("workers") = 0);

    m.def("dmu_symbolic", [](std::size_t n, const py::object& mu, std::size_t cap) {
        DmuOptions o;
        o.symbolic_cap = cap;
        return dmu_symbolic(n, to_partition(mu), o).value.to_string();
    }, py::arg("n"), py::arg("mu"), py::arg("symbolic_cap") = kDefaultSymbolicCap);

    m.def("dmu_degree", [](std::size_t n, const py::object& mu) { return dmu_degree(n, to_partition(mu)); });

    m.def("psd", [](const py::object& coeffs) {
        const auto r = psd_sequence(to_poly(coeffs));
        py::list values;
        for (const auto& v : r.psd) values.append(to_py(v));
        return py::make_tuple(values, r.ndr);
    }, py::arg("coeffs"), "Principal subresultant coefficients of (F, F') and the distinct-root count.");

    m.def("s_sequence", [](const py::object& mu) { return s_sequence(to_partition(mu)); });
    m.def("yhz_count", [](const py::object& mu) { return to_py(yhz_count(to_partition(mu))); });
    m.def("yhz_degree", [](const py::object& mu) { return to_py(yhz_degree(to_partition(mu))); });
    m.def("yhz_degree_lower_bound", [](std::size_t n, std::size_t mu2) { return to_py(yhz_degree_lower_bound(n, mu2)); });
    m.def("yhz_condition_symbolic", [](std::size_t n, const py::object& mu) {
        const auto y = yhz_condition_symbolic(n, to_partition(mu));
        std::vector<std::string> eqs;
        for (const auto& e : y.equations) eqs.push_back(e.to_string());
        py::dict d;
        d["equations"] = eqs;
        d["inequation"] = y.inequation.to_string();
        d["s"] = y.s;
        return d;
    });

    m.def("comparison_table", [](std::size_t n, bool witness) {
        TableOptions o;
        o.witness = witness;
        py::list out;
        for (const auto& r : comparison_table(n, o)) {
            py::dict d;
            d["n"] = r.n;
            d["m"] = r.m;
            d["mu"] = r.mu.parts();
            d["num_new"] = to_py(r.num_new);
            d["num_yhz"] = to_py(r.num_yhz);
            d["d_new"] = to_py(r.d_new);
            d["d_yhz"] = to_py(r.d_yhz);
            if (r.witness) d["witness"] = to_py(*r.witness);
            out.append(d);
        }
        return out;
    }, py::arg("n"), py::arg("witness") = false);

    m.def("poly_from_roots", [](const py::list& roots, const std::vector<int>& mults, const py::object& lead) {
        RootSpec spec;
        for (const auto& r : roots) spec.roots.push_back(to_scalar(r));
        spec.mults = mults;
        spec.lead = to_scalar(lead);
        return coefficient_list(poly_from_roots(spec));
    }, py::arg("roots"), py::arg("mults"), py::arg("lead") = 1);

    m.def("dbar_mu", [](const py::object& coeffs, const py::list& alphas, const py::object& mu) {
        std::vector<ExactScalar> a;
        for (const auto& x : alphas) a.push_back(to_scalar(x));
        return to_py(dbar_mu(to_poly(coeffs), a, to_partition(mu)));
    }, py::arg("coeffs"), py::arg("alphas"), py::arg("mu"));

    m.def("run_suite", [](const std::string& name, std::size_t trials, std::uint64_t seed) {
        VerifyOptions o;
        o.trials = trials;
        o.seed = seed;
        const auto r = run_suite(name, o);
        py::dict d;
        d["suite"] = r.suite;
        d["trials"] = r.trials;
        d["checks"] = r.checks;
        d["passed"] = r.ok();
        d["failures"] = r.failures;
        d["notes"] = r.notes;
        return d;
    }, py::arg("suite"), py::arg("trials") = 0, py::arg("seed") = 7);

    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run the command-line front end in-process; returns (exit code, stdout, stderr).");
}
