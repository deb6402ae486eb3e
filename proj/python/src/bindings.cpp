// Python bindings. Structured results cross the boundary as JSON text and are
// decoded on the Python side; exact rationals travel as "p/q" strings.

#include <complex>
#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "pmlv/cli.hpp"
#include "pmlv/cyclotomic.hpp"
#include "pmlv/errors.hpp"
#include "pmlv/lvalues.hpp"
#include "pmlv/partition.hpp"
#include "pmlv/verify.hpp"

namespace py = pybind11;
using namespace pmlv;
using nlohmann::json;

namespace {

std::complex<double> to_py(const Complex& z)
{
    return {z.real().to_double(), z.imag().to_double()};
}

OracleOptions oracle_options(long T, int digits)
{
    OracleOptions o;
    o.truncation = T;
    o.digits = digits;
    return o;
}

py::dict oracle_dict(const OracleResult& r, int digits)
{
    py::dict d;
    d["value"] = to_py(r.value);
    d["value_str"] = r.value.real().str(digits);
    d["value_imag_str"] = r.value.imag().str(digits);
    d["error_estimate"] = r.error_estimate.to_double();
    d["partial_sum"] = to_py(r.partial_sum);
    d["averaged"] = r.averaged;
    d["flagged"] = r.flagged;
    return d;
}

std::vector<std::vector<int>> as_lists(const std::vector<Partition>& ps)
{
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) {
        out.push_back(p.parts());
    }
    return out;
}

std::string symbolic_json(const SymbolicValue& v)
{
    return to_json(v).dump();
}

} // namespace

PYBIND11_MODULE(_pmlv, m)
{
    m.doc() = "partial multiple L-values: oracle sums, closed forms and generating functions";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_IndexError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ArithmeticError);

    m.def("bernoulli", [](std::size_t i) { return bernoulli(i).str(); }, py::arg("m"));

    m.def("enumerate_partitions", [](int k) { return as_lists(enumerate_partitions(k)); }, py::arg("k"));
    m.def("unique_even_mu", [](const std::vector<int>& lam) { return unique_even_mu(Partition(lam)).parts(); },
          py::arg("parts"));
    m.def("monomial_at_roots",
          [](const std::vector<int>& lam, int n) { return monomial_at_roots(Partition(lam), n).str(); },
          py::arg("parts"), py::arg("n"));

    m.def(
        "oracle_eval",
        [](int N, int M, const std::vector<int>& weights, long T, int digits) {
            OracleResult r;
            {
                py::gil_scoped_release release;
                r = oracle_eval(LValueSpec::make(N, M, weights), oracle_options(T, digits));
            }
            return oracle_dict(r, digits);
        },
        py::arg("N"), py::arg("M"), py::arg("weights"), py::arg("T") = 1000000, py::arg("digits") = 30);

    m.def("finite_partial_S2", [](int k, long p) { return finite_partial_S2(k, p).str(); }, py::arg("k"),
          py::arg("p"));

    m.def("closed_form", [](int n, int k) { return symbolic_json(closed_S_k(n, k)); }, py::arg("n"),
          py::arg("k"));
    m.def("Z_n_k", [](int n, int k) { return symbolic_json(Z_n_k(n, k)); }, py::arg("n"), py::arg("k"));
    m.def(
        "bernoulli_S_k_even",
        [](int n, int k, const std::string& form) {
            return symbolic_json(bernoulli_S_k_even(n, k, parse_bernoulli_form(form)));
        },
        py::arg("n"), py::arg("k"), py::arg("form") = "conv");
    m.def(
        "double_zeta_remark",
        [](int k, const std::string& order) {
            if (order != "first" && order != "second") {
                throw DomainError("order must be first or second");
            }
            return symbolic_json(double_zeta_remark(k, order == "first" ? DoubleZetaOrder::First
                                                                         : DoubleZetaOrder::Second));
        },
        py::arg("k"), py::arg("order") = "first");
    m.def("normalize_even_zetas",
          [](const std::string& v) { return symbolic_json(normalize_even_zetas(symbolic_from_json(json::parse(v)))); },
          py::arg("value"));
    m.def("numeric_eval",
          [](const std::string& v, int digits) { return numeric_eval(symbolic_from_json(json::parse(v)), digits).str(digits); },
          py::arg("value"), py::arg("digits") = 30);

    m.def(
        "genfun_exact",
        [](const std::string& series, int N, int M, int n, int order) {
            TruncatedSeries<SymbolicValue> s(0);
            if (series == "U") {
                s = genfun_U_exact(N, M, n, order);
            } else if (series == "S1") {
                s = genfun_S1_exact(M, n, order);
            } else if (series == "P") {
                s = genfun_P_exact(N, M, n, order);
            } else if (series == "P2") {
                s = genfun_P2(n, order);
            } else {
                throw DomainError("series must be U, S1, P or P2");
            }
            return to_json(s).dump();
        },
        py::arg("series"), py::arg("N"), py::arg("M"), py::arg("n"), py::arg("order"));
    m.def(
        "genfun_numeric",
        [](const std::string& series, int N, int M, int n, int order, int digits) {
            TruncatedSeries<Complex> s(0);
            if (series == "U") {
                s = genfun_U_numeric(N, M, n, order, digits);
            } else if (series == "S1") {
                s = genfun_S1_numeric(M, n, order, digits);
            } else if (series == "P") {
                s = genfun_P_numeric(N, M, n, order, digits);
            } else {
                throw DomainError("series must be U, S1 or P");
            }
            std::vector<std::complex<double>> out;
            for (const auto& c : s.coeffs()) {
                out.push_back(to_py(c));
            }
            return out;
        },
        py::arg("series"), py::arg("N"), py::arg("M"), py::arg("n"), py::arg("order"), py::arg("digits") = 30);

    m.def(
        "gamma_product_check",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b, long k_start, int digits) {
            std::vector<Rational> qa, qb;
            for (const auto& s : a) {
                qa.push_back(Rational::parse(s));
            }
            for (const auto& s : b) {
                qb.push_back(Rational::parse(s));
            }
            return gamma_product_check(qa, qb, k_start, digits);
        },
        py::arg("a"), py::arg("b"), py::arg("k_start"), py::arg("digits") = 20);

    m.def(
        "lemma_decomposition_check",
        [](int N, int M, int n, int k, long T, double tolerance) {
            DecompositionReport r;
            {
                py::gil_scoped_release release;
                r = lemma_decomposition_check(N, M, n, k, oracle_options(T, 30), tolerance);
            }
            json checks = json::array();
            for (const auto& c : r.checks) {
                checks.push_back({{"name", c.name}, {"gap", c.gap}, {"tolerance", c.tolerance}, {"pass", c.pass}});
            }
            return json{{"pass", r.pass()}, {"max_gap", r.max_gap()}, {"checks", checks}}.dump();
        },
        py::arg("N"), py::arg("M"), py::arg("n"), py::arg("k"), py::arg("T") = 100000, py::arg("tolerance") = 1e-8);

    m.def(
        "verify",
        [](const std::string& suite, int max_k, long T, int digits, int jobs) {
            VerifyOptions o;
            o.suite = suite;
            o.max_k = max_k;
            o.truncation = T;
            o.digits = digits;
            o.jobs = jobs;
            std::vector<CheckResult> results;
            {
                py::gil_scoped_release release;
                results = run_verification(o);
            }
            json out = json::array();
            for (const auto& c : results) {
                out.push_back(to_json(c));
            }
            return out.dump();
        },
        py::arg("suite") = "all", py::arg("max_k") = 3, py::arg("T") = 1000000, py::arg("digits") = 30,
        py::arg("jobs") = 1);

    m.def(
        "run_cli",
        [](const std::string& command, py::dict options) {
            JobConfig c;
            c.command = command;
            c.timing = false;
            for (auto item : options) {
                const auto key = py::cast<std::string>(item.first);
                const py::handle v = item.second;
                if (key == "N") c.N = py::cast<int>(v);
                else if (key == "M") c.M = py::cast<int>(v);
                else if (key == "n") c.n = py::cast<int>(v);
                else if (key == "k") c.k = py::cast<int>(v);
                else if (key == "weights") c.weights = py::cast<std::vector<int>>(v);
                else if (key == "T") c.truncation = py::cast<long>(v);
                else if (key == "precision") c.digits = py::cast<int>(v);
                else if (key == "mode") c.mode = py::cast<std::string>(v);
                else if (key == "output") c.output = py::cast<std::string>(v);
                else if (key == "normalize") c.normalize = py::cast<bool>(v);
                else if (key == "form") c.form = py::cast<std::string>(v);
                else if (key == "series") c.series = py::cast<std::string>(v);
                else if (key == "order") c.order = py::cast<int>(v);
                else if (key == "suite") c.suite = py::cast<std::string>(v);
                else if (key == "max_k") c.max_k = py::cast<int>(v);
                else if (key == "jobs") c.jobs = py::cast<int>(v);
                else throw DomainError("unknown option '" + key + "'");
            }
            std::ostringstream out, err;
            int status;
            {
                py::gil_scoped_release release;
                status = run(c, out, err);
            }
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("command"), py::arg("options") = py::dict());
}
