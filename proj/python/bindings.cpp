#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

#include "bergman/analytic_function.hpp"
#include "bergman/bounds.hpp"
#include "bergman/cli.hpp"
#include "bergman/errors.hpp"
#include "bergman/extremal.hpp"
#include "bergman/function_spec.hpp"
#include "bergman/norms.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/special_fn.hpp"
#include "bergman/suites.hpp"

namespace py = pybind11;
using namespace bergman;
using AF = AnalyticFunction;

namespace {

QuadratureScheme scheme_of(double rel_tol, int n_radial, int n_angular, int max_refinements) {
    QuadratureScheme s;
    s.rel_tol = rel_tol;
    s.n_radial = n_radial;
    s.n_angular = n_angular;
    s.max_refinements = max_refinements;
    return s;
}

SearchConfig config_of(int n_coeffs, int restarts, int max_iters, std::uint64_t seed) {
    SearchConfig c;
    c.n_coeffs = n_coeffs;
    c.restarts = restarts;
    c.max_iters = max_iters;
    c.seed = seed;
    return c;
}

py::dict report_dict(const BoundReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["alpha"] = r.alpha;
    d["p"] = r.p;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["relation"] = relation_symbol(r.relation);
    d["margin"] = r.margin;
    d["passed"] = r.passed;
    d["tolerance"] = r.tolerance;
    d["note"] = r.note;
    return d;
}

py::list reports(const std::vector<BoundReport>& rs) {
    py::list out;
    for (const auto& r : rs) out.append(report_dict(r));
    return out;
}

#define SCHEME_ARGS                                                                                 \
    py::arg("rel_tol") = 1e-9, py::arg("n_radial") = 128, py::arg("n_angular") = 512,              \
        py::arg("max_refinements") = 6
#define SEARCH_ARGS                                                                                 \
    py::arg("n_coeffs") = 24, py::arg("restarts") = 16, py::arg("max_iters") = 2000, py::arg("seed") = 1

}  // namespace

PYBIND11_MODULE(_bergman, m) {
    m.doc() = "Bloch-to-Bergman inclusion norms and extremal estimates";

    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_OverflowError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
    py::register_exception<SearchError>(m, "SearchError", PyExc_RuntimeError);
    py::register_exception<BracketError>(m, "BracketError", PyExc_RuntimeError);

    m.def("gamma", [](double x) { return gamma(PositiveReal(x)); }, py::arg("x"));
    m.def("ln_gamma", [](double x) { return ln_gamma(PositiveReal(x)); }, py::arg("x"));
    m.def("beta", [](double x, double y) { return beta(PositiveReal(x), PositiveReal(y)); }, py::arg("x"),
          py::arg("y"));

    py::class_<AF>(m, "Function")
        .def_static("parse", &parse_function_spec, py::arg("spec"))
        .def_static("moebius", &AF::moebius, py::arg("a"))
        .def_static("kernel", &AF::kernel, py::arg("zeta"), py::arg("p"), py::arg("alpha"))
        .def_static("log_one_sided", &AF::log_one_sided, py::arg("scale"))
        .def_static("log_two_sided", &AF::log_two_sided, py::arg("scale"))
        .def_static("monomial", &AF::monomial, py::arg("n"), py::arg("c") = cplx{1.0, 0.0})
        .def_static("constant", &AF::constant, py::arg("c"))
        .def_static("taylor", py::overload_cast<std::vector<cplx>>(&AF::taylor), py::arg("coefficients"))
        .def_static("extremal_fzeta", &AF::extremal_fzeta, py::arg("gamma"), py::arg("delta"), py::arg("zeta"))
        .def_static(
            "atomic_b1",
            [](const std::vector<std::pair<cplx, cplx>>& atoms) {
                std::vector<model::Atom> a;
                for (const auto& [b, pt] : atoms) a.push_back({b, pt});
                return AF::atomic_b1(a);
            },
            py::arg("atoms"))
        .def_property_readonly("kind", &AF::kind)
        .def("__call__", [](const AF& f, cplx z) { return eval(f, z); }, py::arg("z"))
        .def("derivative_at", &AF::derivative_at, py::arg("z"), py::arg("k"))
        .def("coefficients", &AF::coefficients, py::arg("n"))
        .def("__repr__", [](const AF& f) { return "<bergman.Function " + f.kind() + ">"; });

    m.def("bloch_norm", &bloch_norm, py::arg("f"));
    m.def("normalize_bloch", &normalize_bloch, py::arg("f"));
    m.def(
        "bergman_norm",
        [](const AF& f, double p, double alpha, double rel_tol, int nr, int na, int mr) {
            return bergman_norm(f, p, alpha, scheme_of(rel_tol, nr, na, mr)).value;
        },
        py::arg("f"), py::arg("p"), py::arg("alpha"), SCHEME_ARGS);
    m.def(
        "besov_norm",
        [](const AF& f, double q, const std::string& variant, double rel_tol, int nr, int na, int mr) {
            if (variant != "norm1" && variant != "norm2") throw ArgumentError("variant must be norm1 or norm2");
            const auto v = variant == "norm1" ? BesovVariant::norm1 : BesovVariant::norm2;
            return besov_norm(f, q, v, scheme_of(rel_tol, nr, na, mr)).value;
        },
        py::arg("f"), py::arg("q"), py::arg("variant") = "norm1", SCHEME_ARGS);
    m.def("a2_norm_series", &a2_norm_series, py::arg("f"), py::arg("alpha"), py::arg("rel_tol") = 1e-7);

    m.def("pointwise_bound", &pointwise_bound, py::arg("norm"), py::arg("p"), py::arg("alpha"), py::arg("zeta"));
    m.def("contractivity_threshold", &contractivity_threshold, py::arg("alpha"));
    m.def("growth_lower", &growth_lower, py::arg("alpha"), py::arg("p"));
    m.def("growth_upper", &growth_upper, py::arg("alpha"), py::arg("p"));
    m.def("bound_2n", &bound_2n, py::arg("alpha"), py::arg("n"), py::arg("c2"));

    m.def(
        "verify_inclusion",
        [](double alpha, double p, std::uint64_t seed) {
            return reports(verify_inclusion_suite(alpha, p, default_sample(seed), {}, seed));
        },
        py::arg("alpha"), py::arg("p"), py::arg("seed") = 1);
    m.def(
        "verify_identities", [](double alpha, std::uint64_t seed) { return reports(verify_identity_suite(alpha, seed)); },
        py::arg("alpha"), py::arg("seed") = 1);

    m.def(
        "search_c_tilde",
        [](double alpha, double p, int n, int restarts, int iters, std::uint64_t seed, double rel_tol) {
            const auto e = search_c_tilde(alpha, p, config_of(n, restarts, iters, seed), scheme_of(rel_tol, 128, 512, 6));
            py::dict d;
            d["alpha"] = e.alpha;
            d["p"] = e.p;
            d["c_tilde"] = e.c_tilde;
            d["residual"] = e.residual;
            const auto c = e.coefficients.coefficients();
            d["coefficients"] = std::vector<cplx>(c.begin(), c.end());
            d["function"] = e.function;
            return d;
        },
        py::arg("alpha"), py::arg("p"), SEARCH_ARGS, py::arg("rel_tol") = 1e-9);
    m.def(
        "p_alpha_bracket",
        [](double alpha, double p_lo, double p_hi, int n, int restarts, int iters, std::uint64_t seed, double rel_tol) {
            const auto b =
                p_alpha_bracket(alpha, p_lo, p_hi, config_of(n, restarts, iters, seed), scheme_of(rel_tol, 128, 512, 6));
            return py::make_tuple(b.lo, b.hi);
        },
        py::arg("alpha"), py::arg("p_lo"), py::arg("p_hi"), SEARCH_ARGS, py::arg("rel_tol") = 1e-9);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
