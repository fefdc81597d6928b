#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "exptaylor/error.hpp"
#include "exptaylor/expr.hpp"
#include "exptaylor/identities.hpp"
#include "exptaylor/jet.hpp"
#include "exptaylor/operator.hpp"
#include "exptaylor/series1d.hpp"
#include "exptaylor/seriesnd.hpp"
#include "exptaylor/stirling.hpp"

namespace py = pybind11;
using namespace exptaylor;

namespace {

std::vector<double> as_vector(const py::object& o) {
    if (py::isinstance<py::float_>(o) || py::isinstance<py::int_>(o)) return {o.cast<double>()};
    return o.cast<std::vector<double>>();
}

OperatorSequence d_lambda(const ExprAst& ast, Complex lambda, double x0, int N, const std::string& method) {
    const auto jet = lift(ast, x0, N);
    if (method == "recursive") return d_lambda_recursive(jet, lambda, N, x0);
    if (method == "stirling") return d_lambda_stirling(jet, default_stirling_table(), lambda, N, x0);
    throw ValidationError("method must be 'recursive' or 'stirling'");
}

std::vector<py::int_> stirling_row(int n) {
    StirlingTable t(n);
    std::vector<py::int_> row;
    for (int k = 0; k <= n; ++k) {
        const std::string s = t.signed_value(n, k).str();
        row.push_back(py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10))));
    }
    return row;
}

}  // namespace

PYBIND11_MODULE(_exptaylor, m) {
    m.doc() = "Exponential Taylor series of one and several variables";

    auto validation = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
    py::register_exception<DiagnosticError>(m, "DiagnosticError", PyExc_RuntimeError);
    py::register_exception<RegionError>(m, "RegionError", validation.ptr());
    // ParseError carries the byte offset as an attribute.
    static PyObject* parse_error = py::exception<ParseError>(m, "ParseError", PyExc_ValueError).ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::object err = py::reinterpret_borrow<py::object>(parse_error)(e.what());
            err.attr("offset") = e.offset();
            PyErr_SetObject(parse_error, err.ptr());
        }
    });

    py::class_<ExprAst>(m, "Expr")
        .def(py::init([](const std::string& src, int dims) { return parse(src, dims); }), py::arg("src"),
             py::arg("dims") = 1)
        .def_property_readonly("dims", &ExprAst::dims)
        .def("__str__", &ExprAst::to_string)
        .def("__repr__", [](const ExprAst& e) { return "Expr('" + e.to_string() + "')"; })
        .def("__call__", [](const ExprAst& e, const std::vector<Complex>& point) { return eval_complex(e, point); })
        .def("__call__", [](const ExprAst& e, Complex x) { return eval_complex(e, x); })
        .def("__eq__", [](const ExprAst& a, const ExprAst& b) { return structurally_equal(a, b); });
    m.def("parse", &parse, py::arg("src"), py::arg("dims") = 1);

    py::class_<OperatorSequence>(m, "OperatorSequence")
        .def_readonly("lam", &OperatorSequence::lambda)
        .def_readonly("center", &OperatorSequence::center)
        .def_readonly("values", &OperatorSequence::values);
    m.def("d_lambda", &d_lambda, py::arg("expr"), py::arg("lam"), py::arg("x0"), py::arg("N"),
          py::arg("method") = "recursive", "D^{lambda,(j)} a(x0) for j = 0..N");
    m.def("lift", [](const ExprAst& e, double x0, int K) {
        const auto j = lift(e, x0, K);
        return std::vector<Complex>(j.coeffs().begin(), j.coeffs().end());
    }, py::arg("expr"), py::arg("x0"), py::arg("K"));
    m.def("stirling_row", &stirling_row, py::arg("n"), "Exact signed s(n, k), k = 0..n");

    py::class_<Expansion1D>(m, "Expansion1D")
        .def_readonly("lam", &Expansion1D::lambda)
        .def_readonly("x0", &Expansion1D::x0)
        .def_readonly("coeffs", &Expansion1D::coeffs)
        .def_property_readonly("order", &Expansion1D::order)
        .def("__call__", &eval_series, py::arg("x"));
    m.def("expand_1d", &expand_1d, py::arg("expr"), py::arg("lam"), py::arg("x0"), py::arg("N"));
    m.def("eval_series", &eval_series, py::arg("expansion"), py::arg("x"));
    m.def("remainder_integral", &remainder_integral, py::arg("expr"), py::arg("lam"), py::arg("x0"),
          py::arg("x"), py::arg("N"), py::arg("quad_nodes") = kDefaultQuadNodes);

    py::class_<RemainderEstimate>(m, "RemainderEstimate")
        .def_readonly("order", &RemainderEstimate::order)
        .def_readonly("integral_value", &RemainderEstimate::integral_value)
        .def_readonly("bound_tight", &RemainderEstimate::bound_tight)
        .def_readonly("bound_loose", &RemainderEstimate::bound_loose)
        .def_readonly("grid_points", &RemainderEstimate::grid_points);
    m.def("remainder_bound", &remainder_bound, py::arg("expr"), py::arg("lam"), py::arg("x0"), py::arg("x"),
          py::arg("N"), py::arg("grid") = kDefaultGrid, py::arg("quad_nodes") = kDefaultQuadNodes);
    m.def("epsilon_sup", &epsilon_sup, py::arg("lam"), py::arg("r"));
    m.def("epsilon_inverse", &epsilon_inverse, py::arg("lam"), py::arg("alpha"));

    py::class_<ConvergenceReport>(m, "ConvergenceReport")
        .def_property_readonly("ratios", [](const ConvergenceReport& r) {
            std::vector<std::pair<int, double>> out;
            for (const auto& q : r.ratios) out.emplace_back(q.j, q.value);
            return out;
        })
        .def_readonly("r_estimate", &ConvergenceReport::r_estimate)
        .def_readonly("x_region_halfwidth", &ConvergenceReport::x_region_halfwidth)
        .def_readonly("has_region", &ConvergenceReport::has_region)
        .def_readonly("stable", &ConvergenceReport::stable)
        .def_readonly("window_spread", &ConvergenceReport::window_spread);
    m.def("radius_estimate", &radius_estimate, py::arg("expr"), py::arg("lam"), py::arg("x0"),
          py::arg("j_max") = 64, py::arg("window") = 8);

    py::class_<GrowthReport>(m, "GrowthReport")
        .def_readonly("period", &GrowthReport::period)
        .def_readonly("sup_values", &GrowthReport::sup_values)
        .def_readonly("best_k", &GrowthReport::best_k)
        .def_readonly("c0", &GrowthReport::c0)
        .def_readonly("c0_global", &GrowthReport::c0_global)
        .def_readonly("bounded", &GrowthReport::bounded)
        .def_readonly("periodic", &GrowthReport::periodic)
        .def_readonly("note", &GrowthReport::note);
    m.def("growth_diagnostic", &growth_diagnostic, py::arg("expr"), py::arg("lam"), py::arg("T"),
          py::arg("N_max") = 24);

    py::class_<ExpansionND>(m, "ExpansionND")
        .def_readonly("lam", &ExpansionND::lambda)
        .def_readonly("center", &ExpansionND::center)
        .def_readonly("order", &ExpansionND::order)
        .def_property_readonly("dims", &ExpansionND::dims)
        .def_property_readonly("coeffs", [](const ExpansionND& e) {
            std::vector<std::pair<std::vector<int>, Complex>> out;
            for (std::size_t p = 0; p < e.coeffs.size(); ++p) out.emplace_back(e.layout->index(p).components(), e.coeffs[p]);
            return out;
        })
        .def("__getitem__", [](const ExpansionND& e, const std::vector<int>& g) { return e[MultiIndex(g)]; })
        .def("__call__", [](const ExpansionND& e, const py::object& x) { return eval_nd(e, as_vector(x)); });
    m.def("expand_nd", [](const ExprAst& e, Complex lam, const py::object& center, int N) {
        return expand_nd(e, e.dims(), lam, as_vector(center), N);
    }, py::arg("expr"), py::arg("lam"), py::arg("center"), py::arg("N"));
    m.def("eval_nd", [](const ExpansionND& e, const py::object& x) { return eval_nd(e, as_vector(x)); },
          py::arg("expansion"), py::arg("x"));
    m.def("remainder_bound_nd", [](const ExprAst& e, Complex lam, const py::object& center, const py::object& x,
                                   int N, int grid, std::uint64_t seed) {
        return remainder_bound_nd(e, e.dims(), lam, as_vector(center), as_vector(x), N, grid, seed);
    }, py::arg("expr"), py::arg("lam"), py::arg("center"), py::arg("x"), py::arg("N"),
          py::arg("grid") = kDefaultBoxGrid, py::arg("seed") = 0);

    py::class_<IdentityResult>(m, "IdentityResult")
        .def_readonly("name", &IdentityResult::name)
        .def_readonly("computed", &IdentityResult::computed)
        .def_readonly("target", &IdentityResult::target)
        .def_readonly("terms_used", &IdentityResult::terms_used)
        .def_readonly("abs_error", &IdentityResult::abs_error)
        .def_readonly("tolerance", &IdentityResult::tolerance)
        .def_readonly("passed", &IdentityResult::passed)
        .def_readonly("variant", &IdentityResult::variant)
        .def_readonly("note", &IdentityResult::note)
        .def("__repr__", [](const IdentityResult& r) {
            return "IdentityResult(" + r.name + ", " + (r.passed ? "passed" : "failed") + ")";
        });
    m.def("cosine_series", &cosine_series, py::arg("x"), py::arg("J"));
    m.def("linear_series", &linear_series, py::arg("x"), py::arg("J"));
    m.def("log_series", &log_series, py::arg("k"), py::arg("J"));
    m.def("stirling_log2_series", py::overload_cast<int, bool, int>(&stirling_log2_series), py::arg("k"),
          py::arg("weighted"), py::arg("J"));
    m.def("run_suite", [](std::optional<ToleranceOverrides> o) { return run_suite(o); },
          py::arg("overrides") = py::none());
    m.def("suite_json", [](std::optional<ToleranceOverrides> o) {
        std::ostringstream s;
        write_json(s, run_suite(o));
        return s.str();
    }, py::arg("overrides") = py::none());
}
