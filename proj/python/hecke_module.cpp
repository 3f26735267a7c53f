#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hecke/dh_solvers.hpp"
#include "hecke/optimizer.hpp"
#include "hecke/oracles.hpp"
#include "hecke/p4_method.hpp"
#include "hecke/paper_tables.hpp"
#include "hecke/zero_density.hpp"
#include "hecke/zfr.hpp"

namespace py = pybind11;
using namespace hecke;

namespace {

py::dict row_dict(const RowReport& r) {
    py::dict d;
    d["b"] = r.b;
    d["lambda"] = r.lambda;
    d["expected"] = r.expected;
    d["computed"] = r.computed;
    d["deviation"] = r.deviation;
    d["side_ok"] = r.side_ok;
    d["pass"] = r.pass;
    d["skipped"] = r.skipped;
    d["box_ok"] = r.box_ok;
    d["diagnostic"] = r.diagnostic;
    return d;
}

}  // namespace

PYBIND11_MODULE(_hecke, m) {
    m.doc() = "Explicit inequalities for zeros of Hecke L-functions";

    static py::handle error_type = py::exception<Error>(m, "HeckeError", PyExc_RuntimeError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            py::setattr(exc, "kind", py::str(std::string(to_string(e.kind()))));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<Content>(m, "Content")
        .def_readonly("x0", &Content::x0)
        .def_readonly("M", &Content::M)
        .def_readonly("B", &Content::B)
        .def_readonly("f0", &Content::f0)
        .def("remainder_constant", &Content::remainder_constant);

    py::class_<TrialFunction>(m, "TrialFunction")
        .def_property_readonly("family", &TrialFunction::family)
        .def_property_readonly("params", &TrialFunction::params)
        .def_property_readonly("content", &TrialFunction::content)
        .def_property_readonly("f0", &TrialFunction::f0)
        .def("__call__", &TrialFunction::operator())
        .def("laplace", &TrialFunction::laplace, py::arg("z"))
        .def("laplace_real", &TrialFunction::laplace_real, py::arg("x"))
        .def("__repr__", [](const TrialFunction& f) { return describe(f); });

    m.def("triangle", &triangle, py::arg("x0"));
    m.def("trial", &make_trial, py::arg("family"), py::arg("params"), "Trial function by family name");
    m.def("trial_families", &trial_family_names);
    m.def("condition2_min", &condition2_min, py::arg("f"), py::arg("y_max") = 100.0, py::arg("points") = 2001);
    m.def("repel_reduce", &repel_reduce, py::arg("f"), py::arg("a"), py::arg("b"));
    m.def("quadrature_laplace", &quadrature_laplace, py::arg("f"), py::arg("z"));

    m.def("p4_eval", py::overload_cast<cplx>(&p4_eval), py::arg("x"));
    m.def("re_p4_identity", &re_p4_identity, py::arg("a"), py::arg("b"), py::arg("t"));
    m.def("gm_check", &gm_check, py::arg("V"), py::arg("W"), py::arg("m"), py::arg("x"), py::arg("y"), py::arg("z"));

    py::class_<BoundResult>(m, "BoundResult")
        .def_readonly("b", &BoundResult::b)
        .def_readonly("lambda_star", &BoundResult::lambda_star)
        .def_readonly("params", &BoundResult::params)
        .def_readonly("side_ok", &BoundResult::side_ok)
        .def_readonly("residual", &BoundResult::residual)
        .def_readonly("salvage", &BoundResult::salvage)
        .def("__repr__", [](const BoundResult& r) {
            return "BoundResult(b=" + std::to_string(r.b) + ", lambda_star=" + std::to_string(r.lambda_star) + ")";
        });

    m.def("solver_cases", [] {
        std::vector<std::string> names;
        for (const auto& c : solver_cases()) names.push_back(c.name);
        return names;
    });
    m.def(
        "solve_poly",
        [](const std::string& name, double b, double lambda, double J, double phi) {
            return solve_poly(solver_case(name), b, lambda, J, phi);
        },
        py::arg("case"), py::arg("b"), py::arg("lambda_"), py::arg("J"), py::arg("phi") = default_phi);
    m.def(
        "evaluate_poly",
        [](const std::string& name, double b, double lambda, double J, double phi) {
            return evaluate_poly(solver_case(name), b, lambda, J, phi);
        },
        py::arg("case"), py::arg("b"), py::arg("lambda_"), py::arg("J"), py::arg("phi") = default_phi);
    m.def(
        "solve_smoothed",
        [](const std::string& name, const TrialFunction& f, double b, double phi) {
            return solve_smoothed(solver_case(name), f, b, phi);
        },
        py::arg("case"), py::arg("f"), py::arg("b"), py::arg("phi") = default_phi);
    m.def("very_small_dh", &very_small_dh, py::arg("psi"), py::arg("lambda_prime"));
    m.def("very_small_cutoff", &very_small_cutoff, py::arg("psi"), py::arg("cutoff"));
    m.def("cos_bound", &cos_bound, py::arg("theta"), py::arg("psi"));
    m.def(
        "piecewise_log_constant",
        [](const std::vector<std::pair<double, double>>& rows, double b_min) {
            std::vector<ChainRow> chain;
            for (auto [b, l] : rows) chain.push_back({b, l});
            return piecewise_log_constant(chain, b_min);
        },
        py::arg("rows"), py::arg("b_min"));

    m.def(
        "n_lambda_bound",
        [](const TrialFunction& f, double lambda, double b, double vartheta, double phi) {
            return n_lambda_bound({f, lambda, b, vartheta, phi});
        },
        py::arg("f"), py::arg("lambda_"), py::arg("b") = 0.0, py::arg("vartheta") = 0.75, py::arg("phi") = 0.25);
    m.def(
        "zd_preconditions",
        [](const TrialFunction& f, double lambda, double b, double vartheta, double phi) {
            const auto p = zd_preconditions(ZdQuery{f, lambda, b, vartheta, phi});
            return std::pair{p.cond1, p.cond2};
        },
        py::arg("f"), py::arg("lambda_"), py::arg("b") = 0.0, py::arg("vartheta") = 0.75, py::arg("phi") = 0.25);
    m.def("zd_recipe_theta", &zd_recipe_theta, py::arg("b"), py::arg("lambda_"));

    py::class_<ZfrResult>(m, "ZfrResult")
        .def_readonly("lambda_", &ZfrResult::lambda)
        .def_readonly("lambda1", &ZfrResult::lambda1)
        .def_readonly("root", &ZfrResult::root)
        .def_readonly("side_ok", &ZfrResult::side_ok)
        .def_readonly("residual", &ZfrResult::residual);
    m.def("expand_trig_square_product", &expand_trig_square_product, py::arg("a1"), py::arg("b1"), py::arg("a2"),
          py::arg("b2"));
    m.def("combine_L_coefficients", &combine_L_coefficients, py::arg("a"), py::arg("b"), py::arg("vartheta"));
    m.def(
        "zfr_solve",
        [](const std::string& name, double lambda, double phi) { return zfr_solve(zfr_case(name), lambda, phi); },
        py::arg("case"), py::arg("lambda_"), py::arg("phi") = 0.25);
    m.def(
        "zfr_optimize",
        [](const std::string& name, double phi) {
            const auto o = zfr_optimize(zfr_case(name), phi);
            return std::pair{o.lambda, o.result};
        },
        py::arg("case"), py::arg("phi") = 0.25);
    m.def("zfr_order5", py::overload_cast<double>(&zfr_order5), py::arg("phi") = 0.25);
    m.def(
        "zfr_order_ge6", [](double phi) { return zfr_order_ge6(order_ge6_trial(), order_ge6_lambda_star, phi); },
        py::arg("phi") = 0.25);

    m.def("table_ids", [] { return table_ids(); });
    m.def(
        "table_json", [](const std::string& id) { return table_to_json(load_table(id)); }, py::arg("id"));
    m.def(
        "regress",
        [](const std::string& id, std::optional<double> tolerance) {
            const auto t = load_table(id);
            const auto rep = regress(t, tolerance.value_or(default_tolerance(t.method)));
            py::list rows;
            for (const auto& r : rep.rows) rows.append(row_dict(r));
            return rows;
        },
        py::arg("id"), py::arg("tolerance") = py::none());

    m.def(
        "maximize_bound",
        [](const std::string& name, double b, const std::string& family, double phi) {
            SearchSpec spec;
            spec.case_name = name;
            spec.b = b;
            spec.phi = phi;
            if (family == "cosine")
                spec.family = SearchFamily::CosineCap;
            else if (family != "parabolic")
                throw Error(ErrorKind::InvalidParameter, "family must be parabolic or cosine");
            py::gil_scoped_release release;
            return maximize_bound(spec);
        },
        py::arg("case"), py::arg("b"), py::arg("family") = "parabolic", py::arg("phi") = default_phi);

    m.def(
        "verify",
        [](const std::string& suite) {
            py::list out;
            for (const auto& r : verify_suite(parse_suite(suite))) {
                py::dict d;
                d["check"] = r.check;
                d["grid_size"] = r.grid_size;
                d["worst_violation"] = r.worst_violation;
                d["tolerance"] = r.tolerance;
                d["pass"] = r.pass;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all");
}
