// Python module exposing the main operations: descriptor and zero-table
// loading, the gaussian-weighted zero sums with their predictions, the
// explicit-formula closure, the error-term integral, Li coefficients, zero
// counting, and the prime-power sums.  Reports come back as small structs
// with read-only fields; library exceptions surface as python exception
// types registered here.
#include <complex>
#include <utility>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lfzero/descriptor.hpp"
#include "lfzero/errors.hpp"
#include "lfzero/li.hpp"
#include "lfzero/test_function.hpp"
#include "lfzero/weil.hpp"
#include "lfzero/zeros_io.hpp"
#include "lfzero/zerosum.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_lfzero, m) {
    m.doc() = "Zero sums, explicit-formula closures, and Li coefficients "
              "for Selberg-class L-functions";

    py::register_exception<lfzero::DomainError>(m, "DomainError",
                                                PyExc_ValueError);
    py::register_exception<lfzero::CoverageError>(m, "CoverageError",
                                                  PyExc_RuntimeError);
    py::register_exception<lfzero::ParseError>(m, "ParseError",
                                               PyExc_RuntimeError);
    py::register_exception<lfzero::PrecisionError>(m, "PrecisionError",
                                                   PyExc_RuntimeError);

    py::class_<lfzero::SelbergDescriptor>(m, "SelbergDescriptor")
        .def_readonly("name", &lfzero::SelbergDescriptor::name)
        .def_readonly("pole_order", &lfzero::SelbergDescriptor::pole_order)
        .def("__repr__", [](const lfzero::SelbergDescriptor& d) {
            return "<SelbergDescriptor " + d.name + ">";
        });
    m.def("parse_descriptor",
          [](const std::filesystem::path& p) { return lfzero::parse_descriptor(p); },
          py::arg("path"));
    m.def("degree", &lfzero::degree, py::arg("descriptor"));
    m.def("conductor", &lfzero::conductor, py::arg("descriptor"));
    m.def("log_conductor", &lfzero::log_conductor, py::arg("descriptor"));
    m.def("counting_main_term", &lfzero::counting_main_term,
          py::arg("descriptor"), py::arg("T"));

    py::class_<lfzero::ZeroTable>(m, "ZeroTable")
        .def_readonly("source", &lfzero::ZeroTable::source)
        .def_readonly("max_ordinate", &lfzero::ZeroTable::max_ordinate)
        .def("__len__", &lfzero::ZeroTable::size)
        .def("off_rh", &lfzero::ZeroTable::off_rh)
        .def("__repr__", [](const lfzero::ZeroTable& t) {
            return "<ZeroTable " + std::to_string(t.size()) + " zeros, max " +
                   std::to_string(t.max_ordinate) + ">";
        });
    m.def("parse_zero_file",
          [](const std::filesystem::path& p) { return lfzero::parse_zero_file(p); },
          py::arg("path"));
    m.def("empirical_count", &lfzero::empirical_count, py::arg("table"),
          py::arg("T"));

    py::class_<lfzero::CountSnapshot>(m, "CountSnapshot")
        .def_readonly("T", &lfzero::CountSnapshot::T)
        .def_readonly("empirical", &lfzero::CountSnapshot::empirical)
        .def_readonly("main_term", &lfzero::CountSnapshot::main_term)
        .def_readonly("deviation", &lfzero::CountSnapshot::deviation);
    py::class_<lfzero::DeviationProfile>(m, "DeviationProfile")
        .def_readonly("snapshots", &lfzero::DeviationProfile::snapshots)
        .def_readonly("max_ratio", &lfzero::DeviationProfile::max_ratio);
    m.def("deviation_profile", &lfzero::deviation_profile, py::arg("table"),
          py::arg("descriptor"), py::arg("T_grid"));

    py::class_<lfzero::TestFunction>(m, "TestFunction")
        .def_readonly("spec", &lfzero::TestFunction::spec)
        .def_readonly("f0", &lfzero::TestFunction::f0)
        .def("__repr__", [](const lfzero::TestFunction& f) {
            return "<TestFunction " + f.spec + ">";
        });
    m.def("parse_test_function", &lfzero::parse_test_function, py::arg("spec"));

    m.def("truncation_bound", &lfzero::truncation_bound, py::arg("u"),
          py::arg("v"), py::arg("T"), py::arg("off_rh") = false);
    m.def(
        "gaussian_zero_sum",
        [](const lfzero::ZeroTable& table, double u, double v, double T,
           bool reproducible) {
            return lfzero::gaussian_zero_sum(table, {u, v, T, reproducible});
        },
        py::arg("table"), py::arg("u"), py::arg("v"), py::arg("T"),
        py::arg("reproducible") = true);
    m.def("thm1_main_term", &lfzero::thm1_main_term, py::arg("descriptor"),
          py::arg("u"));
    m.def(
        "lemma2_rhs",
        [](const lfzero::SelbergDescriptor& desc, double u, double v,
           long n_max) { return lfzero::lemma2_rhs(desc, u, v, n_max); },
        py::arg("descriptor"), py::arg("u"), py::arg("v"),
        py::arg("n_max") = 0);
    m.def("landau_sum", &lfzero::landau_sum, py::arg("table"),
          py::arg("descriptor"), py::arg("n"), py::arg("T"));

    py::class_<lfzero::TermGroup>(m, "TermGroup")
        .def_readonly("label", &lfzero::TermGroup::label)
        .def_readonly("value", &lfzero::TermGroup::value);
    py::class_<lfzero::ExplicitFormulaReport>(m, "ExplicitFormulaReport")
        .def_readonly("zero_side", &lfzero::ExplicitFormulaReport::zero_side)
        .def_readonly("arithmetic_side",
                      &lfzero::ExplicitFormulaReport::arithmetic_side)
        .def_readonly("term_breakdown",
                      &lfzero::ExplicitFormulaReport::term_breakdown)
        .def_readonly("residual", &lfzero::ExplicitFormulaReport::residual)
        .def_readonly("prime_terms_used",
                      &lfzero::ExplicitFormulaReport::prime_terms_used);
    m.def(
        "weil_closure",
        [](const lfzero::ZeroTable& table, const lfzero::SelbergDescriptor& desc,
           const lfzero::TestFunction& f, double u, double v, double T,
           long n_max) {
            return lfzero::weil_closure(table, desc, f, u, v, T, n_max);
        },
        py::arg("table"), py::arg("descriptor"), py::arg("f"), py::arg("u"),
        py::arg("v"), py::arg("T"), py::arg("n_max") = 0);
    m.def("thm2_prediction", &lfzero::thm2_prediction, py::arg("descriptor"),
          py::arg("f"), py::arg("u"), py::arg("v"));

    py::class_<lfzero::Thm3Report>(m, "Thm3Report")
        .def_readonly("value", &lfzero::Thm3Report::value)
        .def_readonly("zero_sum", &lfzero::Thm3Report::zero_sum)
        .def_readonly("smooth_integral", &lfzero::Thm3Report::smooth_integral)
        .def_readonly("zeros_used", &lfzero::Thm3Report::zeros_used);
    m.def("thm3_error_report", &lfzero::thm3_error_report,
          py::arg("descriptor"), py::arg("f"), py::arg("u"), py::arg("table"),
          py::arg("T_max"));

    py::enum_<lfzero::LiMethod>(m, "LiMethod")
        .value("ZeroSum", lfzero::LiMethod::ZeroSum)
        .value("Arithmetic", lfzero::LiMethod::Arithmetic)
        .value("Asymptotic", lfzero::LiMethod::Asymptotic);
    py::class_<lfzero::LiCoefficient>(m, "LiCoefficient")
        .def_readonly("n", &lfzero::LiCoefficient::n)
        .def_readonly("value", &lfzero::LiCoefficient::value)
        .def_readonly("method", &lfzero::LiCoefficient::method)
        .def_readonly("error_bar", &lfzero::LiCoefficient::error_bar)
        .def_readonly("tail_estimate", &lfzero::LiCoefficient::tail_estimate);
    m.def("li_zero_sum", &lfzero::li_zero_sum, py::arg("table"), py::arg("n"),
          py::arg("T"));
    m.def(
        "li_arithmetic",
        [](const lfzero::SelbergDescriptor& desc, long n, double X,
           int working_digits) {
            return lfzero::li_arithmetic(desc, n, X, {working_digits});
        },
        py::arg("descriptor"), py::arg("n"), py::arg("X"),
        py::arg("working_digits") = 30);
    m.def("li_asymptotic", &lfzero::li_asymptotic, py::arg("descriptor"),
          py::arg("n"));
    py::class_<lfzero::LiPositivityRow>(m, "LiPositivityRow")
        .def_readonly("n", &lfzero::LiPositivityRow::n)
        .def_readonly("re_lambda", &lfzero::LiPositivityRow::re_lambda)
        .def_readonly("error_bar", &lfzero::LiPositivityRow::error_bar)
        .def_readonly("pass_", &lfzero::LiPositivityRow::pass);
    m.def("li_positivity_report", &lfzero::li_positivity_report,
          py::arg("table"), py::arg("n_max"), py::arg("T"));
}
