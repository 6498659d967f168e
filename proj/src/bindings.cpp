#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "uzalc/certify.hpp"
#include "uzalc/classu.hpp"
#include "uzalc/functionals.hpp"
#include "uzalc/schwarz.hpp"
#include "uzalc/search.hpp"
#include "uzalc/series.hpp"

namespace py = pybind11;
using namespace uzalc;

PYBIND11_MODULE(_uzalc, m) {
    m.doc() = "certified coefficient-functional toolkit for a class of univalent functions";

    py::class_<TruncatedSeries>(m, "TruncatedSeries")
        .def(py::init<int>(), py::arg("order"))
        .def(py::init<std::vector<Complex>>(), py::arg("coeffs"))
        .def_property_readonly("order", &TruncatedSeries::order)
        .def("__getitem__", [](const TruncatedSeries& s, int k) { return s.at(k); })
        .def("coeffs", [](const TruncatedSeries& s) { return s.coeffs(); })
        .def("eval", [](const TruncatedSeries& s, Complex z) { return eval(s, z); });

    py::class_<SchurParams>(m, "SchurParams")
        .def(py::init<std::vector<Complex>>(), py::arg("gammas"))
        .def_property_readonly("degree", &SchurParams::degree)
        .def_readonly("gamma", &SchurParams::gamma);

    py::class_<Lemma1Report>(m, "Lemma1Report")
        .def_readonly("ok", &Lemma1Report::pass)
        .def_readonly("slacks", &Lemma1Report::slacks);

    py::class_<SchwarzFunction>(m, "SchwarzFunction")
        .def_static("from_schur", &SchwarzFunction::from_schur, py::arg("params"),
                    py::arg("order") = 64, py::arg("grid_size") = 8192)
        .def_static("unimodular_linear", &SchwarzFunction::unimodular_linear, py::arg("u"),
                    py::arg("order") = 64)
        .def_property_readonly("is_linear", &SchwarzFunction::is_linear)
        .def_property_readonly("order", &SchwarzFunction::order)
        .def("c", &SchwarzFunction::c, py::arg("k"))
        .def("eval", &SchwarzFunction::eval, py::arg("z"))
        .def("deriv_eval", &SchwarzFunction::deriv_eval, py::arg("z"))
        .def("deriv_sup", &SchwarzFunction::deriv_sup)
        .def("rotated", &SchwarzFunction::rotated, py::arg("theta"))
        .def("lemma1", &SchwarzFunction::lemma1, py::arg("tol") = 1e-9);

    py::class_<ClassUFunction>(m, "ClassUFunction")
        .def_static("build", &ClassUFunction::build, py::arg("a2"), py::arg("omega"),
                    py::arg("order") = 64, py::arg("lenient") = false)
        .def_static("koebe", &ClassUFunction::koebe, py::arg("theta") = 0.0,
                    py::arg("order") = 64)
        .def_property_readonly("a2", &ClassUFunction::a2)
        .def_property_readonly("order", &ClassUFunction::order)
        .def_property_readonly("membership_margin", &ClassUFunction::membership_margin)
        .def_property_readonly("pole_free", &ClassUFunction::pole_free)
        .def("omega", &ClassUFunction::omega, py::return_value_policy::reference_internal)
        .def("coefficient", &ClassUFunction::coefficient, py::arg("n"))
        .def("coefficients",
             [](const ClassUFunction& f) { return f.coeffs().coeffs(); })
        .def("closed_form_a345", &ClassUFunction::closed_form_a345)
        .def("defect_coeffs",
             [](const ClassUFunction& f) { return f.defect_series().coeffs(); })
        .def("rotated", &ClassUFunction::rotated, py::arg("theta"))
        .def("eval", &ClassUFunction::eval, py::arg("z"));

    py::class_<FunctionalSpec>(m, "FunctionalSpec")
        .def_static("parse", &FunctionalSpec::parse, py::arg("text"))
        .def_static("zalcman", &FunctionalSpec::Zalcman, py::arg("n"))
        .def_static("gen_zalcman", &FunctionalSpec::GenZalcman, py::arg("m"), py::arg("n"))
        .def_static("krushkal", &FunctionalSpec::Krushkal, py::arg("n"), py::arg("p"))
        .def_readonly("m", &FunctionalSpec::m)
        .def_readonly("n", &FunctionalSpec::n)
        .def_readonly("p", &FunctionalSpec::p)
        .def("required_index", &FunctionalSpec::required_index)
        .def("__str__", &FunctionalSpec::str)
        .def("__repr__", &FunctionalSpec::str)
        .def("__eq__",
             [](const FunctionalSpec& a, const FunctionalSpec& b) { return a == b; });

    m.def("evaluate", &evaluate, py::arg("spec"), py::arg("f"));
    m.def("bound", &bound, py::arg("spec"));
    m.def("excess", &excess, py::arg("spec"), py::arg("f"));
    m.def("proven_specs", [] { return proven_specs(); });
    m.def("is_proven_case", &is_proven_case, py::arg("spec"));

    py::enum_<AuxKind>(m, "AuxKind")
        .value("f1", AuxKind::f1)
        .value("f2", AuxKind::f2)
        .value("g", AuxKind::g);

    py::enum_<CertStatus>(m, "CertStatus")
        .value("proven", CertStatus::proven)
        .value("refuted", CertStatus::refuted)
        .value("budget_exceeded", CertStatus::budget_exceeded);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("kind", &Certificate::kind)
        .def_readonly("claimed_bound", &Certificate::claimed_bound)
        .def_readonly("certified_sup_hi", &Certificate::certified_sup_hi)
        .def_readonly("attained_lo", &Certificate::attained_lo)
        .def_readonly("witness_x", &Certificate::witness_x)
        .def_readonly("witness_y", &Certificate::witness_y)
        .def_readonly("boxes_processed", &Certificate::boxes_processed)
        .def_readonly("max_depth", &Certificate::max_depth)
        .def_readonly("status", &Certificate::status);

    py::class_<PositivityCertificate>(m, "PositivityCertificate")
        .def_readonly("kind", &PositivityCertificate::kind)
        .def_readonly("certified_inf_lo", &PositivityCertificate::certified_inf_lo)
        .def_readonly("point_min_hi", &PositivityCertificate::point_min_hi)
        .def_readonly("witness_x", &PositivityCertificate::witness_x)
        .def_readonly("witness_y", &PositivityCertificate::witness_y)
        .def_readonly("boxes_processed", &PositivityCertificate::boxes_processed)
        .def_readonly("max_depth", &PositivityCertificate::max_depth)
        .def_readonly("status", &PositivityCertificate::status);

    py::class_<EdgeReport>(m, "EdgeReport")
        .def_readonly("edge", &EdgeReport::edge)
        .def_readonly("closed_form_max", &EdgeReport::closed_form_max)
        .def_readonly("argmax", &EdgeReport::argmax)
        .def_readonly("certified_hi", &EdgeReport::certified_hi)
        .def_readonly("attained_lo", &EdgeReport::attained_lo)
        .def_readonly("max_crosscheck_diff", &EdgeReport::max_crosscheck_diff)
        .def_readonly("boxes_processed", &EdgeReport::boxes_processed);

    py::class_<GridResult>(m, "GridResult")
        .def_readonly("max", &GridResult::max)
        .def_readonly("argmax_x", &GridResult::argmax_x)
        .def_readonly("argmax_y", &GridResult::argmax_y);

    m.def("aux_eval", &aux_eval, py::arg("kind"), py::arg("x"), py::arg("y"));
    m.def("aux_dy_eval", &aux_dy_eval, py::arg("kind"), py::arg("x"), py::arg("y"));
    m.def("aux_sharp_bound", &aux_sharp_bound, py::arg("kind"));
    m.def("certify_max", &certify_max, py::arg("kind"), py::arg("claimed_bound"),
          py::arg("tol") = kDefaultCertifyTol, py::arg("max_boxes") = kDefaultMaxBoxes);
    m.def("certify_dy_positive", &certify_dy_positive, py::arg("kind"),
          py::arg("max_boxes") = kDefaultMaxBoxes);
    m.def("edge_profiles", &edge_profiles, py::arg("kind"));
    m.def("grid_oracle", &grid_oracle, py::arg("kind"), py::arg("resolution"));

    py::class_<SearchConfig>(m, "SearchConfig")
        .def(py::init<>())
        .def_readwrite("spec", &SearchConfig::spec)
        .def_readwrite("degree", &SearchConfig::degree)
        .def_readwrite("restarts", &SearchConfig::restarts)
        .def_readwrite("iterations", &SearchConfig::iterations)
        .def_readwrite("seed", &SearchConfig::seed)
        .def_readwrite("order", &SearchConfig::order)
        .def_readwrite("margin", &SearchConfig::margin);

    py::class_<BestRecord>(m, "BestRecord")
        .def_readonly("spec", &BestRecord::spec)
        .def_readonly("value", &BestRecord::value)
        .def_readonly("bound", &BestRecord::bound)
        .def_readonly("excess", &BestRecord::excess)
        .def_readonly("a2", &BestRecord::a2)
        .def_readonly("gammas", &BestRecord::gammas)
        .def_readonly("membership_margin", &BestRecord::membership_margin)
        .def_readonly("pole_free", &BestRecord::pole_free)
        .def_readonly("seed", &BestRecord::seed)
        .def_readonly("evaluations", &BestRecord::evaluations)
        .def_readonly("wall_ms", &BestRecord::wall_ms);

    py::class_<Sample>(m, "Sample")
        .def_readonly("a2", &Sample::a2)
        .def_readonly("gammas", &Sample::gammas)
        .def_readonly("fn", &Sample::fn);

    m.def(
        "sample",
        [](std::uint64_t seed, int degree, int order, double margin) {
            std::mt19937_64 rng(seed);
            return sample(rng, degree, order, margin);
        },
        py::arg("seed"), py::arg("degree"), py::arg("order") = 64, py::arg("margin") = 1e-6);
    m.def(
        "samples",
        [](std::uint64_t seed, int count, int degree, int order, double margin) {
            std::mt19937_64 rng(seed);
            std::vector<Sample> out;
            out.reserve(static_cast<size_t>(count));
            for (int i = 0; i < count; ++i) out.push_back(sample(rng, degree, order, margin));
            return out;
        },
        py::arg("seed"), py::arg("count"), py::arg("degree"), py::arg("order") = 64,
        py::arg("margin") = 1e-6);
    m.def("maximize", &maximize, py::arg("config"));
    m.def("run_restarts", &run_restarts, py::arg("config"));
    m.def("run_and_persist", &run_and_persist, py::arg("config"), py::arg("path"));
    m.def("rebuild", &rebuild, py::arg("a2"), py::arg("gammas"), py::arg("order") = 64);
}
