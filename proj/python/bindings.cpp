#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mpsl/cli.hpp"
#include "mpsl/delta.hpp"
#include "mpsl/gamma.hpp"
#include "mpsl/oracle.hpp"
#include "mpsl/separated.hpp"
#include "mpsl/verify.hpp"

namespace py = pybind11;
using namespace mpsl;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_mpsl, m) {
    m.doc() = "Solver for -u'' = lambda*u on (-1, 1) under multi-point boundary conditions";

    py::register_exception<SolverError>(m, "SolverError");
    py::register_exception<StructuralError>(m, "StructuralError");
    py::register_exception<DomainError>(m, "DomainError");

    py::enum_<Side>(m, "Side").value("Left", Side::Left).value("Right", Side::Right);

    py::class_<BoundaryPoint>(m, "BoundaryPoint")
        .def(py::init<>())
        .def(py::init([](double eta, double alpha, double beta) {
                 return BoundaryPoint{eta, alpha, beta};
             }),
             py::arg("eta"), py::arg("alpha") = 0.0, py::arg("beta") = 0.0)
        .def_readwrite("eta", &BoundaryPoint::eta)
        .def_readwrite("alpha", &BoundaryPoint::alpha)
        .def_readwrite("beta", &BoundaryPoint::beta);

    py::class_<EndpointCondition>(m, "EndpointCondition")
        .def(py::init<>())
        .def_readwrite("side", &EndpointCondition::side)
        .def_readwrite("alpha0", &EndpointCondition::alpha0)
        .def_readwrite("beta0", &EndpointCondition::beta0)
        .def_readwrite("points", &EndpointCondition::points)
        .def("endpoint", &EndpointCondition::endpoint)
        .def("separated", &EndpointCondition::separated);

    py::class_<ProblemSpec>(m, "ProblemSpec")
        .def(py::init<>())
        .def_readwrite("left", &ProblemSpec::left)
        .def_readwrite("right", &ProblemSpec::right);

    py::class_<SideReport>(m, "SideReport")
        .def_readonly("nondegenerate", &SideReport::nondegenerate)
        .def_readonly("sign", &SideReport::sign)
        .def_readonly("contraction", &SideReport::contraction)
        .def_readonly("margin", &SideReport::margin);

    py::class_<AdmissibilityReport>(m, "AdmissibilityReport")
        .def_readonly("left", &AdmissibilityReport::left)
        .def_readonly("right", &AdmissibilityReport::right)
        .def_readonly("cond_nondegenerate", &AdmissibilityReport::cond_nondegenerate)
        .def_readonly("cond_sign", &AdmissibilityReport::cond_sign)
        .def_readonly("cond_contraction", &AdmissibilityReport::cond_contraction)
        .def_readonly("cond_invertible", &AdmissibilityReport::cond_invertible)
        .def_property_readonly("classification",
                               [](const AdmissibilityReport& r) { return to_string(r.classification); })
        .def("admissible", &AdmissibilityReport::admissible)
        .def("to_dict", [](const AdmissibilityReport& r) { return json_to_py(report_to_json(r)); });

    py::class_<PhaseSolution>(m, "PhaseSolution")
        .def(py::init([](double s, double theta) { return PhaseSolution{s, theta}; }),
             py::arg("s"), py::arg("theta"))
        .def_readwrite("s", &PhaseSolution::s)
        .def_readwrite("theta", &PhaseSolution::theta)
        .def_property_readonly("lam", &PhaseSolution::lambda);

    py::enum_<OscSign>(m, "OscSign").value("Plus", OscSign::Plus).value("Minus", OscSign::Minus);

    py::class_<OscillationClass>(m, "OscillationClass")
        .def_readonly("k", &OscillationClass::k)
        .def_readonly("sign", &OscillationClass::sign)
        .def_readonly("boundary_margin", &OscillationClass::boundary_margin);

    py::class_<Eigenpair>(m, "Eigenpair")
        .def_readonly("k", &Eigenpair::k)
        .def_property_readonly("lam", [](const Eigenpair& e) { return e.lambda; })
        .def_readonly("phase", &Eigenpair::phase)
        .def_readonly("osc", &Eigenpair::osc)
        .def_readonly("residual_left", &Eigenpair::residual_left)
        .def_readonly("residual_right", &Eigenpair::residual_right)
        .def_readonly("transversality_left", &Eigenpair::transversality_left)
        .def_readonly("transversality_right", &Eigenpair::transversality_right)
        .def_readonly("constant_mode", &Eigenpair::constant_mode);

    py::class_<SeparatedEigen>(m, "SeparatedEigen")
        .def_readonly("k", &SeparatedEigen::k)
        .def_property_readonly("lam", [](const SeparatedEigen& e) { return e.lambda; })
        .def_readonly("phase", &SeparatedEigen::phase)
        .def_readonly("constant_mode", &SeparatedEigen::constant_mode);

    py::class_<OracleRoot>(m, "OracleRoot")
        .def_property_readonly("lam", [](const OracleRoot& r) { return r.lambda; })
        .def_readonly("phase", &OracleRoot::phase)
        .def_readonly("k", &OracleRoot::k)
        .def_readonly("dF_ds", &OracleRoot::dF_ds);

    py::class_<GammaGradient>(m, "GammaGradient")
        .def_readonly("value", &GammaGradient::value)
        .def_readonly("d_s", &GammaGradient::d_s)
        .def_readonly("d_theta", &GammaGradient::d_theta)
        .def_readonly("d_t", &GammaGradient::d_t);

    m.def("problem_from_json",
          [](const std::string& text) { return problem_from_json(nlohmann::json::parse(text)); },
          py::arg("text"));
    m.def("problem_to_json",
          [](const ProblemSpec& spec) { return problem_to_json(spec).dump(2); }, py::arg("spec"));
    m.def("load_problem_file", &load_problem_file, py::arg("path"));
    m.def("validate", &validate, py::arg("spec"));
    m.def("classify", [](const ProblemSpec& spec) { return to_string(classify(spec)); },
          py::arg("spec"));
    m.def("rescale", &rescale, py::arg("spec"), py::arg("a"), py::arg("b"));

    m.def("separated_eigen", &separated_eigen, py::arg("spec"), py::arg("k"));
    m.def("continue_eigenpair",
          [](const ProblemSpec& spec, int k) { return continue_eigenpair(spec, k); },
          py::arg("spec"), py::arg("k"));
    m.def("solve_spectrum",
          [](const ProblemSpec& spec, int k_max) { return solve_spectrum(spec, k_max); },
          py::arg("spec"), py::arg("k_max"));
    m.def("oracle_spectrum", &oracle_spectrum, py::arg("spec"), py::arg("s_max"));

    m.def("gamma_endpoint", &gamma_endpoint, py::arg("side"), py::arg("s"), py::arg("theta"),
          py::arg("spec"), py::arg("t") = 1.0);
    m.def("classify_oscillation", &classify_oscillation, py::arg("phase"), py::arg("spec"));
    m.def("count_interior_zeros", &count_interior_zeros, py::arg("phase"),
          py::arg("of_derivative") = false);
    m.def("sup_norm_w", &sup_norm_w, py::arg("phase"));
    m.def("eval_w", [](const PhaseSolution& p, double x) {
              const WValue w = eval_w(p, x);
              return py::make_tuple(w.u, w.uprime);
          },
          py::arg("phase"), py::arg("x"));
    m.def("target_angles", [](double lam, const ProblemSpec& spec) {
              const TargetAngles t = target_angles(lam, spec);
              return py::make_tuple(t.omega_minus, t.omega_plus);
          },
          py::arg("lam"), py::arg("spec"));
    m.def("transversality_check", &transversality_check, py::arg("phase"), py::arg("spec"));

    m.def("apply_inverse_grid",
          [](const std::function<double(double)>& h, const ProblemSpec& spec, int n) {
              return apply_inverse_grid(SampledFunction(h), spec, n);
          },
          py::arg("h"), py::arg("spec"), py::arg("n") = 401);
    m.def("eigen_residual", &eigen_residual, py::arg("pair"), py::arg("spec"));

    m.def("run_property_suite",
          [](const ProblemSpec& spec, int k_max) {
              return json_to_py(run_property_suite(spec, k_max).to_json());
          },
          py::arg("spec"), py::arg("k_max") = 5);
    m.def("demo_counterexample",
          [](const std::string& name) {
              CounterexampleName which;
              if (name == "negative-lambda") which = CounterexampleName::NegativeLambda;
              else if (name == "multiplicity-two") which = CounterexampleName::MultiplicityTwo;
              else if (name == "dirichlet-negative") which = CounterexampleName::DirichletNegative;
              else throw DomainError("unknown demo: " + name);
              return json_to_py(demo_counterexample(which).to_json());
          },
          py::arg("name"));
    m.def("demo_missing_eigenvalues",
          [](long k0, long samples) { return json_to_py(demo_missing_eigenvalues(k0, samples).to_json()); },
          py::arg("k0") = 1000, py::arg("samples") = 100000);
    m.def("missing_eigenvalue_problem", &missing_eigenvalue_problem, py::arg("k0"));

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"));
}
