// _core: pybind11 entry points. Each returns the same JSON document the CLI
// prints with --json; the elimdual package decodes it.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elimdual/harness.hpp"
#include "elimdual/report.hpp"

namespace py = pybind11;
using namespace elimdual;

namespace {

std::string canonical(const std::string& text) { return print_system(parse_system(text)); }

std::string check(const std::string& text) {
    const System system = parse_system(text);
    return check_report(expand_equalities(system), feasibility(system)).dump();
}

std::string eliminate(const std::string& text, const std::vector<std::string>& names) {
    const System system = parse_system(text);
    return fourier_report(names, eliminate_vars(expand_equalities(system), resolve_variables(system, names)).system)
        .dump();
}

std::string dual(const std::string& text, bool strong, const std::string& objective, const std::string& sigma) {
    const System primal = parse_system(text);
    return dual_report(primal, build_dual(primal, strong, objective, sigma)).dump();
}

std::string implicit(const std::string& text) {
    const System system = parse_system(text);
    return implicit_report(expand_equalities(system), implicit_set(system)).dump();
}

std::string cone(const std::string& text, bool analyze) {
    const System primal = parse_system(text);
    const System c = cone_of(primal);
    std::optional<ConeAnalysis> flags;
    if (analyze) flags = analyze_cone(primal, c);
    return cone_report(c, flags).dump();
}

std::string solve9(const std::string& text, const std::string& rule, const std::string& sigma, bool do_explore,
                   bool trace) {
    PipelineOptions options;
    if (!sigma.empty()) options.bound = Rational::parse(sigma);
    const PivotRule pivot_rule = PivotRule::parse(rule);
    WorkingSystem ws = build_working_system(parse_system(text), options);
    std::optional<ExploreReport> tree;
    if (do_explore) tree = explore(ws, 20000);
    const PipelineTrace t = run(std::move(ws), pivot_rule);
    return solve9_report(rule, options.bound, t, tree, trace).dump();
}

std::string difftest(std::uint64_t seed, std::size_t trials, std::size_t max_vars, std::size_t max_cons,
                     const std::string& mode, unsigned threads) {
    GenParams params;
    params.seed = seed;
    params.max_vars = max_vars;
    params.max_cons = max_cons;
    params.mode = parse_bound_mode(mode);
    py::gil_scoped_release release;
    return to_json(run_difftest(params, trials, threads)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Fourier elimination, elementary duals and certificates";
    m.attr("SCHEMA_VERSION") = kSchemaVersion;

    static py::exception<Error> error(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
            exc.attr("code") = to_string(e.code());
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    m.def("canonical", &canonical, py::arg("text"));
    m.def("check", &check, py::arg("text"));
    m.def("eliminate", &eliminate, py::arg("text"), py::arg("names"));
    m.def("dual", &dual, py::arg("text"), py::arg("strong") = false, py::arg("objective") = "",
          py::arg("sigma") = "");
    m.def("implicit", &implicit, py::arg("text"));
    m.def("cone", &cone, py::arg("text"), py::arg("analyze") = false);
    m.def("solve9", &solve9, py::arg("text"), py::arg("rule") = "main-first", py::arg("sigma") = "",
          py::arg("explore") = false, py::arg("trace") = false);
    m.def("difftest", &difftest, py::arg("seed"), py::arg("trials"), py::arg("max_vars") = GenParams{}.max_vars,
          py::arg("max_cons") = GenParams{}.max_cons, py::arg("mode") = "box", py::arg("threads") = 1);
}
