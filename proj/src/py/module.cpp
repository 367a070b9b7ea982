#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srkg/config_io.hpp"
#include "srkg/heun.hpp"
#include "srkg/model.hpp"
#include "srkg/numeric.hpp"
#include "srkg/oracle.hpp"
#include "srkg/spectrum.hpp"
#include "srkg/sweep.hpp"

namespace py = pybind11;
using namespace srkg;

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Bound-state spectra of the (generalized) Klein-Gordon oscillator in "
        "the Som-Raychaudhuri space-time";

    py::enum_<CouplingMode>(m, "CouplingMode")
        .value("linear", CouplingMode::linear)
        .value("cornell", CouplingMode::cornell);

    py::enum_<Branch>(m, "Branch")
        .value("positive", Branch::positive)
        .value("negative", Branch::negative);

    py::enum_<Source>(m, "Source")
        .value("analytic", Source::analytic)
        .value("oracle", Source::oracle);

    py::class_<PhysicalConfig>(m, "PhysicalConfig")
        .def(py::init<>())
        .def_readwrite("M", &PhysicalConfig::M)
        .def_readwrite("e", &PhysicalConfig::e)
        .def_readwrite("omega", &PhysicalConfig::omega)
        .def_readwrite("Omega", &PhysicalConfig::Omega)
        .def_readwrite("B0", &PhysicalConfig::B0)
        .def_readwrite("alpha", &PhysicalConfig::alpha)
        .def_readwrite("PhiB", &PhysicalConfig::PhiB)
        // `lambda` is a Python keyword; expose the Coulomb strength as
        // lambda_ (the config-file key stays `lambda`)
        .def_readwrite("lambda_", &PhysicalConfig::lambda)
        .def_readwrite("xi1", &PhysicalConfig::xi1)
        .def_readwrite("xi2", &PhysicalConfig::xi2)
        .def_readwrite("mode", &PhysicalConfig::mode)
        .def("validate", &PhysicalConfig::validate)
        .def("__repr__",
             [](const PhysicalConfig& cfg) { return render_config(cfg); });

    py::class_<QuantumNumbers>(m, "QuantumNumbers")
        .def(py::init<int, int, double>(), py::arg("n") = 0, py::arg("l") = 0,
             py::arg("k") = 0.0)
        .def_readwrite("n", &QuantumNumbers::n)
        .def_readwrite("l", &QuantumNumbers::l)
        .def_readwrite("k", &QuantumNumbers::k)
        .def("__repr__", [](const QuantumNumbers& qn) {
            return "QuantumNumbers(n=" + std::to_string(qn.n) +
                   ", l=" + std::to_string(qn.l) +
                   ", k=" + format_double(qn.k) + ")";
        });

    py::class_<RadialCoefficients>(m, "RadialCoefficients")
        .def_readonly("a1", &RadialCoefficients::a1)
        .def_readonly("a2sq", &RadialCoefficients::a2sq)
        .def_readonly("a3", &RadialCoefficients::a3)
        .def_readonly("a4", &RadialCoefficients::a4)
        .def_readonly("energy", &RadialCoefficients::energy)
        .def("a2", &RadialCoefficients::a2);

    py::class_<SeriesSolution>(m, "SeriesSolution")
        .def_readonly("coeffs", &SeriesSolution::coeffs)
        .def_readonly("a1", &SeriesSolution::a1)
        .def_readonly("a2", &SeriesSolution::a2)
        .def_readonly("a3", &SeriesSolution::a3)
        .def_readonly("a4", &SeriesSolution::a4)
        .def_readonly("truncation_index", &SeriesSolution::truncation_index)
        .def_readonly("tail_norm", &SeriesSolution::tail_norm);

    py::class_<EnergyLevel>(m, "EnergyLevel")
        .def_readonly("E", &EnergyLevel::E)
        .def_readonly("n", &EnergyLevel::n)
        .def_readonly("l", &EnergyLevel::l)
        .def_readonly("k", &EnergyLevel::k)
        .def_readonly("residual", &EnergyLevel::residual)
        .def_readonly("branch", &EnergyLevel::branch)
        .def_readonly("source", &EnergyLevel::source)
        .def("__repr__", [](const EnergyLevel& level) {
            return "EnergyLevel(E=" + format_double(level.E) +
                   ", n=" + std::to_string(level.n) +
                   ", l=" + std::to_string(level.l) +
                   ", residual=" + format_double(level.residual) + ")";
        });

    py::class_<RootSearchSpec>(m, "RootSearchSpec")
        .def(py::init<>())
        .def_readwrite("E_min", &RootSearchSpec::E_min)
        .def_readwrite("E_max", &RootSearchSpec::E_max)
        .def_readwrite("grid_points", &RootSearchSpec::grid_points)
        .def_readwrite("tol", &RootSearchSpec::tol);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("r_min", &GridSpec::r_min)
        .def_readwrite("r_max", &GridSpec::r_max)
        .def_readwrite("points", &GridSpec::points);

    py::class_<OracleSolution>(m, "OracleSolution")
        .def_readonly("level", &OracleSolution::level)
        .def_readonly("nodes", &OracleSolution::nodes)
        .def_readonly("cutoff_shift", &OracleSolution::cutoff_shift)
        .def_readonly("cutoff_ok", &OracleSolution::cutoff_ok);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("parameter", &SweepSpec::parameter)
        .def_readwrite("start", &SweepSpec::start)
        .def_readwrite("stop", &SweepSpec::stop)
        .def_readwrite("steps", &SweepSpec::steps)
        .def_readwrite("family_param", &SweepSpec::family_param)
        .def_readwrite("family_values", &SweepSpec::family_values);

    py::class_<SweepOptions>(m, "SweepOptions")
        .def(py::init<>())
        .def_readwrite("with_oracle", &SweepOptions::with_oracle)
        .def_readwrite("oracle_points", &SweepOptions::oracle_points)
        .def_readwrite("oracle_scan", &SweepOptions::oracle_scan)
        .def_readwrite("window", &SweepOptions::window);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("swept_value", &SweepRow::swept_value)
        .def_readonly("family_value", &SweepRow::family_value)
        .def_readonly("n", &SweepRow::n)
        .def_readonly("l", &SweepRow::l)
        .def_readonly("k", &SweepRow::k)
        .def_readonly("E", &SweepRow::E)
        .def_readonly("residual", &SweepRow::residual)
        .def_readonly("oracle_E", &SweepRow::oracle_E)
        .def_readonly("oracle_gap", &SweepRow::oracle_gap);

    py::class_<SweepTable>(m, "SweepTable")
        .def_readonly("swept_param", &SweepTable::swept_param)
        .def_readonly("family_param", &SweepTable::family_param)
        .def_readonly("rows", &SweepTable::rows)
        .def("to_csv", &SweepTable::to_csv);

    m.def("effective_angular_momentum", &effective_angular_momentum,
          py::arg("l"), py::arg("e"), py::arg("PhiB"),
          "l - e*PhiB/(2*pi), the only combination of l and flux the "
          "spectrum depends on");
    m.def("radial_coefficients", &radial_coefficients, py::arg("cfg"),
          py::arg("qn"), py::arg("E"));
    m.def("series_coefficients", &series_coefficients, py::arg("rc"),
          py::arg("N") = kDefaultSeriesLength);
    m.def("termination_residuals", &termination_residuals, py::arg("rc"),
          py::arg("n"));
    m.def("radial_wavefunction", &radial_wavefunction, py::arg("rc"),
          py::arg("N"), py::arg("r"));
    m.def("wavefunction_table", &wavefunction_table, py::arg("rc"),
          py::arg("N"), py::arg("r_max"), py::arg("points"),
          py::arg("normalize") = false);
    m.def("quantization_residual", &quantization_residual, py::arg("cfg"),
          py::arg("qn"), py::arg("E"));
    m.def("default_window", &default_window, py::arg("cfg"), py::arg("qn"));
    m.def("solve_energy", &solve_energy, py::arg("cfg"), py::arg("qn"),
          py::arg("spec"));
    m.def("ab_flux_shift_check",
          [](const PhysicalConfig& cfg, const QuantumNumbers& qn, int tau,
             const RootSearchSpec& spec, bool negative_shift) {
              const FluxShiftPair pair =
                  ab_flux_shift_check(cfg, qn, tau, spec, negative_shift);
              return py::make_tuple(pair.shifted_flux, pair.shifted_l,
                                    pair.difference);
          },
          py::arg("cfg"), py::arg("qn"), py::arg("tau"), py::arg("spec"),
          py::arg("negative_shift") = false);
    m.def("suggest_grid", &suggest_grid, py::arg("cfg"), py::arg("qn"),
          py::arg("window"), py::arg("points") = 4000);
    m.def("radial_operator_eigenvalues", &radial_operator_eigenvalues,
          py::arg("rc"), py::arg("grid"), py::arg("count"));
    m.def("extrapolated_eigenvalue", &extrapolated_eigenvalue, py::arg("rc"),
          py::arg("grid"), py::arg("m"));
    m.def("eigenvector_node_count", &eigenvector_node_count, py::arg("rc"),
          py::arg("grid"), py::arg("m"));
    m.def("oracle_roots", &oracle_roots, py::arg("cfg"), py::arg("qn"),
          py::arg("grid"), py::arg("spec"));
    m.def("oracle_energy", &oracle_energy, py::arg("cfg"), py::arg("qn"),
          py::arg("grid"), py::arg("spec"));
    m.def("run_sweep", &run_sweep, py::arg("cfg"), py::arg("qn"),
          py::arg("sweep"), py::arg("options") = SweepOptions{});
    m.def("parse_config_text", &parse_config_text, py::arg("text"),
          py::arg("name") = std::string("<config>"));
    m.def("load_config", &load_config, py::arg("path"));
    m.def("render_config", &render_config, py::arg("cfg"));
    m.def("format_double", &format_double, py::arg("value"));
}
