// Python bindings for the esebound core: the CHL algebra, the field-to-power
// pipeline, the atomic bounds, the radial solver, and the reference catalog.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ese/catalog.hpp"
#include "ese/constants.hpp"
#include "ese/radial_atoms.hpp"
#include "ese/reports.hpp"
#include "ese/validation.hpp"

namespace py = pybind11;
using namespace ese;

namespace {

GeometryDescriptor geometry_from_kwargs(const std::string& kind, double length,
                                        double diameter, double height,
                                        double radius) {
    GeometryDescriptor g;
    g.kind = parse_geometry_kind(kind);
    g.length_m = length;
    g.diameter_m = diameter;
    g.height_m = height;
    g.radius_m = radius;
    return g;
}

} // namespace

PYBIND11_MODULE(_esebound, m) {
    m.doc() = "Chu-Harrington-limit performance bounds for electrically small "
              "emitters";

    // Constants
    py::module_ constants = m.def_submodule("constants", "CODATA 2018 values (SI)");
    constants.attr("c") = ese::constants::c;
    constants.attr("mu0") = ese::constants::mu0;
    constants.attr("eps0") = ese::constants::eps0;
    constants.attr("h") = ese::constants::h;
    constants.attr("hbar") = ese::constants::hbar;
    constants.attr("e_charge") = ese::constants::e_charge;
    constants.attr("a0") = ese::constants::a0;
    constants.attr("ea0") = ese::constants::ea0;

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_LookupError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<UncertainValue>(m, "UncertainValue")
        .def(py::init<double, double>(), py::arg("value"), py::arg("sigma") = 0.0)
        .def_readonly("value", &UncertainValue::value)
        .def_readonly("sigma", &UncertainValue::sigma)
        .def("__repr__", [](const UncertainValue& v) {
            return "UncertainValue(" + format_full(v.value) + ", " +
                   format_full(v.sigma) + ")";
        });

    m.def("convert_length",
          [](double value, const std::string& unit) {
              return convert_length(value, parse_length_unit(unit));
          },
          py::arg("value"), py::arg("unit"),
          "Convert a length to meters; units: mile, cm, m, bohr");
    m.def("wavelength_to_frequency", &wavelength_to_frequency, py::arg("lambda_m"));
    m.def("frequency_to_wavelength", &frequency_to_wavelength, py::arg("f_hz"));
    m.def("dipole_si_to_atomic", &dipole_si_to_atomic, py::arg("d_si"));

    // CHL algebra
    py::class_<ResonanceSpec>(m, "ResonanceSpec")
        .def(py::init<double, double>(), py::arg("f_hz"), py::arg("delta_f_hz"))
        .def_readonly("f_hz", &ResonanceSpec::f_hz)
        .def_readonly("delta_f_hz", &ResonanceSpec::delta_f_hz);

    py::class_<GeometryDescriptor>(m, "GeometryDescriptor")
        .def(py::init(&geometry_from_kwargs), py::arg("kind"),
             py::arg("length_m") = 0.0, py::arg("diameter_m") = 0.0,
             py::arg("height_m") = 0.0, py::arg("radius_m") = 0.0)
        .def_readonly("length_m", &GeometryDescriptor::length_m)
        .def_readonly("diameter_m", &GeometryDescriptor::diameter_m)
        .def_readonly("height_m", &GeometryDescriptor::height_m)
        .def_readonly("radius_m", &GeometryDescriptor::radius_m);

    m.def("q_stored", &q_stored, py::arg("w_m_j"), py::arg("w_e_j"),
          py::arg("p_rad_w"), py::arg("p_loss_w"), py::arg("omega_rad_s"));
    m.def("q_chl", &q_chl, py::arg("ka"), "Chu-Harrington limit 1/(ka)^3 + 1/ka");
    m.def("q_chl_deep_subwavelength", &q_chl_deep_subwavelength, py::arg("ka"));
    m.def("q_bw", &q_bw, py::arg("res"));
    m.def("efficiency_bound", &efficiency_bound, py::arg("res"), py::arg("a_m"));
    m.def("efficiency_bound_unclipped", &efficiency_bound_unclipped, py::arg("res"),
          py::arg("a_m"));
    m.def("power_density_limit", &power_density_limit, py::arg("res"));
    m.def("fom", &fom, py::arg("eta"), py::arg("a_m"), py::arg("res"));
    m.def("enclosing_radius", &enclosing_radius, py::arg("geometry"));

    // Field budget
    m.def("isotropic_radiated_power",
          [](double b_rms_t, double b_sigma_t, double distance_m) {
              FieldMeasurement measurement;
              measurement.b_rms_t = UncertainValue{b_rms_t, b_sigma_t};
              measurement.distance_m = distance_m;
              return isotropic_radiated_power(measurement);
          },
          py::arg("b_rms_t"), py::arg("b_sigma_t"), py::arg("distance_m"));
    m.def("gain_corrected_power", &gain_corrected_power, py::arg("p_iso_w"),
          py::arg("gain"));
    m.def("radiation_efficiency", &radiation_efficiency, py::arg("p_rad_w"),
          py::arg("p_in_w"));
    m.def("vswr_bandwidth", &vswr_bandwidth, py::arg("f_hz"), py::arg("q_total"),
          py::arg("s"));

    // Atomic bounds
    m.def("uncertainty_qbw_bound", &uncertainty_qbw_bound, py::arg("f_hz"),
          py::arg("delta_t_s"));
    m.def("lifetime_bound",
          [](double wavelength_m, double chu_radius_au) {
              AtomicTransition t;
              t.wavelength_m = wavelength_m;
              t.chu_radius_au = chu_radius_au;
              return lifetime_bound(t);
          },
          py::arg("wavelength_m"), py::arg("chu_radius_au"));
    m.def("dipole_bound",
          [](double wavelength_m, double chu_radius_au) {
              AtomicTransition t;
              t.wavelength_m = wavelength_m;
              t.chu_radius_au = chu_radius_au;
              return dipole_bound(t);
          },
          py::arg("wavelength_m"), py::arg("chu_radius_au"));
    m.def("einstein_a",
          [](double f_hz, double d_au, const std::string& mode) {
              return einstein_a(f_hz, d_au, parse_einstein_a_mode(mode));
          },
          py::arg("f_hz"), py::arg("d_au"), py::arg("mode") = "standard");

    // Radial wavefunctions
    m.def("hydrogen_rms_radius", &hydrogen_rms_radius, py::arg("n"), py::arg("l"));
    m.def("alkali_rms_radius",
          [](const std::string& element, int n, int l, double j, double step_au) {
              QuantumState state{element, n, l, j};
              SolverOptions options;
              options.step_au = step_au;
              return state_rms_radius(state, AtomParameterTable::embedded(), options);
          },
          py::arg("element"), py::arg("n"), py::arg("l"), py::arg("j"),
          py::arg("step_au") = 1e-3,
          "RMS radius sqrt(<r^2>) in Bohr radii via the quantum-defect "
          "Numerov solver (closed form for H)");

    // Catalog + reports
    py::class_<AtomicTransition>(m, "AtomicTransition")
        .def_readonly("label", &AtomicTransition::label)
        .def_readonly("element", &AtomicTransition::element)
        .def_readonly("n", &AtomicTransition::n)
        .def_readonly("l", &AtomicTransition::l)
        .def_readonly("j", &AtomicTransition::j)
        .def_readonly("wavelength_m", &AtomicTransition::wavelength_m)
        .def_readonly("chu_radius_au", &AtomicTransition::chu_radius_au)
        .def_readonly("chu_radius_published_au",
                      &AtomicTransition::chu_radius_published_au)
        .def_readonly("reference_lifetime_s", &AtomicTransition::reference_lifetime_s)
        .def_readonly("reference_dipole_au", &AtomicTransition::reference_dipole_au);

    py::class_<EmitterRecord>(m, "EmitterRecord")
        .def_readonly("name", &EmitterRecord::name)
        .def_readonly("frequency_hz", &EmitterRecord::frequency_hz)
        .def_readonly("delta_f_hz", &EmitterRecord::delta_f_hz)
        .def_readonly("notes", &EmitterRecord::notes)
        .def_property_readonly("enclosing_radius_m", [](const EmitterRecord& r) {
            return enclosing_radius(r.geometry);
        });

    m.def("builtin_emitters", &builtin_emitters);
    m.def("builtin_transitions", &builtin_transitions);
    m.def("load_emitter_file", &load_emitter_file, py::arg("path"));

    m.def("evaluate_emitter_json",
          [](const std::string& path, const std::string& interpretation) {
              const EmitterRecord record = load_emitter_file(path);
              const ReportRow row = evaluate_emitter(
                  record, parse_delta_f_interpretation(interpretation));
              return render_report_row(row, OutputFormat::json);
          },
          py::arg("path"), py::arg("interpretation") = "primary",
          "Evaluate an emitter description file; returns the JSON report");

    m.def("evaluate_builtin_json",
          [](const std::string& name_prefix, const std::string& interpretation) {
              const auto emitters = builtin_emitters();
              const EmitterRecord* record = find_builtin_emitter(emitters, name_prefix);
              if (!record)
                  throw DataError("no builtin emitter matching '" + name_prefix + "'");
              const ReportRow row = evaluate_emitter(
                  *record, parse_delta_f_interpretation(interpretation));
              return render_report_row(row, OutputFormat::json);
          },
          py::arg("name_prefix"), py::arg("interpretation") = "primary");

    m.def("validate_json",
          [](double solver_step_au, bool skip_solver) {
              ValidationOptions options;
              options.solver_step_au = solver_step_au;
              options.skip_solver = skip_solver;
              return render_validation(run_validation(options), OutputFormat::json);
          },
          py::arg("solver_step_au") = 1e-3, py::arg("skip_solver") = false,
          "Run the full reference-check suite; returns the JSON summary");
}
