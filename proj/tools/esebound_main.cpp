// esebound — Chu-Harrington-limit bounds and figures of merit for
// electrically small emitters. Subcommands: tables, eval, atomic, sweep,
// validate. Exit codes: 0 success, 1 validation/tolerance failure,
// 2 input/parse error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ese/catalog.hpp"
#include "ese/reports.hpp"
#include "ese/validation.hpp"

namespace {

struct GlobalFlags {
    std::string format = "table";
    std::string delta_f_interpretation = "primary";
    std::string a_mode = "standard";
};

int run(int argc, char** argv) {
    CLI::App app{"Chu-Harrington-limit performance bounds for electrically "
                 "small emitters"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--format", flags.format, "Output format: table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--delta-f-interpretation", flags.delta_f_interpretation,
                   "Bandwidth reading where the source data is ambiguous")
        ->check(CLI::IsMember({"primary", "alternate"}));
    app.add_option("--a-mode", flags.a_mode,
                   "Spontaneous-emission coefficient convention")
        ->check(CLI::IsMember({"standard", "paper_factor2"}));

    // tables
    auto* tables = app.add_subcommand(
        "tables", "Recompute a reference table (1: facility bounds, "
                  "2: figures of merit, 3: atomic bounds)");
    tables->fallthrough();
    int which_table = 0;
    tables->add_option("which", which_table, "Table number")
        ->required()
        ->check(CLI::IsMember({1, 2, 3}));

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate an emitter description file");
    eval->fallthrough();
    std::string eval_path;
    eval->add_option("file", eval_path, "Emitter description file")->required();

    // atomic
    auto* atomic = app.add_subcommand(
        "atomic", "CHL bounds for one atomic state (element n l j)");
    atomic->fallthrough();
    std::string element;
    int state_n = 0;
    int state_l = 0;
    double state_j = 0.0;
    double given_radius = 0.0;
    double wavelength_override = 0.0;
    double solver_step = 1e-3;
    std::string atom_data_path;
    atomic->add_option("element", element, "H, Cs or Rb87")->required();
    atomic->add_option("n", state_n, "Principal quantum number")->required();
    atomic->add_option("l", state_l, "Orbital quantum number")->required();
    atomic->add_option("j", state_j, "Total angular momentum")->required();
    atomic->add_option("--radius", given_radius,
                       "Use this Chu radius [a0] instead of computing one");
    atomic->add_option("--wavelength-m", wavelength_override,
                       "Transition wavelength [m] (required for states "
                       "outside the builtin catalog)");
    atomic->add_option("--step", solver_step, "Radial solver step [a0]")
        ->check(CLI::PositiveNumber);
    atomic->add_option("--atom-data", atom_data_path,
                       "Alternate atom parameter file");

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "CSV sweep of the efficiency bound and power-density limit");
    sweep->fallthrough();
    std::string sweep_param;
    ese::SweepOptions sweep_options;
    sweep->add_option("--param", sweep_param,
                      "Swept parameter: frequency|radius|bandwidth")
        ->required()
        ->check(CLI::IsMember({"frequency", "radius", "bandwidth"}));
    sweep->add_option("--min", sweep_options.min, "Range start")->required();
    sweep->add_option("--max", sweep_options.max, "Range end")->required();
    sweep->add_option("--steps", sweep_options.steps, "Grid points (>= 2)")
        ->required();
    sweep->add_option("--frequency-hz", sweep_options.f_hz, "Fixed frequency");
    sweep->add_option("--delta-f-hz", sweep_options.delta_f_hz, "Fixed bandwidth");
    sweep->add_option("--radius-m", sweep_options.a_m, "Fixed radius");
    sweep->add_flag("--log", sweep_options.log_scale, "Log-spaced grid");

    // validate
    auto* validate = app.add_subcommand(
        "validate", "Run every reference check and report deviations");
    validate->fallthrough();
    bool validate_json = false;
    double perturb_frequency = 0.0;
    double validate_step = 1e-3;
    validate->add_flag("--json", validate_json, "Shorthand for --format json");
    validate->add_option(
        "--perturb-frequency-rel", perturb_frequency,
        "Scale all catalog frequencies by (1+x); a sensitivity self-test "
        "(nonzero values must fail)");
    validate->add_option("--step", validate_step, "Radial solver step [a0]")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    const ese::OutputFormat format = ese::parse_output_format(flags.format);
    const ese::DeltaFInterpretation interp =
        ese::parse_delta_f_interpretation(flags.delta_f_interpretation);
    const ese::EinsteinAMode a_mode = ese::parse_einstein_a_mode(flags.a_mode);

    if (tables->parsed()) {
        const auto emitters = ese::builtin_emitters();
        if (which_table == 1)
            std::cout << ese::render_table1(ese::compute_table1(emitters), format);
        else if (which_table == 2)
            std::cout << ese::render_table2(ese::compute_table2(emitters, interp),
                                            format);
        else
            std::cout << ese::render_table3(
                ese::compute_table3(ese::builtin_transitions()), format);
        return 0;
    }

    if (eval->parsed()) {
        const ese::EmitterRecord record = ese::load_emitter_file(eval_path);
        const ese::ReportRow row = ese::evaluate_emitter(record, interp);
        std::cout << ese::render_report_row(row, format);
        return 0;
    }

    if (atomic->parsed()) {
        ese::QuantumState state{element, state_n, state_l, state_j};
        ese::AtomicStateOptions options;
        options.a_mode = a_mode;
        options.solver.step_au = solver_step;
        if (given_radius != 0.0)
            options.given_radius_au = given_radius;
        if (wavelength_override != 0.0)
            options.wavelength_m = wavelength_override;
        const ese::AtomParameterTable table =
            atom_data_path.empty() ? ese::AtomParameterTable::embedded()
                                   : ese::AtomParameterTable::load(atom_data_path);
        const ese::AtomicStateReport report =
            ese::evaluate_atomic_state(state, table, options);
        std::cout << ese::render_atomic_state(report, format);
        return 0;
    }

    if (sweep->parsed()) {
        sweep_options.param = ese::parse_sweep_param(sweep_param);
        std::cout << ese::sweep_csv(sweep_options);
        return 0;
    }

    if (validate->parsed()) {
        ese::ValidationOptions options;
        options.frequency_perturbation_rel = perturb_frequency;
        options.solver_step_au = validate_step;
        const ese::ValidationSummary summary = ese::run_validation(options);
        std::cout << ese::render_validation(
            summary, validate_json ? ese::OutputFormat::json : format);
        return summary.all_pass ? 0 : 1;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ese::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ese::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
