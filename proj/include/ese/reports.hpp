#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ese/atomic_limits.hpp"
#include "ese/catalog.hpp"
#include "ese/radial_atoms.hpp"

namespace ese {

enum class OutputFormat { table, csv, json };

OutputFormat parse_output_format(std::string_view tag);

/// Shortest round-trip decimal representation (locale-independent).
std::string format_full(double v);

/// Scientific notation with 3 significant digits, for human tables.
std::string format_sci3(double v);

// A computed cell side by side with the published reference value, when one
// exists. rel_dev = (computed - published)/|published|.
struct ComparisonCell {
    double computed = 0.0;
    std::optional<double> published;
    std::optional<double> rel_dev;
};

ComparisonCell make_comparison(double computed, std::optional<double> published);

// Full evaluation of one emitter.
struct ReportRow {
    std::string label;
    double f_hz = 0.0;
    double delta_f_hz = 0.0;
    double a_m = 0.0;
    ChlReport chl;
    std::optional<UncertainValue> eta;
    std::string eta_source; // "given" | "p_rad/p_in" | "field measurement"
    std::optional<UncertainValue> fom_u;
    // Present when eta came from a field measurement: the inference pipeline
    // intermediates plus the measurement echo (distance, far-field onset,
    // gain are informational).
    std::optional<RadiationBudget> budget;
    std::optional<FieldMeasurement> field;
    std::vector<std::string> flags;
};

ReportRow evaluate_emitter(const EmitterRecord& record,
                           DeltaFInterpretation interp = DeltaFInterpretation::primary);

// Facility bound table (one row per bandwidth interpretation).
struct FacilityBoundRow {
    std::string facility;
    double f_hz = 0.0;
    double delta_f_hz = 0.0;
    double a_m = 0.0;
    double ka = 0.0;
    ComparisonCell q_chl;
    ComparisonCell efficiency_bound;
    std::string reported_efficiency;
    std::vector<std::string> flags;
};

// Figure-of-merit table.
struct FomRow {
    std::string name;
    double fom_computed = 0.0;
    std::optional<double> fom_sigma;
    std::optional<double> published;        // point reference
    std::optional<double> published_low;    // band reference ("~ 1")
    std::optional<double> published_high;
    std::string published_text;
    std::optional<double> rel_dev;
    std::vector<std::string> flags;
};

// Atomic bound table.
struct AtomicBoundRow {
    std::string label;
    std::string element;
    int n = 0;
    int l = 0;
    double j = 0.0;
    double wavelength_m = 0.0;
    double chu_radius_au = 0.0;
    std::optional<double> chu_radius_published_au;
    ComparisonCell lifetime_bound_s;
    double reference_lifetime_s = 0.0;
    ComparisonCell dipole_bound_au;
    double reference_dipole_au = 0.0;
    std::vector<std::string> flags;
};

std::vector<FacilityBoundRow> compute_table1(const std::vector<EmitterRecord>& emitters);
std::vector<FomRow> compute_table2(const std::vector<EmitterRecord>& emitters,
                                   DeltaFInterpretation interp = DeltaFInterpretation::primary);
std::vector<AtomicBoundRow> compute_table3(const std::vector<AtomicTransition>& transitions);

std::string render_table1(const std::vector<FacilityBoundRow>& rows, OutputFormat format);
std::string render_table2(const std::vector<FomRow>& rows, OutputFormat format);
std::string render_table3(const std::vector<AtomicBoundRow>& rows, OutputFormat format);
std::string render_report_row(const ReportRow& row, OutputFormat format);

// Reference bounds for one quantum state (the `atomic` subcommand).
struct AtomicStateReport {
    QuantumState state;
    double radius_au = 0.0;
    std::string radius_source; // "closed form" | "radial solve" | "given"
    double wavelength_m = 0.0;
    double frequency_hz = 0.0;
    AtomicBoundReport bounds;
    double einstein_a_at_bound = 0.0; // A(dipole bound) in the chosen mode
    std::optional<double> reference_lifetime_s;
    std::optional<double> reference_dipole_au;
    std::vector<std::string> flags;
};

struct AtomicStateOptions {
    std::optional<double> given_radius_au; // overrides the computed radius
    std::optional<double> wavelength_m;    // overrides the catalog lookup
    EinsteinAMode a_mode = EinsteinAMode::standard;
    SolverOptions solver;
};

AtomicStateReport evaluate_atomic_state(const QuantumState& state,
                                        const AtomParameterTable& table,
                                        const AtomicStateOptions& options = {});

std::string render_atomic_state(const AtomicStateReport& report, OutputFormat format);

// Parameter sweep of the bound/ceiling curves; emits CSV (header + one row
// per grid point), byte-deterministic for identical inputs.
enum class SweepParam { frequency, radius, bandwidth };

SweepParam parse_sweep_param(std::string_view tag);

struct SweepOptions {
    SweepParam param = SweepParam::radius;
    double min = 0.0;
    double max = 0.0;
    int steps = 0; // >= 2
    double f_hz = 0.0;       // fixed frequency (radius/bandwidth sweeps)
    double delta_f_hz = 0.0; // fixed bandwidth (frequency/radius sweeps)
    double a_m = 0.0;        // fixed radius (frequency/bandwidth sweeps)
    bool log_scale = false;
};

std::string sweep_csv(const SweepOptions& options);

} // namespace ese
