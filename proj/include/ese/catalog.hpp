#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ese/atomic_limits.hpp"
#include "ese/chl_core.hpp"
#include "ese/field_budget.hpp"

namespace ese {

// One physical emitter: geometry, resonance, power figures and an optional
// far-field measurement. delta_f_alt_hz carries a second documented bandwidth
// reading where the source data is ambiguous (the ELF facility).
struct EmitterRecord {
    std::string name;
    GeometryDescriptor geometry;
    double frequency_hz = 0.0;
    double delta_f_hz = 0.0;                 // primary interpretation
    std::optional<double> delta_f_alt_hz;    // alternate interpretation
    std::optional<double> p_in_w;
    std::optional<double> p_rad_w;
    std::optional<UncertainValue> efficiency;
    std::optional<double> efficiency_alt;    // secondary published estimate
    std::optional<FieldMeasurement> field;
    std::string notes;

    ResonanceSpec resonance(bool alternate = false) const;
};

enum class DeltaFInterpretation { primary, alternate };

DeltaFInterpretation parse_delta_f_interpretation(std::string_view tag);

/// Throws ValidationError naming the offending field/rule. Applied to builtin
/// records and user files alike.
void validate_emitter(const EmitterRecord& record);

/// The four reference emitters: ELF Clam Lake, VLF Cutler, LN rod, PZT disk.
std::vector<EmitterRecord> builtin_emitters();

/// The five reference transitions: H Lyman-alpha, Cs D1/D2, Rb87 D1/D2.
std::vector<AtomicTransition> builtin_transitions();

/// Finds a builtin emitter by case-sensitive name prefix ("ELF", "VLF", ...).
const EmitterRecord* find_builtin_emitter(const std::vector<EmitterRecord>& list,
                                          const std::string& prefix);

/// Parses and validates an emitter description file (key = value lines with
/// unit-suffixed keys; see README for the schema).
EmitterRecord load_emitter_file(const std::string& path);

/// Parses an emitter description from text (same format as the file).
EmitterRecord parse_emitter_text(const std::string& text);

/// Serializes a record back to the file format; load(serialize(r)) == r.
std::string serialize_emitter(const EmitterRecord& record);

} // namespace ese
