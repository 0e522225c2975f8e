#include "ese/catalog.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace ese {

ResonanceSpec EmitterRecord::resonance(bool alternate) const {
    if (alternate && delta_f_alt_hz)
        return ResonanceSpec(frequency_hz, *delta_f_alt_hz);
    return ResonanceSpec(frequency_hz, delta_f_hz);
}

DeltaFInterpretation parse_delta_f_interpretation(std::string_view tag) {
    if (tag == "primary")
        return DeltaFInterpretation::primary;
    if (tag == "alternate")
        return DeltaFInterpretation::alternate;
    throw InputError("unknown delta-f interpretation: '" + std::string(tag) + "'");
}

void validate_emitter(const EmitterRecord& record) {
    if (record.name.empty())
        throw ValidationError("emitter record: 'name' is required");
    for (const double v :
         {record.geometry.length_m, record.geometry.diameter_m,
          record.geometry.height_m, record.geometry.radius_m,
          record.frequency_hz, record.delta_f_hz,
          record.delta_f_alt_hz.value_or(0.0), record.p_in_w.value_or(0.0),
          record.p_rad_w.value_or(0.0),
          record.efficiency ? record.efficiency->value : 0.0,
          record.efficiency ? record.efficiency->sigma : 0.0,
          record.efficiency_alt.value_or(0.0),
          record.field ? record.field->b_rms_t.value : 0.0,
          record.field ? record.field->b_rms_t.sigma : 0.0,
          record.field ? record.field->distance_m : 0.0,
          record.field ? record.field->far_field_onset_m : 0.0,
          record.field ? record.field->gain : 1.0})
        if (!std::isfinite(v))
            throw ValidationError("emitter record: all numbers must be finite");
    enclosing_radius(record.geometry); // checks per-kind dimensions > 0
    if (!(record.frequency_hz > 0.0))
        throw ValidationError("emitter record: 'frequency_hz' must be > 0");
    if (!(record.delta_f_hz > 0.0))
        throw ValidationError("emitter record: 'delta_f_hz' must be > 0");
    if (!(record.delta_f_hz < record.frequency_hz))
        throw ValidationError(
            "emitter record: 'delta_f_hz' must be < 'frequency_hz'");
    if (record.delta_f_alt_hz &&
        (!(*record.delta_f_alt_hz > 0.0) ||
         !(*record.delta_f_alt_hz < record.frequency_hz)))
        throw ValidationError(
            "emitter record: 'delta_f_alt_hz' must be in (0, frequency_hz)");
    if (record.p_in_w && !(*record.p_in_w > 0.0))
        throw ValidationError("emitter record: 'p_in_w' must be > 0");
    if (record.p_rad_w && !(*record.p_rad_w > 0.0))
        throw ValidationError("emitter record: 'p_rad_w' must be > 0");
    if (record.efficiency &&
        (!(record.efficiency->value > 0.0) || !(record.efficiency->sigma >= 0.0)))
        throw ValidationError("emitter record: 'efficiency' must be > 0");
    if (record.efficiency_alt && !(*record.efficiency_alt > 0.0))
        throw ValidationError("emitter record: 'efficiency_alt' must be > 0");
    if (record.field) {
        if (!(record.field->b_rms_t.value >= 0.0))
            throw ValidationError("emitter record: 'b_rms_t' must be >= 0");
        if (!(record.field->distance_m > 0.0))
            throw ValidationError("emitter record: 'distance_m' must be > 0");
        if (!(record.field->gain >= 1.0))
            throw ValidationError("emitter record: 'gain' must be >= 1");
    }
    const bool has_efficiency = record.efficiency.has_value();
    const bool has_power_pair = record.p_rad_w && record.p_in_w;
    const bool has_field_pair = record.field && record.p_in_w;
    if (!has_efficiency && !has_power_pair && !has_field_pair)
        throw ValidationError(
            "emitter record: need 'efficiency', or 'p_rad_w' with 'p_in_w', or "
            "a field measurement with 'p_in_w', to compute the FOM");
}

std::vector<EmitterRecord> builtin_emitters() {
    std::vector<EmitterRecord> list;

    {
        // Clam Lake ELF facility: two orthogonal 14-mile dipoles, 76 Hz MSK.
        // The 4 Hz bandwidth reading is the half span of the 72/80 Hz MSK
        // tones; the 8 Hz alternate is the full span.
        EmitterRecord r;
        r.name = "ELF Clam Lake";
        r.geometry = GeometryDescriptor::crossed_dipoles(convert_length(14.0, LengthUnit::mile));
        r.frequency_hz = 76.0;
        r.delta_f_hz = 4.0;
        r.delta_f_alt_hz = 8.0;
        r.p_in_w = 1e6;
        r.p_rad_w = 2.0;
        r.notes = "MSK tones 72/80 Hz; ~2 W radiated at 1 MW input";
        list.push_back(std::move(r));
    }
    {
        // Cutler VLF facility (NAA): enclosing-sphere radius taken as given.
        EmitterRecord r;
        r.name = "VLF Cutler";
        r.geometry = GeometryDescriptor::sphere(935.0);
        r.frequency_hz = 24000.0;
        r.delta_f_hz = 240.0;
        r.efficiency = UncertainValue{0.5, 0.0};
        r.notes = "bandwidth 1.2 x 200 baud; reported efficiency > 0.5";
        list.push_back(std::move(r));
    }
    {
        // Lithium-niobate piezoelectric rod (Kemp et al., Nat. Commun. 2017):
        // 35.568 kHz, total Q = 303000, VSWR=2 bandwidth 84 mHz. Enclosing
        // radius convention a = L/2; the half-diagonal alternative 0.0477 m
        // would lower Q_CHL by ~4%.
        EmitterRecord r;
        r.name = "LN rod";
        r.geometry = GeometryDescriptor::rod(0.094, 0.016);
        r.frequency_hz = 35568.0;
        r.delta_f_hz = 0.084;
        r.efficiency = UncertainValue{1e-8, 0.0};
        r.efficiency_alt = 2e-7;
        r.notes = "Q=303000, VSWR=2; efficiency estimate range 1e-8..2e-7 "
                  "(upper end from secondary resonance, Q=615000)";
        list.push_back(std::move(r));
    }
    {
        // PZT disk (Hassanien et al., Sci. Rep. 2020): BFSK at 33.218/33.248
        // kHz; center frequency is the tone midpoint, bandwidth their spacing.
        EmitterRecord r;
        r.name = "PZT disk";
        r.geometry = GeometryDescriptor::disk(0.08, 0.01);
        r.frequency_hz = 33233.0;
        r.delta_f_hz = 30.0;
        r.p_in_w = 1.2;
        FieldMeasurement m;
        m.b_rms_t = UncertainValue{50e-15, 10e-15};
        m.distance_m = 4.5;
        m.far_field_onset_m = 1.3;
        m.gain = 1.5;
        r.field = m;
        r.notes = "BFSK tones 33.218/33.248 kHz; 50 +/- 10 fT at 4.5 m";
        list.push_back(std::move(r));
    }

    for (const EmitterRecord& r : list)
        validate_emitter(r);
    return list;
}

std::vector<AtomicTransition> builtin_transitions() {
    std::vector<AtomicTransition> list;

    {
        // H 1S-2P (Lyman-alpha). The 1S RMS radius is sqrt(3) a0 in closed
        // form, but only the 2P radius sqrt(30) reproduces the reference
        // bounds; both are carried.
        AtomicTransition t;
        t.label = "H 1S-2P";
        t.element = "H";
        t.n = 2;
        t.l = 1;
        t.j = 1.5;
        t.wavelength_m = 121.567e-9;
        t.chu_radius_au = std::sqrt(30.0);
        t.chu_radius_published_au = 1.73;
        t.reference_lifetime_s = 1.6e-9;
        t.reference_dipole_au = 0.745;
        list.push_back(std::move(t));
    }
    {
        AtomicTransition t;
        t.label = "Cs D1";
        t.element = "Cs";
        t.n = 6;
        t.l = 1;
        t.j = 0.5;
        t.wavelength_m = 894.593e-9;
        t.chu_radius_au = 8.18;
        t.reference_lifetime_s = 34.79e-9;
        t.reference_dipole_au = 3.19;
        list.push_back(std::move(t));
    }
    {
        AtomicTransition t;
        t.label = "Cs D2";
        t.element = "Cs";
        t.n = 6;
        t.l = 1;
        t.j = 1.5;
        t.wavelength_m = 852.347e-9;
        t.chu_radius_au = 8.42;
        t.reference_lifetime_s = 30.41e-9;
        t.reference_dipole_au = 4.48;
        list.push_back(std::move(t));
    }
    {
        AtomicTransition t;
        t.label = "Rb87 D1";
        t.element = "Rb87";
        t.n = 5;
        t.l = 1;
        t.j = 0.5;
        t.wavelength_m = 794.979e-9;
        t.chu_radius_au = 7.72;
        t.reference_lifetime_s = 27.68e-9;
        t.reference_dipole_au = 2.99;
        list.push_back(std::move(t));
    }
    {
        AtomicTransition t;
        t.label = "Rb87 D2";
        t.element = "Rb87";
        t.n = 5;
        t.l = 1;
        t.j = 1.5;
        t.wavelength_m = 780.241e-9;
        t.chu_radius_au = 7.82;
        t.reference_lifetime_s = 26.24e-9;
        t.reference_dipole_au = 4.23;
        list.push_back(std::move(t));
    }
    return list;
}

const EmitterRecord* find_builtin_emitter(const std::vector<EmitterRecord>& list,
                                          const std::string& prefix) {
    for (const EmitterRecord& r : list)
        if (r.name.rfind(prefix, 0) == 0)
            return &r;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Emitter description files
// ---------------------------------------------------------------------------

static double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        while (pos < value.size() && std::isspace(static_cast<unsigned char>(value[pos])))
            ++pos;
        if (pos != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("emitter file: field '" + key +
                         "' is not a number: '" + value + "'");
    }
}

static std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

EmitterRecord parse_emitter_text(const std::string& text) {
    std::map<std::string, std::string> fields;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ParseError("emitter file: line " + std::to_string(line_no) +
                             " is not 'key = value': '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ParseError("emitter file: empty key on line " +
                             std::to_string(line_no));
        if (fields.count(key))
            throw ParseError("emitter file: duplicate field '" + key + "'");
        fields[key] = value;
    }

    auto take = [&fields](const char* key) -> std::optional<std::string> {
        auto it = fields.find(key);
        if (it == fields.end())
            return std::nullopt;
        std::string v = it->second;
        fields.erase(it);
        return v;
    };
    auto take_number = [&take](const char* key) -> std::optional<double> {
        auto v = take(key);
        if (!v)
            return std::nullopt;
        return parse_number(key, *v);
    };
    auto require_number = [&take_number](const char* key) {
        auto v = take_number(key);
        if (!v)
            throw ValidationError(std::string("emitter file: required field '") +
                                  key + "' is missing");
        return *v;
    };

    EmitterRecord record;
    auto name = take("name");
    if (!name || name->empty())
        throw ValidationError("emitter file: required field 'name' is missing");
    record.name = *name;

    auto geometry_tag = take("geometry");
    if (!geometry_tag)
        throw ValidationError("emitter file: required field 'geometry' is missing");
    record.geometry.kind = parse_geometry_kind(*geometry_tag);
    switch (record.geometry.kind) {
    case GeometryKind::rod:
        record.geometry.length_m = require_number("length_m");
        record.geometry.diameter_m = require_number("diameter_m");
        break;
    case GeometryKind::disk:
        record.geometry.diameter_m = require_number("diameter_m");
        record.geometry.height_m = require_number("height_m");
        break;
    case GeometryKind::crossed_dipoles:
        record.geometry.length_m = require_number("length_m");
        break;
    case GeometryKind::sphere:
        record.geometry.radius_m = require_number("radius_m");
        break;
    }

    record.frequency_hz = require_number("frequency_hz");
    record.delta_f_hz = require_number("delta_f_hz");
    record.delta_f_alt_hz = take_number("delta_f_alt_hz");
    record.p_in_w = take_number("p_in_w");
    record.p_rad_w = take_number("p_rad_w");

    if (auto eta = take_number("efficiency")) {
        const double sigma = take_number("efficiency_sigma").value_or(0.0);
        if (sigma < 0.0)
            throw ValidationError("emitter file: 'efficiency_sigma' must be >= 0");
        record.efficiency = UncertainValue{*eta, sigma};
    } else if (take_number("efficiency_sigma")) {
        throw ValidationError(
            "emitter file: 'efficiency_sigma' given without 'efficiency'");
    }
    record.efficiency_alt = take_number("efficiency_alt");

    if (auto b = take_number("b_rms_t")) {
        FieldMeasurement m;
        const double sigma = take_number("b_sigma_t").value_or(0.0);
        if (sigma < 0.0)
            throw ValidationError("emitter file: 'b_sigma_t' must be >= 0");
        m.b_rms_t = UncertainValue{*b, sigma};
        auto distance = take_number("distance_m");
        if (!distance)
            throw ValidationError(
                "emitter file: 'distance_m' is required with 'b_rms_t'");
        m.distance_m = *distance;
        m.far_field_onset_m = take_number("far_field_onset_m").value_or(0.0);
        m.gain = take_number("gain").value_or(1.5);
        record.field = m;
    } else {
        for (const char* key : {"b_sigma_t", "distance_m", "far_field_onset_m", "gain"})
            if (fields.count(key))
                throw ValidationError(std::string("emitter file: '") + key +
                                      "' given without 'b_rms_t'");
    }

    record.notes = take("notes").value_or("");

    if (!fields.empty())
        throw ParseError("emitter file: unknown field '" + fields.begin()->first +
                         "'");

    validate_emitter(record);
    return record;
}

EmitterRecord load_emitter_file(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw ParseError("cannot open emitter file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_emitter_text(buffer.str());
}

static std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string serialize_emitter(const EmitterRecord& record) {
    std::ostringstream out;
    out << "name = " << record.name << "\n";
    out << "geometry = " << geometry_kind_name(record.geometry.kind) << "\n";
    switch (record.geometry.kind) {
    case GeometryKind::rod:
        out << "length_m = " << format_number(record.geometry.length_m) << "\n";
        out << "diameter_m = " << format_number(record.geometry.diameter_m) << "\n";
        break;
    case GeometryKind::disk:
        out << "diameter_m = " << format_number(record.geometry.diameter_m) << "\n";
        out << "height_m = " << format_number(record.geometry.height_m) << "\n";
        break;
    case GeometryKind::crossed_dipoles:
        out << "length_m = " << format_number(record.geometry.length_m) << "\n";
        break;
    case GeometryKind::sphere:
        out << "radius_m = " << format_number(record.geometry.radius_m) << "\n";
        break;
    }
    out << "frequency_hz = " << format_number(record.frequency_hz) << "\n";
    out << "delta_f_hz = " << format_number(record.delta_f_hz) << "\n";
    if (record.delta_f_alt_hz)
        out << "delta_f_alt_hz = " << format_number(*record.delta_f_alt_hz) << "\n";
    if (record.p_in_w)
        out << "p_in_w = " << format_number(*record.p_in_w) << "\n";
    if (record.p_rad_w)
        out << "p_rad_w = " << format_number(*record.p_rad_w) << "\n";
    if (record.efficiency) {
        out << "efficiency = " << format_number(record.efficiency->value) << "\n";
        if (record.efficiency->sigma > 0.0)
            out << "efficiency_sigma = " << format_number(record.efficiency->sigma)
                << "\n";
    }
    if (record.efficiency_alt)
        out << "efficiency_alt = " << format_number(*record.efficiency_alt) << "\n";
    if (record.field) {
        out << "b_rms_t = " << format_number(record.field->b_rms_t.value) << "\n";
        if (record.field->b_rms_t.sigma > 0.0)
            out << "b_sigma_t = " << format_number(record.field->b_rms_t.sigma)
                << "\n";
        out << "distance_m = " << format_number(record.field->distance_m) << "\n";
        if (record.field->far_field_onset_m > 0.0)
            out << "far_field_onset_m = "
                << format_number(record.field->far_field_onset_m) << "\n";
        out << "gain = " << format_number(record.field->gain) << "\n";
    }
    if (!record.notes.empty())
        out << "notes = " << record.notes << "\n";
    return out.str();
}

} // namespace ese
