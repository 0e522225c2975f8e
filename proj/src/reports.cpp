#include "ese/reports.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ese {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view tag) {
    if (tag == "table")
        return OutputFormat::table;
    if (tag == "csv")
        return OutputFormat::csv;
    if (tag == "json")
        return OutputFormat::json;
    throw InputError("unknown output format: '" + std::string(tag) + "'");
}

std::string format_full(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_sci3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

ComparisonCell make_comparison(double computed, std::optional<double> published) {
    ComparisonCell cell;
    cell.computed = computed;
    cell.published = published;
    if (published && *published != 0.0)
        cell.rel_dev = (computed - *published) / std::abs(*published);
    return cell;
}

static std::string join_flags(const std::vector<std::string>& flags) {
    std::string out;
    for (const std::string& f : flags) {
        if (!out.empty())
            out += "; ";
        out += f;
    }
    return out;
}

static std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

static ordered_json cell_json(const ComparisonCell& cell) {
    ordered_json j;
    j["computed"] = cell.computed;
    j["published"] = cell.published ? ordered_json(*cell.published) : ordered_json(nullptr);
    j["rel_dev"] = cell.rel_dev ? ordered_json(*cell.rel_dev) : ordered_json(nullptr);
    return j;
}

// ---------------------------------------------------------------------------
// Emitter evaluation
// ---------------------------------------------------------------------------

ReportRow evaluate_emitter(const EmitterRecord& record, DeltaFInterpretation interp) {
    validate_emitter(record);
    ReportRow row;
    row.label = record.name;

    const bool alternate = interp == DeltaFInterpretation::alternate;
    const ResonanceSpec res = record.resonance(alternate);
    if (alternate && record.delta_f_alt_hz)
        row.flags.push_back("alternate bandwidth interpretation (delta_f = " +
                            format_full(res.delta_f_hz) + " Hz)");

    row.f_hz = res.f_hz;
    row.delta_f_hz = res.delta_f_hz;
    row.a_m = enclosing_radius(record.geometry);

    // Efficiency source precedence: explicit value, radiated/input power
    // ratio, far-field inference.
    if (record.efficiency) {
        row.eta = record.efficiency;
        row.eta_source = "given";
    } else if (record.p_rad_w && record.p_in_w) {
        row.eta = UncertainValue{*record.p_rad_w / *record.p_in_w, 0.0};
        row.eta_source = "p_rad/p_in";
    } else if (record.field && record.p_in_w) {
        row.budget = radiation_budget(*record.field, *record.p_in_w);
        row.field = record.field;
        row.eta = row.budget->eta;
        row.eta_source = "field measurement";
    }

    const double eta_value = row.eta ? row.eta->value : 0.0;
    row.chl = chl_report(res, row.a_m, eta_value);
    if (row.eta) {
        const double rel_sigma =
            row.eta->value > 0.0 ? row.eta->sigma / row.eta->value : 0.0;
        row.fom_u = UncertainValue{row.chl.fom, row.chl.fom * rel_sigma};
    }

    if (row.chl.efficiency_bound_clipped)
        row.flags.push_back("efficiency bound clipped at 1 (f/delta_f >= Q_CHL)");
    if (row.eta && row.eta->value > row.chl.efficiency_bound) {
        std::string flag = "efficiency exceeds CHL efficiency bound";
        if (row.eta->sigma > 0.0 &&
            row.eta->value - 2.0 * row.eta->sigma <= row.chl.efficiency_bound)
            flag += " (consistent within 2 sigma)";
        row.flags.push_back(flag);
    }
    if (row.chl.fom > 1.0)
        row.flags.push_back("FOM > 1");
    if (record.efficiency_alt)
        row.flags.push_back("secondary published efficiency estimate " +
                            format_full(*record.efficiency_alt));
    return row;
}

// ---------------------------------------------------------------------------
// Published reference values shown next to recomputed cells
// ---------------------------------------------------------------------------

namespace {

struct FacilityReference {
    const char* name_prefix;
    bool alternate_delta_f;
    std::optional<double> q_chl;
    std::optional<double> bound;
    const char* reported_efficiency;
};

// ELF bound reference 1.5e-4 corresponds to the full 72-80 Hz tone span
// (delta_f = 8 Hz); the FOM reference below needs delta_f = 4 Hz.
const FacilityReference kFacilityReferences[] = {
    {"ELF", false, 6.1e4, std::nullopt, "~ 2e-06"},
    {"ELF", true, 6.1e4, 1.5e-4, "~ 2e-06"},
    {"VLF", false, 11.7, 1.0, "> 0.5"},
};

struct FomReference {
    const char* name_prefix;
    std::optional<double> value;
    std::optional<double> band_low, band_high;
    const char* text;
};

const FomReference kFomReferences[] = {
    {"ELF", 0.0064, std::nullopt, std::nullopt, "0.0064"},
    {"VLF", 0.048, std::nullopt, std::nullopt, "0.048"},
    {"PZT", std::nullopt, 1.0, 2.0, "~ 1"},
    {"LN", 0.55, std::nullopt, std::nullopt, "0.55"},
};

struct AtomicReference {
    const char* label;
    double lifetime_bound_ns;
    double dipole_bound_au;
};

const AtomicReference kAtomicReferences[] = {
    {"H 1S-2P", 0.01, 9.61}, {"Cs D1", 8.46, 6.46},   {"Cs D2", 6.38, 6.92},
    {"Rb87 D1", 6.29, 6.29}, {"Rb87 D2", 5.61, 6.47},
};

const AtomicReference* find_atomic_reference(const std::string& label) {
    for (const AtomicReference& ref : kAtomicReferences)
        if (label == ref.label)
            return &ref;
    return nullptr;
}

} // namespace

// ---------------------------------------------------------------------------
// Table 1: facility efficiency bounds
// ---------------------------------------------------------------------------

std::vector<FacilityBoundRow> compute_table1(const std::vector<EmitterRecord>& emitters) {
    std::vector<FacilityBoundRow> rows;
    for (const FacilityReference& ref : kFacilityReferences) {
        const EmitterRecord* record = find_builtin_emitter(emitters, ref.name_prefix);
        if (!record)
            continue;
        if (ref.alternate_delta_f && !record->delta_f_alt_hz)
            continue;
        const ReportRow eval = evaluate_emitter(
            *record, ref.alternate_delta_f ? DeltaFInterpretation::alternate
                                           : DeltaFInterpretation::primary);
        FacilityBoundRow row;
        row.facility = record->name;
        row.f_hz = eval.f_hz;
        row.delta_f_hz = eval.delta_f_hz;
        row.a_m = eval.a_m;
        row.ka = eval.chl.ka;
        row.q_chl = make_comparison(eval.chl.q_chl, ref.q_chl);
        row.efficiency_bound = make_comparison(eval.chl.efficiency_bound, ref.bound);
        row.reported_efficiency = ref.reported_efficiency;
        row.flags = eval.flags;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<FomRow> compute_table2(const std::vector<EmitterRecord>& emitters,
                                   DeltaFInterpretation interp) {
    std::vector<FomRow> rows;
    for (const FomReference& ref : kFomReferences) {
        const EmitterRecord* record = find_builtin_emitter(emitters, ref.name_prefix);
        if (!record)
            continue;
        const ReportRow eval = evaluate_emitter(*record, interp);
        FomRow row;
        row.name = record->name;
        row.fom_computed = eval.chl.fom;
        if (eval.fom_u && eval.fom_u->sigma > 0.0)
            row.fom_sigma = eval.fom_u->sigma;
        row.published = ref.value;
        row.published_low = ref.band_low;
        row.published_high = ref.band_high;
        row.published_text = ref.text;
        if (ref.value && *ref.value != 0.0)
            row.rel_dev = (row.fom_computed - *ref.value) / std::abs(*ref.value);
        row.flags = eval.flags;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<AtomicBoundRow> compute_table3(const std::vector<AtomicTransition>& transitions) {
    std::vector<AtomicBoundRow> rows;
    for (const AtomicTransition& t : transitions) {
        const AtomicReference* ref = find_atomic_reference(t.label);
        AtomicBoundRow row;
        row.label = t.label;
        row.element = t.element;
        row.n = t.n;
        row.l = t.l;
        row.j = t.j;
        row.wavelength_m = t.wavelength_m;
        row.chu_radius_au = t.chu_radius_au;
        row.chu_radius_published_au = t.chu_radius_published_au;
        row.lifetime_bound_s = make_comparison(
            lifetime_bound(t),
            ref ? std::optional<double>(ref->lifetime_bound_ns * 1e-9) : std::nullopt);
        row.reference_lifetime_s = t.reference_lifetime_s;
        row.dipole_bound_au = make_comparison(
            dipole_bound(t),
            ref ? std::optional<double>(ref->dipole_bound_au) : std::nullopt);
        row.reference_dipole_au = t.reference_dipole_au;
        rows.push_back(std::move(row));

        // An inconsistent published radius gets its own labeled row so the
        // discrepancy is visible rather than silently resolved.
        if (t.chu_radius_published_au &&
            std::abs(*t.chu_radius_published_au - t.chu_radius_au) >
                1e-6 * t.chu_radius_au) {
            AtomicTransition variant = t;
            variant.chu_radius_au = *t.chu_radius_published_au;
            AtomicBoundRow vrow;
            vrow.label = t.label + " [published radius]";
            vrow.element = t.element;
            vrow.n = t.n;
            vrow.l = t.l;
            vrow.j = t.j;
            vrow.wavelength_m = t.wavelength_m;
            vrow.chu_radius_au = variant.chu_radius_au;
            vrow.lifetime_bound_s = make_comparison(
                lifetime_bound(variant),
                ref ? std::optional<double>(ref->lifetime_bound_ns * 1e-9)
                    : std::nullopt);
            vrow.reference_lifetime_s = t.reference_lifetime_s;
            vrow.dipole_bound_au = make_comparison(
                dipole_bound(variant),
                ref ? std::optional<double>(ref->dipole_bound_au) : std::nullopt);
            vrow.reference_dipole_au = t.reference_dipole_au;
            vrow.flags.push_back(
                "published radius is inconsistent with the published bounds; "
                "the primary row uses the radius that reproduces them");
            rows.push_back(std::move(vrow));
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string opt_sci3(const std::optional<double>& v) {
    return v ? format_sci3(*v) : std::string("-");
}

std::string opt_full(const std::optional<double>& v) {
    return v ? format_full(*v) : std::string("");
}

std::string pct(const std::optional<double>& rel_dev) {
    if (!rel_dev)
        return "-";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%+.2f%%", *rel_dev * 100.0);
    return buf;
}

// Minimal fixed-width text table.
std::string layout(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size())
            width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size())
                out.append(width[i] - row[i].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out += ',';
        out += csv_escape(cells[i]);
    }
    out += '\n';
    return out;
}

} // namespace

std::string render_table1(const std::vector<FacilityBoundRow>& rows, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["table"] = 1;
        j["rows"] = ordered_json::array();
        for (const FacilityBoundRow& row : rows) {
            ordered_json r;
            r["facility"] = row.facility;
            r["f_hz"] = row.f_hz;
            r["delta_f_hz"] = row.delta_f_hz;
            r["a_m"] = row.a_m;
            r["ka"] = row.ka;
            r["q_chl"] = cell_json(row.q_chl);
            r["efficiency_bound"] = cell_json(row.efficiency_bound);
            r["reported_efficiency"] = row.reported_efficiency;
            r["flags"] = row.flags;
            j["rows"].push_back(std::move(r));
        }
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::string out = csv_line({"facility", "f_hz", "delta_f_hz", "a_m", "ka",
                                    "q_chl_computed", "q_chl_published",
                                    "q_chl_rel_dev", "efficiency_bound_computed",
                                    "efficiency_bound_published",
                                    "efficiency_bound_rel_dev",
                                    "reported_efficiency", "flags"});
        for (const FacilityBoundRow& row : rows)
            out += csv_line({row.facility, format_full(row.f_hz),
                             format_full(row.delta_f_hz), format_full(row.a_m),
                             format_full(row.ka), format_full(row.q_chl.computed),
                             opt_full(row.q_chl.published),
                             opt_full(row.q_chl.rel_dev),
                             format_full(row.efficiency_bound.computed),
                             opt_full(row.efficiency_bound.published),
                             opt_full(row.efficiency_bound.rel_dev),
                             row.reported_efficiency, join_flags(row.flags)});
        return out;
    }
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"facility", "f(Hz)", "df(Hz)", "a(m)", "Q_CHL", "ref",
                     "dev", "bound", "ref", "dev", "reported eta"});
    for (const FacilityBoundRow& row : rows)
        cells.push_back({row.facility, format_full(row.f_hz),
                         format_full(row.delta_f_hz), format_sci3(row.a_m),
                         format_sci3(row.q_chl.computed),
                         opt_sci3(row.q_chl.published), pct(row.q_chl.rel_dev),
                         format_sci3(row.efficiency_bound.computed),
                         opt_sci3(row.efficiency_bound.published),
                         pct(row.efficiency_bound.rel_dev),
                         row.reported_efficiency});
    std::string out = layout(cells);
    for (const FacilityBoundRow& row : rows)
        for (const std::string& flag : row.flags)
            out += "note [" + row.facility + "]: " + flag + "\n";
    return out;
}

std::string render_table2(const std::vector<FomRow>& rows, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["table"] = 2;
        j["rows"] = ordered_json::array();
        for (const FomRow& row : rows) {
            ordered_json r;
            r["name"] = row.name;
            r["fom_computed"] = row.fom_computed;
            r["fom_sigma"] = row.fom_sigma ? ordered_json(*row.fom_sigma)
                                           : ordered_json(nullptr);
            r["published"] = row.published ? ordered_json(*row.published)
                                           : ordered_json(nullptr);
            r["published_band"] =
                row.published_low
                    ? ordered_json::array({*row.published_low, *row.published_high})
                    : ordered_json(nullptr);
            r["published_text"] = row.published_text;
            r["rel_dev"] =
                row.rel_dev ? ordered_json(*row.rel_dev) : ordered_json(nullptr);
            r["flags"] = row.flags;
            j["rows"].push_back(std::move(r));
        }
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::string out =
            csv_line({"name", "fom_computed", "fom_sigma", "fom_published",
                      "fom_published_low", "fom_published_high", "fom_rel_dev",
                      "flags"});
        for (const FomRow& row : rows)
            out += csv_line({row.name, format_full(row.fom_computed),
                             opt_full(row.fom_sigma), opt_full(row.published),
                             opt_full(row.published_low),
                             opt_full(row.published_high), opt_full(row.rel_dev),
                             join_flags(row.flags)});
        return out;
    }
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"ESE", "FOM", "ref", "dev"});
    for (const FomRow& row : rows) {
        std::string fom = format_sci3(row.fom_computed);
        if (row.fom_sigma)
            fom += " +/- " + format_sci3(*row.fom_sigma);
        cells.push_back({row.name, fom, row.published_text, pct(row.rel_dev)});
    }
    std::string out = layout(cells);
    for (const FomRow& row : rows)
        for (const std::string& flag : row.flags)
            out += "note [" + row.name + "]: " + flag + "\n";
    return out;
}

std::string render_table3(const std::vector<AtomicBoundRow>& rows, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["table"] = 3;
        j["rows"] = ordered_json::array();
        for (const AtomicBoundRow& row : rows) {
            ordered_json r;
            r["label"] = row.label;
            r["element"] = row.element;
            r["n"] = row.n;
            r["l"] = row.l;
            r["j"] = row.j;
            r["wavelength_m"] = row.wavelength_m;
            r["chu_radius_au"] = row.chu_radius_au;
            r["chu_radius_published_au"] =
                row.chu_radius_published_au
                    ? ordered_json(*row.chu_radius_published_au)
                    : ordered_json(nullptr);
            r["lifetime_bound_s"] = cell_json(row.lifetime_bound_s);
            r["reference_lifetime_s"] = row.reference_lifetime_s;
            r["dipole_bound_au"] = cell_json(row.dipole_bound_au);
            r["reference_dipole_au"] = row.reference_dipole_au;
            r["flags"] = row.flags;
            j["rows"].push_back(std::move(r));
        }
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::string out = csv_line(
            {"label", "element", "n", "l", "j", "wavelength_m", "chu_radius_au",
             "chu_radius_published_au", "lifetime_bound_s_computed",
             "lifetime_bound_s_published", "lifetime_rel_dev",
             "reference_lifetime_s", "dipole_bound_au_computed",
             "dipole_bound_au_published", "dipole_rel_dev", "reference_dipole_au",
             "flags"});
        for (const AtomicBoundRow& row : rows)
            out += csv_line(
                {row.label, row.element, std::to_string(row.n),
                 std::to_string(row.l), format_full(row.j),
                 format_full(row.wavelength_m), format_full(row.chu_radius_au),
                 opt_full(row.chu_radius_published_au),
                 format_full(row.lifetime_bound_s.computed),
                 opt_full(row.lifetime_bound_s.published),
                 opt_full(row.lifetime_bound_s.rel_dev),
                 format_full(row.reference_lifetime_s),
                 format_full(row.dipole_bound_au.computed),
                 opt_full(row.dipole_bound_au.published),
                 opt_full(row.dipole_bound_au.rel_dev),
                 format_full(row.reference_dipole_au), join_flags(row.flags)});
        return out;
    }
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"transition", "a(a0)", "tau_bound(ns)", "ref", "dev",
                     "tau_actual(ns)", "d_bound(a0 e)", "ref", "dev",
                     "d_actual(a0 e)"});
    for (const AtomicBoundRow& row : rows) {
        auto ns = [](double s) { return format_sci3(s * 1e9); };
        cells.push_back(
            {row.label, format_sci3(row.chu_radius_au),
             ns(row.lifetime_bound_s.computed),
             row.lifetime_bound_s.published ? ns(*row.lifetime_bound_s.published)
                                            : std::string("-"),
             pct(row.lifetime_bound_s.rel_dev), ns(row.reference_lifetime_s),
             format_sci3(row.dipole_bound_au.computed),
             opt_sci3(row.dipole_bound_au.published),
             pct(row.dipole_bound_au.rel_dev),
             format_sci3(row.reference_dipole_au)});
    }
    std::string out = layout(cells);
    for (const AtomicBoundRow& row : rows)
        for (const std::string& flag : row.flags)
            out += "note [" + row.label + "]: " + flag + "\n";
    return out;
}

std::string render_report_row(const ReportRow& row, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["label"] = row.label;
        j["f_hz"] = row.f_hz;
        j["delta_f_hz"] = row.delta_f_hz;
        j["a_m"] = row.a_m;
        j["ka"] = row.chl.ka;
        j["electrically_small"] = row.chl.ka < 1.0;
        j["q_chl"] = row.chl.q_chl;
        j["q_chl_deep_subwavelength"] = row.chl.q_chl_ds;
        j["q_bw"] = row.chl.q_bw;
        j["efficiency_bound"] = row.chl.efficiency_bound;
        j["efficiency_bound_clipped"] = row.chl.efficiency_bound_clipped;
        j["power_density_limit_w_per_w_m3"] = row.chl.power_density_limit;
        if (row.eta) {
            j["eta"] = row.eta->value;
            j["eta_sigma"] = row.eta->sigma;
            j["eta_source"] = row.eta_source;
        } else {
            j["eta"] = nullptr;
        }
        j["fom"] = row.chl.fom;
        if (row.fom_u)
            j["fom_sigma"] = row.fom_u->sigma;
        if (row.budget) {
            ordered_json b;
            b["p_rad_iso_w"] = row.budget->p_rad_iso_w.value;
            b["p_rad_iso_sigma_w"] = row.budget->p_rad_iso_w.sigma;
            b["p_rad_w"] = row.budget->p_rad_w.value;
            b["p_rad_sigma_w"] = row.budget->p_rad_w.sigma;
            b["p_in_w"] = row.budget->p_in_w;
            j["radiation_budget"] = std::move(b);
        }
        if (row.field) {
            ordered_json f;
            f["b_rms_t"] = row.field->b_rms_t.value;
            f["b_sigma_t"] = row.field->b_rms_t.sigma;
            f["distance_m"] = row.field->distance_m;
            f["far_field_onset_m"] = row.field->far_field_onset_m;
            f["gain"] = row.field->gain;
            j["field_measurement"] = std::move(f);
        }
        j["flags"] = row.flags;
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::string out = csv_line(
            {"label", "f_hz", "delta_f_hz", "a_m", "ka", "q_chl", "q_bw",
             "efficiency_bound", "power_density_limit_w_per_w_m3", "eta",
             "eta_sigma", "eta_source", "fom", "fom_sigma", "p_rad_iso_w",
             "p_rad_iso_sigma_w", "p_rad_w", "p_in_w", "b_rms_t", "b_sigma_t",
             "distance_m", "far_field_onset_m", "gain", "flags"});
        out += csv_line(
            {row.label, format_full(row.f_hz), format_full(row.delta_f_hz),
             format_full(row.a_m), format_full(row.chl.ka),
             format_full(row.chl.q_chl), format_full(row.chl.q_bw),
             format_full(row.chl.efficiency_bound),
             format_full(row.chl.power_density_limit),
             row.eta ? format_full(row.eta->value) : "",
             row.eta ? format_full(row.eta->sigma) : "", row.eta_source,
             format_full(row.chl.fom),
             row.fom_u ? format_full(row.fom_u->sigma) : "",
             row.budget ? format_full(row.budget->p_rad_iso_w.value) : "",
             row.budget ? format_full(row.budget->p_rad_iso_w.sigma) : "",
             row.budget ? format_full(row.budget->p_rad_w.value) : "",
             row.budget ? format_full(row.budget->p_in_w) : "",
             row.field ? format_full(row.field->b_rms_t.value) : "",
             row.field ? format_full(row.field->b_rms_t.sigma) : "",
             row.field ? format_full(row.field->distance_m) : "",
             row.field ? format_full(row.field->far_field_onset_m) : "",
             row.field ? format_full(row.field->gain) : "",
             join_flags(row.flags)});
        return out;
    }
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"emitter", row.label});
    cells.push_back({"f", format_sci3(row.f_hz) + " Hz"});
    cells.push_back({"delta_f", format_sci3(row.delta_f_hz) + " Hz"});
    cells.push_back({"a", format_sci3(row.a_m) + " m"});
    cells.push_back({"ka", format_sci3(row.chl.ka)});
    cells.push_back({"Q_CHL", format_sci3(row.chl.q_chl)});
    cells.push_back({"f/delta_f", format_sci3(row.chl.q_bw)});
    cells.push_back({"efficiency bound", format_sci3(row.chl.efficiency_bound)});
    cells.push_back({"power density limit",
                     format_sci3(row.chl.power_density_limit) + " W/(W m^3)"});
    if (row.field) {
        std::string field = format_sci3(row.field->b_rms_t.value);
        if (row.field->b_rms_t.sigma > 0.0)
            field += " +/- " + format_sci3(row.field->b_rms_t.sigma);
        field += " T at " + format_sci3(row.field->distance_m) + " m";
        cells.push_back({"measured field", field});
        if (row.field->far_field_onset_m > 0.0)
            cells.push_back({"far-field onset",
                             format_sci3(row.field->far_field_onset_m) + " m"});
    }
    if (row.budget) {
        cells.push_back({"P_rad isotropic",
                         format_sci3(row.budget->p_rad_iso_w.value) + " +/- " +
                             format_sci3(row.budget->p_rad_iso_w.sigma) + " W"});
        cells.push_back(
            {"P_rad (gain " + format_sci3(row.field->gain) + ")",
             format_sci3(row.budget->p_rad_w.value) + " W"});
        cells.push_back({"P_in", format_sci3(row.budget->p_in_w) + " W"});
    }
    if (row.eta) {
        std::string eta = format_sci3(row.eta->value);
        if (row.eta->sigma > 0.0)
            eta += " +/- " + format_sci3(row.eta->sigma);
        cells.push_back({"eta (" + row.eta_source + ")", eta});
    }
    std::string fom = format_sci3(row.chl.fom);
    if (row.fom_u && row.fom_u->sigma > 0.0)
        fom += " +/- " + format_sci3(row.fom_u->sigma);
    cells.push_back({"FOM", fom});
    std::string out = layout(cells);
    for (const std::string& flag : row.flags)
        out += "note: " + flag + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Atomic state reports
// ---------------------------------------------------------------------------

AtomicStateReport evaluate_atomic_state(const QuantumState& state,
                                        const AtomParameterTable& table,
                                        const AtomicStateOptions& options) {
    state.validate();
    AtomicStateReport report;
    report.state = state;

    // Wavelength: explicit override, else the builtin transition catalog.
    const AtomicTransition* match = nullptr;
    static const std::vector<AtomicTransition> transitions = builtin_transitions();
    for (const AtomicTransition& t : transitions) {
        if (t.element != state.element)
            continue;
        if (state.element == "H") {
            match = &t; // single hydrogen line; any (n,l) maps to it
            break;
        }
        if (t.n == state.n && t.l == state.l && std::abs(t.j - state.j) < 1e-9) {
            match = &t;
            break;
        }
    }
    if (options.wavelength_m) {
        report.wavelength_m = *options.wavelength_m;
    } else if (match) {
        report.wavelength_m = match->wavelength_m;
        if (state.element == "H" && !(state.n == match->n && state.l == match->l))
            report.flags.push_back("transition frequency taken from the " +
                                   match->label + " line");
    } else {
        throw DataError("no transition frequency known for " + state.element +
                        " n=" + std::to_string(state.n) +
                        " l=" + std::to_string(state.l) +
                        "; pass an explicit wavelength");
    }
    report.frequency_hz = wavelength_to_frequency(report.wavelength_m);

    if (options.given_radius_au) {
        if (!(*options.given_radius_au > 0.0))
            throw InputError("atomic state: given radius must be > 0");
        report.radius_au = *options.given_radius_au;
        report.radius_source = "given";
    } else if (state.element == "H") {
        report.radius_au = hydrogen_rms_radius(state.n, state.l);
        report.radius_source = "closed form";
    } else {
        report.radius_au = state_rms_radius(state, table, options.solver);
        report.radius_source = "radial solve";
    }

    AtomicTransition t;
    t.label = state.element;
    t.element = state.element;
    t.n = state.n;
    t.l = state.l;
    t.j = state.j;
    t.wavelength_m = report.wavelength_m;
    t.chu_radius_au = report.radius_au;
    report.bounds = atomic_bound_report(t, options.a_mode);
    report.einstein_a_at_bound =
        einstein_a(report.frequency_hz, report.bounds.dipole_bound_au, options.a_mode);

    if (match) {
        report.reference_lifetime_s = match->reference_lifetime_s;
        report.reference_dipole_au = match->reference_dipole_au;
        if (report.bounds.lifetime_bound_s > match->reference_lifetime_s)
            report.flags.push_back("lifetime bound exceeds the measured lifetime");
    }
    return report;
}

std::string render_atomic_state(const AtomicStateReport& report, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["element"] = report.state.element;
        j["n"] = report.state.n;
        j["l"] = report.state.l;
        j["j"] = report.state.j;
        j["chu_radius_au"] = report.radius_au;
        j["radius_source"] = report.radius_source;
        j["wavelength_m"] = report.wavelength_m;
        j["frequency_hz"] = report.frequency_hz;
        j["ka"] = report.bounds.ka;
        j["q_chl"] = report.bounds.q_chl;
        j["lifetime_bound_s"] = report.bounds.lifetime_bound_s;
        j["dipole_bound_au"] = report.bounds.dipole_bound_au;
        j["a_mode"] = std::string(einstein_a_mode_name(report.bounds.a_coefficient_mode));
        j["einstein_a_at_bound_per_s"] = report.einstein_a_at_bound;
        j["reference_lifetime_s"] = report.reference_lifetime_s
                                        ? ordered_json(*report.reference_lifetime_s)
                                        : ordered_json(nullptr);
        j["reference_dipole_au"] = report.reference_dipole_au
                                       ? ordered_json(*report.reference_dipole_au)
                                       : ordered_json(nullptr);
        j["flags"] = report.flags;
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::string out = csv_line(
            {"element", "n", "l", "j", "chu_radius_au", "radius_source",
             "wavelength_m", "frequency_hz", "ka", "q_chl", "lifetime_bound_s",
             "dipole_bound_au", "a_mode", "einstein_a_at_bound_per_s",
             "reference_lifetime_s", "reference_dipole_au", "flags"});
        out += csv_line(
            {report.state.element, std::to_string(report.state.n),
             std::to_string(report.state.l), format_full(report.state.j),
             format_full(report.radius_au), report.radius_source,
             format_full(report.wavelength_m), format_full(report.frequency_hz),
             format_full(report.bounds.ka), format_full(report.bounds.q_chl),
             format_full(report.bounds.lifetime_bound_s),
             format_full(report.bounds.dipole_bound_au),
             std::string(einstein_a_mode_name(report.bounds.a_coefficient_mode)),
             format_full(report.einstein_a_at_bound),
             report.reference_lifetime_s ? format_full(*report.reference_lifetime_s)
                                         : "",
             report.reference_dipole_au ? format_full(*report.reference_dipole_au)
                                        : "",
             join_flags(report.flags)});
        return out;
    }
    std::vector<std::vector<std::string>> cells;
    std::string j_str = format_full(report.state.j);
    cells.push_back({"state", report.state.element + " n=" +
                                  std::to_string(report.state.n) + " l=" +
                                  std::to_string(report.state.l) + " j=" + j_str});
    cells.push_back({"Chu radius", format_sci3(report.radius_au) + " a0 (" +
                                       report.radius_source + ")"});
    cells.push_back({"wavelength", format_sci3(report.wavelength_m) + " m"});
    cells.push_back({"frequency", format_sci3(report.frequency_hz) + " Hz"});
    cells.push_back({"ka", format_sci3(report.bounds.ka)});
    cells.push_back({"Q_CHL", format_sci3(report.bounds.q_chl)});
    cells.push_back({"lifetime bound",
                     format_sci3(report.bounds.lifetime_bound_s * 1e9) + " ns"});
    cells.push_back(
        {"dipole bound", format_sci3(report.bounds.dipole_bound_au) + " a0 e"});
    cells.push_back({"A at bound (" +
                         std::string(einstein_a_mode_name(
                             report.bounds.a_coefficient_mode)) +
                         ")",
                     format_sci3(report.einstein_a_at_bound) + " 1/s"});
    if (report.reference_lifetime_s)
        cells.push_back({"measured lifetime",
                         format_sci3(*report.reference_lifetime_s * 1e9) + " ns"});
    if (report.reference_dipole_au)
        cells.push_back({"measured dipole",
                         format_sci3(*report.reference_dipole_au) + " a0 e"});
    std::string out = layout(cells);
    for (const std::string& flag : report.flags)
        out += "note: " + flag + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

SweepParam parse_sweep_param(std::string_view tag) {
    if (tag == "frequency")
        return SweepParam::frequency;
    if (tag == "radius")
        return SweepParam::radius;
    if (tag == "bandwidth")
        return SweepParam::bandwidth;
    throw InputError("unknown sweep parameter: '" + std::string(tag) + "'");
}

std::string sweep_csv(const SweepOptions& options) {
    if (!(options.min > 0.0) || !(options.max > options.min))
        throw InputError("sweep: need 0 < min < max");
    if (options.steps < 2)
        throw InputError("sweep: need at least 2 steps");

    const char* column = nullptr;
    switch (options.param) {
    case SweepParam::frequency:
        column = "frequency_hz";
        if (!(options.delta_f_hz > 0.0) || !(options.a_m > 0.0))
            throw InputError("sweep over frequency: fixed delta_f_hz and "
                             "radius_m are required");
        if (!(options.min > options.delta_f_hz))
            throw InputError("sweep over frequency: range must stay above the "
                             "fixed delta_f_hz (narrowband assumption)");
        break;
    case SweepParam::radius:
        column = "radius_m";
        if (!(options.f_hz > 0.0) || !(options.delta_f_hz > 0.0))
            throw InputError("sweep over radius: fixed frequency_hz and "
                             "delta_f_hz are required");
        break;
    case SweepParam::bandwidth:
        column = "delta_f_hz";
        if (!(options.f_hz > 0.0) || !(options.a_m > 0.0))
            throw InputError("sweep over bandwidth: fixed frequency_hz and "
                             "radius_m are required");
        if (!(options.max < options.f_hz))
            throw InputError("sweep over bandwidth: range must stay below the "
                             "fixed frequency_hz (narrowband assumption)");
        break;
    }

    std::string out = csv_line(
        {column, "efficiency_bound", "power_density_limit_w_per_w_m3"});
    for (int i = 0; i < options.steps; ++i) {
        const double t = static_cast<double>(i) / (options.steps - 1);
        const double value =
            options.log_scale
                ? options.min * std::pow(options.max / options.min, t)
                : options.min + (options.max - options.min) * t;
        double f = options.f_hz;
        double df = options.delta_f_hz;
        double a = options.a_m;
        switch (options.param) {
        case SweepParam::frequency:
            f = value;
            break;
        case SweepParam::radius:
            a = value;
            break;
        case SweepParam::bandwidth:
            df = value;
            break;
        }
        const ResonanceSpec res(f, df);
        out += csv_line({format_full(value),
                         format_full(efficiency_bound(res, a)),
                         format_full(power_density_limit(res))});
    }
    return out;
}

} // namespace ese
