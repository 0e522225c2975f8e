#include <doctest.h>

#include <cmath>

#include "ese/catalog.hpp"

using namespace ese;

namespace {

bool same_optional(const std::optional<double>& a, const std::optional<double>& b) {
    if (a.has_value() != b.has_value())
        return false;
    return !a || *a == *b;
}

bool same_record(const EmitterRecord& a, const EmitterRecord& b) {
    if (a.name != b.name || a.geometry.kind != b.geometry.kind)
        return false;
    if (a.geometry.length_m != b.geometry.length_m ||
        a.geometry.diameter_m != b.geometry.diameter_m ||
        a.geometry.height_m != b.geometry.height_m ||
        a.geometry.radius_m != b.geometry.radius_m)
        return false;
    if (a.frequency_hz != b.frequency_hz || a.delta_f_hz != b.delta_f_hz)
        return false;
    if (!same_optional(a.delta_f_alt_hz, b.delta_f_alt_hz) ||
        !same_optional(a.p_in_w, b.p_in_w) || !same_optional(a.p_rad_w, b.p_rad_w) ||
        !same_optional(a.efficiency_alt, b.efficiency_alt))
        return false;
    if (a.efficiency.has_value() != b.efficiency.has_value())
        return false;
    if (a.efficiency && (a.efficiency->value != b.efficiency->value ||
                         a.efficiency->sigma != b.efficiency->sigma))
        return false;
    if (a.field.has_value() != b.field.has_value())
        return false;
    if (a.field) {
        if (a.field->b_rms_t.value != b.field->b_rms_t.value ||
            a.field->b_rms_t.sigma != b.field->b_rms_t.sigma ||
            a.field->distance_m != b.field->distance_m ||
            a.field->far_field_onset_m != b.field->far_field_onset_m ||
            a.field->gain != b.field->gain)
            return false;
    }
    return a.notes == b.notes;
}

} // namespace

TEST_SUITE("catalog") {

    TEST_CASE("builtin emitters digit-for-digit") {
        const auto emitters = builtin_emitters();
        REQUIRE(emitters.size() == 4);

        const EmitterRecord* elf = find_builtin_emitter(emitters, "ELF");
        REQUIRE(elf);
        CHECK(elf->geometry.kind == GeometryKind::crossed_dipoles);
        CHECK(elf->geometry.length_m == doctest::Approx(22530.816).epsilon(1e-12));
        CHECK(elf->frequency_hz == 76.0);
        CHECK(elf->delta_f_hz == 4.0);
        CHECK(*elf->delta_f_alt_hz == 8.0);
        CHECK(*elf->p_in_w == 1e6);
        CHECK(*elf->p_rad_w == 2.0);

        const EmitterRecord* vlf = find_builtin_emitter(emitters, "VLF");
        REQUIRE(vlf);
        CHECK(enclosing_radius(vlf->geometry) == 935.0);
        CHECK(vlf->frequency_hz == 24000.0);
        CHECK(vlf->delta_f_hz == 240.0);
        CHECK(vlf->efficiency->value == 0.5);

        const EmitterRecord* ln = find_builtin_emitter(emitters, "LN");
        REQUIRE(ln);
        CHECK(ln->geometry.length_m == 0.094);
        CHECK(ln->geometry.diameter_m == 0.016);
        CHECK(ln->frequency_hz == 35568.0);
        CHECK(ln->delta_f_hz == 0.084);
        CHECK(ln->efficiency->value == 1e-8);
        CHECK(*ln->efficiency_alt == 2e-7);

        const EmitterRecord* pzt = find_builtin_emitter(emitters, "PZT");
        REQUIRE(pzt);
        CHECK(pzt->frequency_hz == 33233.0); // midpoint of 33218 and 33248
        CHECK(pzt->delta_f_hz == 30.0);      // tone spacing
        CHECK(*pzt->p_in_w == 1.2);
        CHECK(pzt->field->b_rms_t.value == 50e-15);
        CHECK(pzt->field->b_rms_t.sigma == 10e-15);
        CHECK(pzt->field->distance_m == 4.5);
        CHECK(pzt->field->gain == 1.5);
        CHECK(pzt->field->far_field_onset_m == 1.3);
    }

    TEST_CASE("builtin records pass the shared validation") {
        for (const EmitterRecord& r : builtin_emitters())
            CHECK_NOTHROW(validate_emitter(r));
    }

    TEST_CASE("builtin transitions") {
        const auto transitions = builtin_transitions();
        REQUIRE(transitions.size() == 5);

        CHECK(transitions[0].label == "H 1S-2P");
        CHECK(transitions[0].chu_radius_au ==
              doctest::Approx(std::sqrt(30.0)).epsilon(1e-12));
        CHECK(*transitions[0].chu_radius_published_au == 1.73);
        CHECK(transitions[0].reference_lifetime_s == 1.6e-9);
        CHECK(transitions[0].reference_dipole_au == 0.745);

        CHECK(transitions[1].label == "Cs D1");
        CHECK(transitions[1].reference_lifetime_s == 34.79e-9);
        CHECK(transitions[1].chu_radius_au == 8.18);
        CHECK(transitions[1].wavelength_m == 894.593e-9);

        CHECK(transitions[2].label == "Cs D2");
        CHECK(transitions[2].chu_radius_au == 8.42);

        CHECK(transitions[3].label == "Rb87 D1");
        CHECK(transitions[3].chu_radius_au == 7.72);
        CHECK(transitions[3].reference_dipole_au == 2.99);

        CHECK(transitions[4].label == "Rb87 D2");
        CHECK(transitions[4].reference_dipole_au == 4.23);
        CHECK(transitions[4].reference_lifetime_s == 26.24e-9);
    }

    TEST_CASE("serialize/parse round trip") {
        for (const EmitterRecord& r : builtin_emitters()) {
            const EmitterRecord back = parse_emitter_text(serialize_emitter(r));
            CHECK(same_record(r, back));
        }
    }

    TEST_CASE("well-formed file mirroring the LN rod") {
        const std::string text = "# lithium niobate resonator\n"
                                 "name = LN rod\n"
                                 "geometry = rod\n"
                                 "length_m = 0.094\n"
                                 "diameter_m = 0.016\n"
                                 "frequency_hz = 35568\n"
                                 "delta_f_hz = 0.084\n"
                                 "efficiency = 1e-8\n"
                                 "efficiency_alt = 2e-7\n";
        const EmitterRecord r = parse_emitter_text(text);
        CHECK(r.name == "LN rod");
        CHECK(r.geometry.length_m == 0.094);
        CHECK(r.efficiency->value == 1e-8);
        CHECK(*r.efficiency_alt == 2e-7);
    }

    TEST_CASE("validation errors name the rule") {
        // No efficiency source at all.
        const std::string no_eta = "name = x\n"
                                   "geometry = sphere\n"
                                   "radius_m = 1\n"
                                   "frequency_hz = 100\n"
                                   "delta_f_hz = 1\n";
        CHECK_THROWS_WITH_AS(parse_emitter_text(no_eta),
                             doctest::Contains("need 'efficiency'"),
                             ValidationError);

        const std::string negative_bw = "name = x\n"
                                        "geometry = sphere\n"
                                        "radius_m = 1\n"
                                        "frequency_hz = 100\n"
                                        "delta_f_hz = -1\n"
                                        "efficiency = 0.5\n";
        CHECK_THROWS_WITH_AS(parse_emitter_text(negative_bw),
                             doctest::Contains("delta_f_hz"), ValidationError);

        const std::string wide_bw = "name = x\n"
                                    "geometry = sphere\n"
                                    "radius_m = 1\n"
                                    "frequency_hz = 100\n"
                                    "delta_f_hz = 100\n"
                                    "efficiency = 0.5\n";
        CHECK_THROWS_AS(parse_emitter_text(wide_bw), ValidationError);

        const std::string missing_dim = "name = x\n"
                                        "geometry = rod\n"
                                        "length_m = 1\n"
                                        "frequency_hz = 100\n"
                                        "delta_f_hz = 1\n"
                                        "efficiency = 0.5\n";
        CHECK_THROWS_WITH_AS(parse_emitter_text(missing_dim),
                             doctest::Contains("diameter_m"), ValidationError);

        const std::string field_no_distance = "name = x\n"
                                              "geometry = sphere\n"
                                              "radius_m = 1\n"
                                              "frequency_hz = 100\n"
                                              "delta_f_hz = 1\n"
                                              "p_in_w = 1\n"
                                              "b_rms_t = 1e-15\n";
        CHECK_THROWS_WITH_AS(parse_emitter_text(field_no_distance),
                             doctest::Contains("distance_m"), ValidationError);

        // Non-finite numbers are rejected even where a plain > 0 test would
        // let infinities through.
        const std::string infinite = "name = x\n"
                                     "geometry = sphere\n"
                                     "radius_m = 1\n"
                                     "frequency_hz = inf\n"
                                     "delta_f_hz = 1\n"
                                     "efficiency = 0.5\n";
        CHECK_THROWS_WITH_AS(parse_emitter_text(infinite),
                             doctest::Contains("finite"), ValidationError);
        const std::string not_a_number = "name = x\n"
                                         "geometry = sphere\n"
                                         "radius_m = 1\n"
                                         "frequency_hz = 100\n"
                                         "delta_f_hz = 1\n"
                                         "efficiency = nan\n";
        CHECK_THROWS_AS(parse_emitter_text(not_a_number), ValidationError);
    }

    TEST_CASE("parse errors") {
        CHECK_THROWS_AS(parse_emitter_text("name\n"), ParseError);
        CHECK_THROWS_AS(parse_emitter_text("name = x\nname = y\n"), ParseError);
        CHECK_THROWS_WITH_AS(parse_emitter_text("name = x\n"
                                                "geometry = sphere\n"
                                                "radius_m = big\n"),
                             doctest::Contains("radius_m"), ParseError);
        CHECK_THROWS_WITH_AS(parse_emitter_text("name = x\n"
                                                "geometry = sphere\n"
                                                "radius_m = 1\n"
                                                "frequency_hz = 1\n"
                                                "delta_f_hz = 0.1\n"
                                                "efficiency = 0.5\n"
                                                "mystery_field = 3\n"),
                             doctest::Contains("mystery_field"), ParseError);
        CHECK_THROWS_AS(load_emitter_file("/nonexistent/emitter.txt"), ParseError);
        CHECK_THROWS_AS(parse_emitter_text("name = x\ngeometry = pyramid\n"),
                        InputError);
    }

    TEST_CASE("gain defaults to the small-dipole value") {
        const std::string text = "name = x\n"
                                 "geometry = sphere\n"
                                 "radius_m = 1\n"
                                 "frequency_hz = 100\n"
                                 "delta_f_hz = 1\n"
                                 "p_in_w = 1\n"
                                 "b_rms_t = 1e-15\n"
                                 "distance_m = 2\n";
        CHECK(parse_emitter_text(text).field->gain == 1.5);
    }
}
