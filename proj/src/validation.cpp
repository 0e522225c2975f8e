#include "ese/validation.hpp"

#include <cmath>
#include <random>

#include <json.hpp>

#include "ese/constants.hpp"
#include "ese/field_budget.hpp"

namespace ese {

using ordered_json = nlohmann::ordered_json;

namespace {

class CheckList {
  public:
    explicit CheckList(std::vector<ValidationCheck>& checks) : checks_(checks) {}

    void point(const std::string& id, const std::string& description,
               double computed, double expected, double tolerance_rel,
               bool expected_deviation = false, const std::string& note = "") {
        ValidationCheck c;
        c.id = id;
        c.description = description;
        c.computed = computed;
        c.expected = expected;
        c.has_expected = true;
        c.tolerance_rel = tolerance_rel;
        if (expected != 0.0) {
            c.rel_dev = (computed - expected) / std::abs(expected);
            c.pass = std::abs(c.rel_dev) <= tolerance_rel;
        } else {
            c.rel_dev = computed;
            c.pass = std::abs(computed) <= tolerance_rel;
        }
        c.expected_deviation = expected_deviation;
        c.note = note;
        checks_.push_back(std::move(c));
    }

    void exact(const std::string& id, const std::string& description,
               double computed, double expected, const std::string& note = "") {
        ValidationCheck c;
        c.id = id;
        c.description = description;
        c.computed = computed;
        c.expected = expected;
        c.has_expected = true;
        c.tolerance_rel = 0.0;
        c.rel_dev = expected != 0.0 ? (computed - expected) / std::abs(expected)
                                    : computed;
        c.pass = computed == expected;
        c.note = note;
        checks_.push_back(std::move(c));
    }

    void band(const std::string& id, const std::string& description,
              double computed, double low, double high,
              const std::string& note = "") {
        ValidationCheck c;
        c.id = id;
        c.description = description;
        c.computed = computed;
        c.band_low = low;
        c.band_high = high;
        c.has_band = true;
        c.pass = computed >= low && computed <= high;
        c.note = note;
        checks_.push_back(std::move(c));
    }

    void truth(const std::string& id, const std::string& description, bool pass,
               const std::string& note = "", bool expected_deviation = false) {
        ValidationCheck c;
        c.id = id;
        c.description = description;
        c.computed = pass ? 1.0 : 0.0;
        c.expected = 1.0;
        c.has_expected = true;
        c.pass = pass;
        c.expected_deviation = expected_deviation;
        c.note = note;
        checks_.push_back(std::move(c));
    }

  private:
    std::vector<ValidationCheck>& checks_;
};

struct PerturbedCatalog {
    std::vector<EmitterRecord> emitters;
    std::vector<AtomicTransition> transitions;
};

PerturbedCatalog make_catalog(double frequency_perturbation_rel) {
    PerturbedCatalog catalog;
    catalog.emitters = builtin_emitters();
    catalog.transitions = builtin_transitions();
    if (frequency_perturbation_rel != 0.0) {
        const double scale = 1.0 + frequency_perturbation_rel;
        for (EmitterRecord& r : catalog.emitters)
            r.frequency_hz *= scale;
        for (AtomicTransition& t : catalog.transitions)
            t.wavelength_m /= scale;
    }
    return catalog;
}

const EmitterRecord& need(const std::vector<EmitterRecord>& emitters,
                          const char* prefix) {
    const EmitterRecord* r = find_builtin_emitter(emitters, prefix);
    if (!r)
        throw DataError(std::string("builtin emitter missing: ") + prefix);
    return *r;
}

const AtomicTransition& need_transition(const std::vector<AtomicTransition>& list,
                                        const char* label) {
    for (const AtomicTransition& t : list)
        if (t.label == label)
            return t;
    throw DataError(std::string("builtin transition missing: ") + label);
}

} // namespace

ValidationSummary run_validation(const ValidationOptions& options) {
    ValidationSummary summary;
    CheckList add(summary.checks);
    const PerturbedCatalog catalog = make_catalog(options.frequency_perturbation_rel);

    // --- Facility bounds ---------------------------------------------------
    {
        const EmitterRecord& elf = need(catalog.emitters, "ELF");
        const ReportRow primary = evaluate_emitter(elf, DeltaFInterpretation::primary);
        const ReportRow alt = evaluate_emitter(elf, DeltaFInterpretation::alternate);
        add.point("table1.q_chl.elf", "ELF facility Q_CHL", primary.chl.q_chl,
                  6.1e4, 0.02);
        add.point("table1.bound.elf.alt",
                  "ELF efficiency bound, delta_f = 8 Hz (full tone span)",
                  alt.chl.efficiency_bound, 1.5e-4, 0.05);
        add.point("table1.bound.elf.primary",
                  "ELF efficiency bound, delta_f = 4 Hz (half tone span)",
                  primary.chl.efficiency_bound, 3.1e-4, 0.05, true,
                  "reference table prints delta_f = 4 Hz next to the bound "
                  "that needs 8 Hz; both interpretations are kept");
        const EmitterRecord& vlf = need(catalog.emitters, "VLF");
        const ReportRow vlf_row = evaluate_emitter(vlf);
        add.point("table1.q_chl.vlf", "VLF facility Q_CHL", vlf_row.chl.q_chl,
                  11.7, 0.01);
        add.exact("table1.bound.vlf", "VLF efficiency bound clips at 1",
                  vlf_row.chl.efficiency_bound, 1.0);
    }

    // --- Mechanical resonator bounds ----------------------------------------
    {
        const ReportRow ln = evaluate_emitter(need(catalog.emitters, "LN"));
        add.point("device.bound.ln",
                  "LN rod efficiency bound (a = L/2 convention)",
                  ln.chl.efficiency_bound, 1.82e-8, 0.02);
        const ReportRow pzt = evaluate_emitter(need(catalog.emitters, "PZT"));
        add.point("device.bound.pzt",
                  "PZT disk efficiency bound (half-diagonal convention)",
                  pzt.chl.efficiency_bound, 2.4e-11, 0.05);
    }

    // --- Figures of merit ----------------------------------------------------
    {
        const auto fom_rows = compute_table2(catalog.emitters);
        for (const FomRow& row : fom_rows) {
            if (row.published) {
                add.point("table2.fom." + row.name,
                          "figure of merit, " + row.name, row.fom_computed,
                          *row.published, 0.05);
            } else {
                add.band("table2.fom." + row.name,
                         "figure of merit band, " + row.name, row.fom_computed,
                         *row.published_low, *row.published_high,
                         "reference prints '~ 1'");
            }
        }
        const ReportRow pzt = evaluate_emitter(need(catalog.emitters, "PZT"));
        bool flagged = false;
        for (const std::string& f : pzt.flags)
            if (f.rfind("efficiency exceeds CHL efficiency bound", 0) == 0)
                flagged = true;
        add.truth("table2.fom.pzt_flagged",
                  "PZT inferred efficiency is flagged as exceeding the bound",
                  flagged, "excess is within the measurement uncertainty");
    }

    // --- Field-to-power pipeline ---------------------------------------------
    {
        const EmitterRecord& pzt = need(catalog.emitters, "PZT");
        const RadiationBudget budget = radiation_budget(*pzt.field, *pzt.p_in_w);
        add.point("field.p_iso", "isotropic radiated power from 50 fT at 4.5 m",
                  budget.p_rad_iso_w.value, 75.9e-12, 0.005, true,
                  "reference prints 78.9 pW; 50 fT at 4.5 m with CODATA "
                  "constants gives 75.9 pW (4% below)");
        add.point("field.p_iso_sigma", "propagated power uncertainty",
                  budget.p_rad_iso_w.sigma, 30.4e-12, 0.005);
        add.band("field.p_iso_reference_band",
                 "computed power inside the published 78.9 +/- 30.4 pW band",
                 budget.p_rad_iso_w.value, (78.9 - 30.4) * 1e-12,
                 (78.9 + 30.4) * 1e-12);
        add.point("field.eta", "inferred radiation efficiency",
                  budget.eta.value, 4.4e-11, 0.10);
        add.point("field.eta_sigma", "propagated efficiency uncertainty",
                  budget.eta.sigma, 1.7e-11, 0.10);
    }

    // --- VSWR bandwidth --------------------------------------------------------
    add.point("vswr.ln", "LN natural bandwidth at VSWR = 2",
              vswr_bandwidth(35568.0, 303000.0, 2.0), 0.084, 0.02);

    // --- Atomic bounds (catalog radii) -----------------------------------------
    {
        struct Expected {
            const char* label;
            double lifetime_ns;
            double dipole_au;
        };
        // Hydrogen: the printed bound 0.01 ns carries one significant digit;
        // the resolved value from the sqrt(30) radius is 0.0096 ns.
        const Expected expected[] = {
            {"H 1S-2P", 0.0096, 9.61}, {"Cs D1", 8.46, 6.46},
            {"Cs D2", 6.38, 6.92},     {"Rb87 D1", 6.29, 6.29},
            {"Rb87 D2", 5.61, 6.47},
        };
        for (const Expected& e : expected) {
            const AtomicTransition& t = need_transition(catalog.transitions, e.label);
            add.point(std::string("table3.lifetime.") + e.label,
                      std::string("lifetime bound, ") + e.label,
                      lifetime_bound(t) * 1e9, e.lifetime_ns, 0.03);
            add.point(std::string("table3.dipole.") + e.label,
                      std::string("dipole bound, ") + e.label, dipole_bound(t),
                      e.dipole_au, 0.03);
        }
        // Known discrepancy: the published hydrogen radius 1.73 (the 1S
        // closed form) cannot produce the published 0.01 ns bound.
        AtomicTransition h = need_transition(catalog.transitions, "H 1S-2P");
        h.chu_radius_au = *h.chu_radius_published_au;
        const double tau_ns = lifetime_bound(h) * 1e9;
        add.point("table3.lifetime.h_published_radius",
                  "lifetime bound from the published H radius 1.73",
                  tau_ns, 0.305, 0.01, true,
                  "inconsistent with the published 0.01 ns bound, which "
                  "requires the 2P radius sqrt(30)");
        add.truth("table3.lifetime.h_radius_mismatch",
                  "published H radius does not reproduce the published bound",
                  tau_ns > 10.0 * 0.01, "0.305 ns vs 0.01 ns", true);
        // Every measured atom respects its CHL-derived bounds.
        for (const AtomicTransition& t : catalog.transitions) {
            add.truth("property.margin.lifetime." + t.label,
                      "lifetime bound below measured lifetime, " + t.label,
                      lifetime_bound(t) <= t.reference_lifetime_s);
            add.truth("property.margin.dipole." + t.label,
                      "dipole bound above measured dipole, " + t.label,
                      dipole_bound(t) >= t.reference_dipole_au);
        }
    }

    // --- Radial solver gates ----------------------------------------------------
    if (!options.skip_solver) {
        SolverOptions solver;
        solver.step_au = options.solver_step_au;

        // Pure Coulomb potential against the closed-form hydrogen radii.
        ModelPotentialParams coulomb;
        coulomb.z = 1;
        coulomb.alpha_c = 0.0;
        coulomb.r_c = 1.0;
        QuantumDefectSeries no_defect;
        double worst = 0.0;
        for (int n = 1; n <= 5; ++n)
            for (int l = 0; l < n; ++l) {
                QuantumState state{"H", n, l, l + 0.5};
                const double got =
                    rms_radius(solve_radial(state, coulomb, no_defect, solver));
                const double want = hydrogen_rms_radius(n, l);
                worst = std::max(worst, std::abs(got - want) / want);
            }
        add.point("solver.coulomb", "Coulomb-mode RMS radii vs closed form, "
                  "worst case over n <= 5", worst, 0.0, 1e-3);

        const AtomParameterTable table = AtomParameterTable::embedded();
        struct RadiusCase {
            const char* element;
            int n;
            double j;
            double expected;
        };
        const RadiusCase cases[] = {
            {"Cs", 6, 0.5, 8.18},
            {"Cs", 6, 1.5, 8.42},
            {"Rb87", 5, 0.5, 7.72},
            {"Rb87", 5, 1.5, 7.82},
        };
        for (const RadiusCase& rc : cases) {
            QuantumState state{rc.element, rc.n, 1, rc.j};
            const double rms = state_rms_radius(state, table, solver);
            add.point("solver.radius." + std::string(rc.element) + ".j" +
                          format_full(rc.j),
                      std::string(rc.element) + " " + std::to_string(rc.n) +
                          "P RMS radius",
                      rms, rc.expected, 0.05);
        }

        // Step-halving convergence on Cs 6P1/2.
        QuantumState cs{"Cs", 6, 1, 0.5};
        const double r1 = state_rms_radius(cs, table, solver);
        SolverOptions half = solver;
        half.step_au = solver.step_au / 2.0;
        const double r2 = state_rms_radius(cs, table, half);
        add.point("solver.convergence",
                  "Cs 6P1/2 RMS radius change under step halving",
                  std::abs(r1 - r2) / r2, 0.0, 1e-3);
    }

    // --- Property suites -----------------------------------------------------
    {
        // Strict monotonicity of Q_CHL on a log grid.
        bool monotone = true;
        double prev = q_chl(1e-4);
        for (int i = 1; i < 100; ++i) {
            const double ka = 1e-4 * std::pow(1e6, i / 99.0);
            const double q = q_chl(ka);
            if (!(q < prev))
                monotone = false;
            prev = q;
        }
        add.truth("property.q_chl_monotone",
                  "Q_CHL strictly decreasing on a 100-point log grid", monotone);

        std::mt19937 rng(20240811);
        std::uniform_real_distribution<double> log_f(1.0, 8.0);   // 10 Hz..100 MHz
        std::uniform_real_distribution<double> log_a(-3.0, 4.0);  // 1 mm..10 km
        std::uniform_real_distribution<double> uniform(0.0, 1.0);

        double worst_fom = 0.0;
        double worst_pdl = 0.0;
        double worst_einstein = 0.0;
        double worst_sigma = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double f = std::pow(10.0, log_f(rng));
            const double df = f * (0.001 + 0.98 * uniform(rng));
            const double a = std::pow(10.0, log_a(rng));
            const double eta = uniform(rng);
            const ResonanceSpec res(f, df);
            const double ka = electrical_size(f, a).ka;
            const double q_ds = q_chl_deep_subwavelength(ka);

            // FOM identity: fom = eta * delta_f * q_chl_ds / f.
            const double lhs = fom(eta, a, res);
            const double rhs = eta * df * q_ds / f;
            if (rhs != 0.0)
                worst_fom = std::max(worst_fom, std::abs(lhs - rhs) / std::abs(rhs));

            // Ceiling identity: power_density_limit * V = (f/df) / q_chl_ds.
            const double volume = 4.0 * constants::pi * a * a * a / 3.0;
            const double lhs2 = power_density_limit(res) * volume;
            const double rhs2 = (f / df) / q_ds;
            worst_pdl = std::max(worst_pdl, std::abs(lhs2 - rhs2) / rhs2);

            // Closing the loop between the dipole bound and the A coefficient.
            AtomicTransition t;
            t.element = "X";
            t.wavelength_m = constants::c / f;
            t.chu_radius_au = a / constants::a0;
            const double a_rate =
                einstein_a(f, dipole_bound(t), EinsteinAMode::standard);
            const double expected_rate = 4.0 * constants::pi * f / q_chl(ka);
            worst_einstein = std::max(
                worst_einstein, std::abs(a_rate - expected_rate) / expected_rate);

            // Relative uncertainty of inferred power doubles that of the field.
            FieldMeasurement m;
            const double b = 1e-15 * (1.0 + 99.0 * uniform(rng));
            m.b_rms_t = UncertainValue{b, b * uniform(rng)};
            m.distance_m = 0.1 + 10.0 * uniform(rng);
            const UncertainValue p = isotropic_radiated_power(m);
            const double rel_p = p.sigma / p.value;
            const double rel_b = m.b_rms_t.sigma / m.b_rms_t.value;
            if (rel_b > 0.0)
                worst_sigma = std::max(worst_sigma,
                                       std::abs(rel_p - 2.0 * rel_b) / (2.0 * rel_b));
        }
        add.point("property.fom_identity",
                  "fom = eta * delta_f * q_chl_ds / f, worst relative deviation",
                  worst_fom, 0.0, 1e-12);
        add.point("property.pdl_identity",
                  "power_density_limit * V = (f/delta_f)/q_chl_ds, worst "
                  "relative deviation",
                  worst_pdl, 0.0, 1e-12);
        add.point("property.einstein_inverse",
                  "einstein_a(standard) at the dipole bound = 4 pi f / Q_CHL, "
                  "worst relative deviation",
                  worst_einstein, 0.0, 1e-12);
        add.point("property.sigma_doubling",
                  "relative power uncertainty = 2 x relative field uncertainty, "
                  "worst relative deviation",
                  worst_sigma, 0.0, 1e-13);
    }

    for (const ValidationCheck& c : summary.checks)
        (c.pass ? summary.passed : summary.failed)++;
    summary.all_pass = summary.failed == 0;
    return summary;
}

std::string render_validation(const ValidationSummary& summary, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["checks"] = ordered_json::array();
        for (const ValidationCheck& c : summary.checks) {
            ordered_json e;
            e["id"] = c.id;
            e["description"] = c.description;
            e["computed"] = c.computed;
            e["expected"] = c.has_expected ? ordered_json(c.expected)
                                           : ordered_json(nullptr);
            e["band"] = c.has_band
                            ? ordered_json::array({c.band_low, c.band_high})
                            : ordered_json(nullptr);
            e["tolerance_rel"] = c.tolerance_rel;
            e["rel_dev"] = c.has_expected ? ordered_json(c.rel_dev)
                                          : ordered_json(nullptr);
            e["pass"] = c.pass;
            e["expected_deviation"] = c.expected_deviation;
            e["note"] = c.note;
            j["checks"].push_back(std::move(e));
        }
        j["passed"] = summary.passed;
        j["failed"] = summary.failed;
        j["all_pass"] = summary.all_pass;
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::string out;
        out += "id,description,computed,expected,band_low,band_high,"
               "tolerance_rel,rel_dev,pass,expected_deviation,note\n";
        for (const ValidationCheck& c : summary.checks) {
            std::string line = c.id;
            auto push = [&line](const std::string& s) {
                line += ',';
                if (s.find_first_of(",\"\n") != std::string::npos) {
                    line += '"';
                    for (char ch : s) {
                        if (ch == '"')
                            line += '"';
                        line += ch;
                    }
                    line += '"';
                } else {
                    line += s;
                }
            };
            push(c.description);
            push(format_full(c.computed));
            push(c.has_expected ? format_full(c.expected) : "");
            push(c.has_band ? format_full(c.band_low) : "");
            push(c.has_band ? format_full(c.band_high) : "");
            push(format_full(c.tolerance_rel));
            push(c.has_expected ? format_full(c.rel_dev) : "");
            push(c.pass ? "true" : "false");
            push(c.expected_deviation ? "true" : "false");
            push(c.note);
            out += line + "\n";
        }
        return out;
    }
    std::string out;
    for (const ValidationCheck& c : summary.checks) {
        std::string status = c.pass ? "PASS" : "FAIL";
        if (c.expected_deviation)
            status += " (expected deviation)";
        std::string target;
        if (c.has_band)
            target = "in [" + format_sci3(c.band_low) + ", " +
                     format_sci3(c.band_high) + "]";
        else if (c.expected != 0.0)
            target = "vs " + format_sci3(c.expected) + " (dev " +
                     format_sci3(c.rel_dev * 100.0) + "%, tol " +
                     format_sci3(c.tolerance_rel * 100.0) + "%)";
        else
            target = "<= " + format_sci3(c.tolerance_rel);
        out += status + "  " + c.id + ": " + c.description + " -> " +
               format_sci3(c.computed) + " " + target + "\n";
        if (!c.note.empty())
            out += "      note: " + c.note + "\n";
    }
    out += std::to_string(summary.passed) + " passed, " +
           std::to_string(summary.failed) + " failed\n";
    return out;
}

} // namespace ese
