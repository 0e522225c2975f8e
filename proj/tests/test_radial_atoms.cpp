#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "ese/radial_atoms.hpp"

using namespace ese;

namespace {

// Quadrature oracle: analytic hydrogen radial functions, independent of the
// solver and of the closed-form expression under test.
double laguerre(int k, double alpha, double x) {
    double lkm1 = 1.0;
    if (k == 0)
        return lkm1;
    double lk = 1.0 + alpha - x;
    for (int i = 2; i <= k; ++i) {
        const double next =
            ((2.0 * i - 1.0 + alpha - x) * lk - (i - 1.0 + alpha) * lkm1) / i;
        lkm1 = lk;
        lk = next;
    }
    return lk;
}

double hydrogen_radial(int n, int l, double r) {
    const double norm =
        std::sqrt(std::pow(2.0 / n, 3) *
                  std::exp(std::lgamma(n - l) - std::log(2.0 * n) -
                           std::lgamma(n + l + 1)));
    const double x = 2.0 * r / n;
    return norm * std::exp(-r / n) * std::pow(x, l) *
           laguerre(n - l - 1, 2.0 * l + 1.0, x);
}

// <r^2> by composite Simpson over R^2 r^4 (normalization integrated too).
double hydrogen_rms_by_quadrature(int n, int l) {
    const double r_max = 60.0 * n;
    const int intervals = 40000; // even
    const double h = r_max / intervals;
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i <= intervals; ++i) {
        const double r = i * h;
        const double weight = (i == 0 || i == intervals) ? 1.0
                              : (i % 2 == 1)             ? 4.0
                                                         : 2.0;
        const double rr = hydrogen_radial(n, l, r);
        const double density = rr * rr * r * r;
        num += weight * density * r * r;
        den += weight * density;
    }
    return std::sqrt(num / den);
}

const ModelPotentialParams kCoulomb = [] {
    ModelPotentialParams p;
    p.z = 1;
    p.alpha_c = 0.0;
    p.r_c = 1.0;
    return p;
}();

} // namespace

TEST_SUITE("radial_atoms") {

    TEST_CASE("hydrogen closed form") {
        CHECK(hydrogen_rms_radius(1, 0) ==
              doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
        CHECK(hydrogen_rms_radius(2, 1) ==
              doctest::Approx(std::sqrt(30.0)).epsilon(1e-12));
        CHECK(hydrogen_rms_radius(2, 0) ==
              doctest::Approx(std::sqrt(42.0)).epsilon(1e-12));
        CHECK_THROWS_AS(hydrogen_rms_radius(0, 0), InputError);
        CHECK_THROWS_AS(hydrogen_rms_radius(2, 2), InputError);
        CHECK_THROWS_AS(hydrogen_rms_radius(2, -1), InputError);
    }

    TEST_CASE("closed form agrees with the quadrature oracle") {
        for (int n = 1; n <= 5; ++n)
            for (int l = 0; l < n; ++l)
                CHECK(hydrogen_rms_radius(n, l) ==
                      doctest::Approx(hydrogen_rms_by_quadrature(n, l))
                          .epsilon(1e-6));
    }

    TEST_CASE("quantum defect energies") {
        QuantumDefectSeries none;
        CHECK(alkali_energy(QuantumState{"X", 1, 0, 0.5}, none) ==
              doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(alkali_energy(QuantumState{"X", 2, 0, 0.5}, none) ==
              doctest::Approx(-0.125).epsilon(1e-12));

        const AtomParameterTable table = AtomParameterTable::embedded();
        const QuantumDefectSeries& cs_p12 = table.defects("Cs", 1, 0.5);
        const double delta = cs_p12.defect(6);
        const double n_eff = 6.0 - delta;
        const double energy = alkali_energy(QuantumState{"Cs", 6, 1, 0.5}, cs_p12);
        CHECK(energy == doctest::Approx(-1.0 / (2.0 * n_eff * n_eff)).epsilon(1e-12));
        CHECK(energy > -0.095);
        CHECK(energy < -0.085);
    }

    TEST_CASE("parameter table") {
        const AtomParameterTable table = AtomParameterTable::embedded();
        CHECK(table.has_element("Cs"));
        CHECK(table.has_element("Rb87"));
        CHECK_FALSE(table.has_element("Na"));
        CHECK(table.atom("Cs").alpha_c == doctest::Approx(15.6440));
        CHECK(table.atom("Rb87").z == 37);
        CHECK(table.potential("Cs", 1).a1 == doctest::Approx(4.69366096));
        // The l=3 potential row covers higher l.
        CHECK(table.potential("Cs", 7).a1 == table.potential("Cs", 3).a1);
        CHECK(table.defects("Rb87", 1, 1.5).delta0 == doctest::Approx(2.6416737));
        CHECK_THROWS_AS(table.defects("Cs", 4, 4.5), DataError);
        CHECK_THROWS_AS(table.atom("Na"), DataError);

        // The shipped file parses to the same table as the embedded copy.
        const AtomParameterTable from_file =
            AtomParameterTable::load(std::string(ESE_DATA_DIR) +
                                     "/alkali_parameters.txt");
        CHECK(from_file.elements() == table.elements());
        CHECK(from_file.potential("Rb87", 2).a3 == table.potential("Rb87", 2).a3);
        CHECK(from_file.defects("Cs", 1, 1.5).delta2 ==
              table.defects("Cs", 1, 1.5).delta2);
    }

    TEST_CASE("parameter table parse errors") {
        CHECK_THROWS_AS(AtomParameterTable::parse("z 5\n"), ParseError);
        CHECK_THROWS_AS(AtomParameterTable::parse("element X\npotential l=0 a1=z\n"),
                        ParseError);
        CHECK_THROWS_AS(AtomParameterTable::parse("element X\nbogus 1\n"),
                        ParseError);
        // Missing potential rows for l = 0..3.
        CHECK_THROWS_AS(AtomParameterTable::parse("element X\nz 3\nalpha_c 1\n"),
                        ValidationError);
        CHECK_THROWS_AS(AtomParameterTable::load("/nonexistent/file.txt"),
                        DataError);
    }

    TEST_CASE("Coulomb mode reproduces hydrogen radii") {
        QuantumDefectSeries no_defect;
        for (int n = 1; n <= 5; ++n)
            for (int l = 0; l < n; ++l) {
                const QuantumState state{"H", n, l, l + 0.5};
                const RadialSolution sol = solve_radial(state, kCoulomb, no_defect);
                const double expected = hydrogen_rms_radius(n, l);
                CHECK(rms_radius(sol) ==
                      doctest::Approx(expected).epsilon(1e-3));
            }
    }

    TEST_CASE("solution contract for Cs 6P1/2") {
        const AtomParameterTable table = AtomParameterTable::embedded();
        const QuantumState state{"Cs", 6, 1, 0.5};
        const RadialSolution sol =
            solve_radial(state, table.potential("Cs", 1), table.defects("Cs", 1, 0.5));
        CHECK(sol.norm_check == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(sol.grid_au.front() >= 0.01);
        CHECK(sol.grid_au.size() == sol.u.size());

        // Strictly decaying tail beyond the outer classical turning point.
        const double n_eff = 6.0 - table.defects("Cs", 1, 0.5).defect(6);
        const double r_turn = 2.0 * n_eff * n_eff; // Coulomb estimate
        bool tail_ok = true;
        for (std::size_t i = 0; i + 1 < sol.grid_au.size(); ++i)
            if (sol.grid_au[i] > 1.2 * r_turn)
                if (!(sol.u[i + 1] < sol.u[i]) || !(sol.u[i + 1] > 0.0))
                    tail_ok = false;
        CHECK(tail_ok);

        // Cauchy-Schwarz: RMS radius >= mean radius.
        CHECK(rms_radius(sol) >= mean_radius(sol));
    }

    TEST_CASE("alkali RMS radii against the reference values") {
        const AtomParameterTable table = AtomParameterTable::embedded();
        struct Case {
            const char* element;
            int n;
            double j;
            double expected;
        };
        const Case cases[] = {
            {"Cs", 6, 0.5, 8.18},
            {"Cs", 6, 1.5, 8.42},
            {"Rb87", 5, 0.5, 7.72},
            {"Rb87", 5, 1.5, 7.82},
        };
        for (const Case& c : cases) {
            const QuantumState state{c.element, c.n, 1, c.j};
            const double rms = state_rms_radius(state, table);
            CHECK(rms == doctest::Approx(c.expected).epsilon(0.05));
            // Every solve satisfies Cauchy-Schwarz.
            const RadialSolution sol = solve_radial(
                state, table.potential(c.element, 1), table.defects(c.element, 1, c.j));
            CHECK(rms_radius(sol) >= mean_radius(sol));
        }
    }

    TEST_CASE("Rb87 5P3/2 tail decays beyond the turning point") {
        const AtomParameterTable table = AtomParameterTable::embedded();
        const QuantumState state{"Rb87", 5, 1, 1.5};
        const RadialSolution sol = solve_radial(state, table.potential("Rb87", 1),
                                                table.defects("Rb87", 1, 1.5));
        const double n_eff = 5.0 - table.defects("Rb87", 1, 1.5).defect(5);
        const double r_turn = 2.0 * n_eff * n_eff;
        bool tail_ok = true;
        for (std::size_t i = 0; i + 1 < sol.grid_au.size(); ++i)
            if (sol.grid_au[i] > 1.2 * r_turn)
                if (!(sol.u[i + 1] < sol.u[i]) || !(sol.u[i + 1] > 0.0))
                    tail_ok = false;
        CHECK(tail_ok);
        CHECK(sol.norm_check == doctest::Approx(1.0).epsilon(1e-6));
    }

    TEST_CASE("j splitting direction matches the reference data") {
        const AtomParameterTable table = AtomParameterTable::embedded();
        CHECK(state_rms_radius(QuantumState{"Cs", 6, 1, 1.5}, table) >
              state_rms_radius(QuantumState{"Cs", 6, 1, 0.5}, table));
        CHECK(state_rms_radius(QuantumState{"Rb87", 5, 1, 1.5}, table) >
              state_rms_radius(QuantumState{"Rb87", 5, 1, 0.5}, table));
    }

    TEST_CASE("deep outer grids survive via mid-flight rescaling") {
        // An oversized integration range makes the inward-growing seed span
        // hundreds of e-foldings; the solver rescales instead of overflowing.
        QuantumDefectSeries no_defect;
        SolverOptions options;
        options.r_max_au = 800.0;
        const RadialSolution sol =
            solve_radial(QuantumState{"H", 1, 0, 0.5}, kCoulomb, no_defect, options);
        CHECK(rms_radius(sol) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-3));
        CHECK(sol.norm_check == doctest::Approx(1.0).epsilon(1e-6));
    }

    TEST_CASE("step halving convergence") {
        const AtomParameterTable table = AtomParameterTable::embedded();
        const QuantumState state{"Cs", 6, 1, 0.5};
        SolverOptions coarse;
        coarse.step_au = 2e-3;
        SolverOptions fine;
        fine.step_au = 1e-3;
        const double r_coarse = state_rms_radius(state, table, coarse);
        const double r_fine = state_rms_radius(state, table, fine);
        CHECK(std::abs(r_coarse - r_fine) / r_fine < 1e-3);
    }

    TEST_CASE("hydrogen bypasses the solver") {
        const AtomParameterTable table = AtomParameterTable::embedded();
        CHECK(state_rms_radius(QuantumState{"H", 1, 0, 0.5}, table) ==
              doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
        CHECK(state_rms_radius(QuantumState{"H", 2, 1, 0.5}, table) ==
              doctest::Approx(std::sqrt(30.0)).epsilon(1e-12));
    }

    TEST_CASE("state and option validation") {
        const AtomParameterTable table = AtomParameterTable::embedded();
        CHECK_THROWS_AS(QuantumState({"Cs", 6, 6, 6.5}).validate(), InputError);
        CHECK_THROWS_AS(QuantumState({"Cs", 0, 0, 0.5}).validate(), InputError);
        CHECK_THROWS_AS(QuantumState({"Cs", 6, 1, 2.5}).validate(), InputError);
        CHECK_THROWS_AS(state_rms_radius(QuantumState{"Na", 3, 0, 0.5}, table),
                        DataError);
        SolverOptions bad;
        bad.step_au = 0.0;
        CHECK_THROWS_AS(state_rms_radius(QuantumState{"Cs", 6, 1, 0.5}, table, bad),
                        InputError);
    }
}
