#include <doctest.h>

#include <cmath>
#include <random>

#include "ese/constants.hpp"

using namespace ese;
namespace k = ese::constants;

TEST_SUITE("constants") {

    TEST_CASE("CODATA 2018 values") {
        CHECK(k::c == 299792458.0);
        CHECK(k::h == 6.62607015e-34);
        CHECK(k::e_charge == 1.602176634e-19);
        CHECK(k::a0 == 5.29177210903e-11);
        CHECK(k::mu0 == 1.25663706212e-6);
        CHECK(k::eps0 == 8.8541878128e-12);
    }

    TEST_CASE("electromagnetic consistency") {
        CHECK(std::abs(k::eps0 * k::mu0 * k::c * k::c - 1.0) < 1e-9);
        CHECK(k::hbar == doctest::Approx(k::h / (2.0 * k::pi)).epsilon(1e-12));
        CHECK(k::ea0 == doctest::Approx(k::e_charge * k::a0).epsilon(1e-12));
    }

    TEST_CASE("convert_length") {
        CHECK(convert_length(14.0, LengthUnit::mile) ==
              doctest::Approx(22530.816).epsilon(1e-12));
        CHECK(convert_length(1.0, LengthUnit::m) == 1.0);
        CHECK(convert_length(1.73, LengthUnit::bohr) ==
              doctest::Approx(9.155e-11).epsilon(1e-3));
        CHECK(convert_length(100.0, LengthUnit::cm) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK_THROWS_AS(convert_length(std::nan(""), LengthUnit::m), InputError);
        CHECK_THROWS_AS(parse_length_unit("furlong"), InputError);
        CHECK(parse_length_unit("mile") == LengthUnit::mile);
        CHECK(parse_length_unit("bohr") == LengthUnit::bohr);
    }

    TEST_CASE("convert_length round trips") {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> value(1e-6, 1e6);
        for (LengthUnit unit : {LengthUnit::mile, LengthUnit::cm, LengthUnit::m,
                                LengthUnit::bohr}) {
            double factor = convert_length(1.0, unit);
            for (int i = 0; i < 50; ++i) {
                const double v = value(rng);
                const double meters = convert_length(v, unit);
                CHECK(meters / factor == doctest::Approx(v).epsilon(1e-12));
            }
        }
    }

    TEST_CASE("wavelength_to_frequency") {
        CHECK(wavelength_to_frequency(852.347e-9) ==
              doctest::Approx(3.5173e14).epsilon(1e-4));
        CHECK(wavelength_to_frequency(121.567e-9) ==
              doctest::Approx(2.4661e15).epsilon(1e-4));
        CHECK(wavelength_to_frequency(k::c) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK_THROWS_AS(wavelength_to_frequency(0.0), InputError);
        CHECK_THROWS_AS(wavelength_to_frequency(-1.0), InputError);
        CHECK_THROWS_AS(frequency_to_wavelength(0.0), InputError);
    }

    TEST_CASE("wavelength/frequency round trip") {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> log_lambda(-9.0, 3.0);
        for (int i = 0; i < 100; ++i) {
            const double lambda = std::pow(10.0, log_lambda(rng));
            const double back = frequency_to_wavelength(wavelength_to_frequency(lambda));
            CHECK(back == doctest::Approx(lambda).epsilon(1e-12));
        }
    }

    TEST_CASE("dipole_si_to_atomic") {
        CHECK(dipole_si_to_atomic(k::ea0) == 1.0);
        CHECK(dipole_si_to_atomic(8.478e-30) == doctest::Approx(1.0).epsilon(1e-4));
        CHECK(dipole_si_to_atomic(0.0) == 0.0);
        CHECK(dipole_si_to_atomic(5.867e-29) == doctest::Approx(6.92).epsilon(1e-3));
    }

    TEST_CASE("UncertainValue") {
        CHECK_THROWS_AS(UncertainValue(1.0, -0.1), InputError);
        const UncertainValue v{10.0, 2.0};
        const UncertainValue w = v.scaled(0.5);
        CHECK(w.value == 5.0);
        CHECK(w.sigma == 1.0);
    }
}
