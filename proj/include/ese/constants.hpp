#pragma once

#include <numbers>
#include <string_view>

#include "ese/errors.hpp"

namespace ese {

// Physical constants, CODATA 2018. SI units throughout; atomic units appear
// only at input/output boundaries (see dipole_si_to_atomic and the bohr tag
// of convert_length).
namespace constants {

inline constexpr double pi = std::numbers::pi_v<double>;

/// c — speed of light in vacuum [m/s] (exact).
inline constexpr double c = 299'792'458.0;

/// mu0 — vacuum permeability [H/m].
inline constexpr double mu0 = 1.25663706212e-6;

/// eps0 — vacuum permittivity [F/m].
inline constexpr double eps0 = 8.8541878128e-12;

/// h — Planck constant [J·s] (exact).
inline constexpr double h = 6.62607015e-34;

/// hbar — reduced Planck constant [J·s].
inline constexpr double hbar = h / (2.0 * pi);

/// e — elementary charge [C] (exact).
inline constexpr double e_charge = 1.602176634e-19;

/// a0 — Bohr radius [m].
inline constexpr double a0 = 5.29177210903e-11;

/// e·a0 — atomic unit of electric dipole moment [C·m].
inline constexpr double ea0 = e_charge * a0;

} // namespace constants

// A value with a symmetric absolute 1-sigma uncertainty in the same unit.
// Propagation elsewhere is first-order (linearized), uncorrelated.
struct UncertainValue {
    double value = 0.0;
    double sigma = 0.0; // >= 0

    UncertainValue() = default;
    UncertainValue(double v, double s) : value(v), sigma(s) {
        if (!(s >= 0.0))
            throw InputError("UncertainValue: sigma must be >= 0");
    }

    // Multiply value and sigma by a non-negative factor (exact scaling).
    UncertainValue scaled(double factor) const {
        return UncertainValue{value * factor, sigma * factor};
    }
};

enum class LengthUnit { mile, cm, m, bohr };

/// Converts a length to SI meters. 1 mile = 1609.344 m (international),
/// 1 bohr = a0.
double convert_length(double value, LengthUnit unit);

/// Parses a length-unit tag ("mile", "cm", "m", "bohr"); unknown tags are an
/// input error.
LengthUnit parse_length_unit(std::string_view tag);

/// f = c / lambda. Rejects non-positive wavelengths.
double wavelength_to_frequency(double lambda_m);

/// lambda = c / f. Rejects non-positive frequencies.
double frequency_to_wavelength(double f_hz);

/// Converts an electric dipole moment from C·m to atomic units (e·a0).
double dipole_si_to_atomic(double d_si);

} // namespace ese
