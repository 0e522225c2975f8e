#include "ese/constants.hpp"

#include <cmath>
#include <string>

namespace ese {

double convert_length(double value, LengthUnit unit) {
    if (!std::isfinite(value))
        throw InputError("convert_length: value must be finite");
    switch (unit) {
    case LengthUnit::mile:
        return value * 1609.344;
    case LengthUnit::cm:
        return value * 0.01;
    case LengthUnit::m:
        return value;
    case LengthUnit::bohr:
        return value * constants::a0;
    }
    throw InputError("convert_length: unknown unit tag");
}

LengthUnit parse_length_unit(std::string_view tag) {
    if (tag == "mile")
        return LengthUnit::mile;
    if (tag == "cm")
        return LengthUnit::cm;
    if (tag == "m")
        return LengthUnit::m;
    if (tag == "bohr")
        return LengthUnit::bohr;
    throw InputError("unknown length unit tag: '" + std::string(tag) + "'");
}

double wavelength_to_frequency(double lambda_m) {
    if (!(lambda_m > 0.0))
        throw InputError("wavelength_to_frequency: wavelength must be > 0");
    return constants::c / lambda_m;
}

double frequency_to_wavelength(double f_hz) {
    if (!(f_hz > 0.0))
        throw InputError("frequency_to_wavelength: frequency must be > 0");
    return constants::c / f_hz;
}

double dipole_si_to_atomic(double d_si) {
    return d_si / constants::ea0;
}

} // namespace ese
