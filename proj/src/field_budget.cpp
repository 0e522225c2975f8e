#include "ese/field_budget.hpp"

#include <cmath>

namespace ese {

using constants::c;
using constants::mu0;
using constants::pi;

static void check_measurement(const FieldMeasurement& m) {
    if (!(m.b_rms_t.value >= 0.0))
        throw InputError("field measurement: b_rms must be >= 0");
    if (!(m.distance_m > 0.0))
        throw InputError("field measurement: distance must be > 0");
    if (!(m.gain >= 1.0))
        throw InputError("field measurement: gain must be >= 1");
}

UncertainValue isotropic_radiated_power(const FieldMeasurement& m) {
    check_measurement(m);
    const double b = m.b_rms_t.value;
    const double r = m.distance_m;
    const double value = c / (2.0 * mu0) * b * b * 4.0 * pi * r * r;
    // P ~ B^2, so the relative error doubles.
    const double sigma = b > 0.0 ? 2.0 * (m.b_rms_t.sigma / b) * value : 0.0;
    return UncertainValue{value, sigma};
}

UncertainValue gain_corrected_power(const UncertainValue& p_iso_w, double gain) {
    if (!(gain >= 1.0))
        throw InputError("gain_corrected_power: gain must be >= 1");
    return p_iso_w.scaled(1.0 / gain);
}

UncertainValue radiation_efficiency(const UncertainValue& p_rad_w, double p_in_w) {
    if (!(p_in_w > 0.0))
        throw InputError("radiation_efficiency: input power must be > 0");
    return p_rad_w.scaled(1.0 / p_in_w);
}

RadiationBudget radiation_budget(const FieldMeasurement& m, double p_in_w) {
    RadiationBudget budget;
    budget.p_rad_iso_w = isotropic_radiated_power(m);
    budget.p_rad_w = gain_corrected_power(budget.p_rad_iso_w, m.gain);
    budget.p_in_w = p_in_w;
    budget.eta = radiation_efficiency(budget.p_rad_w, p_in_w);
    return budget;
}

double vswr_bandwidth(double f_hz, double q_total, double s) {
    if (!(f_hz > 0.0))
        throw InputError("vswr_bandwidth: frequency must be > 0");
    if (!(q_total > 0.0))
        throw InputError("vswr_bandwidth: Q must be > 0");
    if (!(s >= 1.0))
        throw InputError("vswr_bandwidth: VSWR must be >= 1");
    return f_hz / q_total * (s - 1.0) / std::sqrt(s);
}

} // namespace ese
