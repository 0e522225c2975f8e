#pragma once

#include "ese/constants.hpp"

namespace ese {

// A far-field RMS magnetic-field measurement at a known distance.
// far_field_onset_m is carried for reporting only; it is not enforced.
struct FieldMeasurement {
    UncertainValue b_rms_t;         // tesla
    double distance_m = 0.0;        // > 0
    double far_field_onset_m = 0.0; // informational
    double gain = 1.5;              // directivity, >= 1 (1.5 = small dipole)
};

// Radiated-power budget inferred from a field measurement.
struct RadiationBudget {
    UncertainValue p_rad_iso_w; // isotropic-equivalent radiated power
    UncertainValue p_rad_w;     // gain-corrected
    double p_in_w = 0.0;
    UncertainValue eta; // p_rad / p_in
};

/// Radiated power of an isotropic source producing the measured field:
/// P = (c/(2*mu0)) * B^2 * 4*pi*R^2. The relative uncertainty of P is twice
/// that of B (first-order propagation); sigma = 0 when B = 0.
UncertainValue isotropic_radiated_power(const FieldMeasurement& m);

/// Scales isotropic power down by the emitter's directive gain (>= 1).
UncertainValue gain_corrected_power(const UncertainValue& p_iso_w, double gain);

/// eta = p_rad / p_in for a matched emitter; scales sigma by 1/p_in too.
UncertainValue radiation_efficiency(const UncertainValue& p_rad_w, double p_in_w);

/// Full pipeline: field -> isotropic power -> gain correction -> efficiency.
RadiationBudget radiation_budget(const FieldMeasurement& m, double p_in_w);

/// Matched-resonator bandwidth at a given VSWR tolerance s >= 1:
/// delta_f = (f/Q) * (s - 1)/sqrt(s).
double vswr_bandwidth(double f_hz, double q_total, double s);

} // namespace ese
