#pragma once

#include <string_view>

#include "ese/errors.hpp"

namespace ese {

// Center frequency f and 3-dB bandwidth delta_f of a single simple resonance.
// Narrowband by construction: 0 < delta_f < f is enforced, since every bound
// in this module assumes single-resonance Lorentzian behavior.
struct ResonanceSpec {
    double f_hz = 0.0;
    double delta_f_hz = 0.0;

    ResonanceSpec() = default;
    ResonanceSpec(double f, double delta_f);
};

// Electrical size of an emitter: ka = (2*pi*f/c) * a.
struct ElectricalSize {
    double ka = 0.0;
    double a_m = 0.0;

    bool electrically_small() const { return ka < 1.0; }
};

// Enclosing-sphere geometry of an emitter. Conventions per kind:
//   rod             a = L/2            (diameter ignored; the half-diagonal
//                                       sqrt(L^2+d^2)/2 is the documented
//                                       alternative and gives ~4% larger a)
//   disk            a = sqrt(d^2+h^2)/2  (half-diagonal)
//   crossed_dipoles a = L/sqrt(2)      (two orthogonal dipoles of length L)
//   sphere          a given directly
enum class GeometryKind { rod, disk, crossed_dipoles, sphere };

struct GeometryDescriptor {
    GeometryKind kind = GeometryKind::sphere;
    double length_m = 0.0;   // rod, crossed_dipoles
    double diameter_m = 0.0; // rod, disk
    double height_m = 0.0;   // disk
    double radius_m = 0.0;   // sphere

    static GeometryDescriptor rod(double length_m, double diameter_m);
    static GeometryDescriptor disk(double diameter_m, double height_m);
    static GeometryDescriptor crossed_dipoles(double length_m);
    static GeometryDescriptor sphere(double radius_m);
};

std::string_view geometry_kind_name(GeometryKind kind);
GeometryKind parse_geometry_kind(std::string_view tag);

// Everything derived from the Chu-Harrington limit for one emitter.
struct ChlReport {
    double ka = 0.0;
    double q_chl = 0.0;    // 1/(ka)^3 + 1/(ka)
    double q_chl_ds = 0.0; // deep-subwavelength form 1/(ka)^3
    double q_bw = 0.0;     // f/delta_f
    double efficiency_bound = 0.0;          // min(q_bw/q_chl, 1)
    double power_density_limit = 0.0;       // W per (W·m^3)
    double fom = 0.0;                       // >= 0, unclipped
    bool efficiency_bound_clipped = false;  // q_bw >= q_chl
};

/// Stored-energy quality factor: omega*(W_m + W_e)/(P_rad + P_loss).
/// Zero dissipated power is rejected as an input error.
double q_stored(double w_m_j, double w_e_j, double p_rad_w, double p_loss_w,
                double omega_rad_s);

/// Chu-Harrington lower bound on Q: 1/(ka)^3 + 1/(ka), ka > 0.
double q_chl(double ka);

/// Deep-subwavelength form 1/(ka)^3.
double q_chl_deep_subwavelength(double ka);

/// Bandwidth quality factor f/delta_f.
double q_bw(const ResonanceSpec& res);

/// ka = 2*pi*f*a/c.
ElectricalSize electrical_size(double f_hz, double a_m);

/// Bound on radiation efficiency at a given bandwidth:
/// min((f/delta_f)/Q_CHL(ka), 1) with ka = 2*pi*f*a/c.
double efficiency_bound(const ResonanceSpec& res, double a_m);

/// Same without the clip at 1; equals q_bw(res)/q_chl(ka) exactly.
double efficiency_bound_unclipped(const ResonanceSpec& res, double a_m);

/// Ceiling on radiated power density per unit input power:
/// 6*pi^2*f^4/(c^3*delta_f), in W per (W·m^3).
double power_density_limit(const ResonanceSpec& res);

/// Figure of merit: eta * (1/V) * c^3*delta_f/(6*pi^2*f^4) with
/// V = 4*pi*a^3/3. Equals 1 at theoretically attainable performance.
/// Uses the deep-subwavelength ceiling; never clipped.
double fom(double eta, double a_m, const ResonanceSpec& res);

/// Radius of the smallest sphere enclosing the given geometry.
double enclosing_radius(const GeometryDescriptor& geometry);

/// Full report for one emitter: bound, ceiling and FOM at efficiency eta.
ChlReport chl_report(const ResonanceSpec& res, double a_m, double eta);

} // namespace ese
