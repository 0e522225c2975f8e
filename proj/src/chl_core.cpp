#include "ese/chl_core.hpp"

#include <cmath>
#include <string>

#include "ese/constants.hpp"

namespace ese {

using constants::c;
using constants::pi;

ResonanceSpec::ResonanceSpec(double f, double delta_f)
    : f_hz(f), delta_f_hz(delta_f) {
    if (!(f > 0.0))
        throw InputError("ResonanceSpec: center frequency must be > 0");
    if (!(delta_f > 0.0))
        throw InputError("ResonanceSpec: bandwidth must be > 0");
    if (!(delta_f < f))
        throw InputError("ResonanceSpec: bandwidth must be < center frequency "
                         "(narrowband single-resonance assumption)");
}

GeometryDescriptor GeometryDescriptor::rod(double length_m, double diameter_m) {
    GeometryDescriptor g;
    g.kind = GeometryKind::rod;
    g.length_m = length_m;
    g.diameter_m = diameter_m;
    return g;
}

GeometryDescriptor GeometryDescriptor::disk(double diameter_m, double height_m) {
    GeometryDescriptor g;
    g.kind = GeometryKind::disk;
    g.diameter_m = diameter_m;
    g.height_m = height_m;
    return g;
}

GeometryDescriptor GeometryDescriptor::crossed_dipoles(double length_m) {
    GeometryDescriptor g;
    g.kind = GeometryKind::crossed_dipoles;
    g.length_m = length_m;
    return g;
}

GeometryDescriptor GeometryDescriptor::sphere(double radius_m) {
    GeometryDescriptor g;
    g.kind = GeometryKind::sphere;
    g.radius_m = radius_m;
    return g;
}

std::string_view geometry_kind_name(GeometryKind kind) {
    switch (kind) {
    case GeometryKind::rod:
        return "rod";
    case GeometryKind::disk:
        return "disk";
    case GeometryKind::crossed_dipoles:
        return "crossed_dipoles";
    case GeometryKind::sphere:
        return "sphere";
    }
    return "?";
}

GeometryKind parse_geometry_kind(std::string_view tag) {
    if (tag == "rod")
        return GeometryKind::rod;
    if (tag == "disk")
        return GeometryKind::disk;
    if (tag == "crossed_dipoles")
        return GeometryKind::crossed_dipoles;
    if (tag == "sphere")
        return GeometryKind::sphere;
    throw InputError("unknown geometry tag: '" + std::string(tag) + "'");
}

double q_stored(double w_m_j, double w_e_j, double p_rad_w, double p_loss_w,
                double omega_rad_s) {
    if (w_m_j < 0.0 || w_e_j < 0.0 || p_rad_w < 0.0 || p_loss_w < 0.0 ||
        omega_rad_s < 0.0)
        throw InputError("q_stored: all inputs must be >= 0");
    const double p_diss = p_rad_w + p_loss_w;
    if (!(p_diss > 0.0))
        throw InputError("q_stored: dissipated power must be > 0");
    return omega_rad_s * (w_m_j + w_e_j) / p_diss;
}

double q_chl(double ka) {
    if (!(ka > 0.0))
        throw InputError("q_chl: ka must be > 0");
    return 1.0 / (ka * ka * ka) + 1.0 / ka;
}

double q_chl_deep_subwavelength(double ka) {
    if (!(ka > 0.0))
        throw InputError("q_chl_deep_subwavelength: ka must be > 0");
    return 1.0 / (ka * ka * ka);
}

double q_bw(const ResonanceSpec& res) {
    return res.f_hz / res.delta_f_hz;
}

ElectricalSize electrical_size(double f_hz, double a_m) {
    if (!(f_hz > 0.0))
        throw InputError("electrical_size: frequency must be > 0");
    if (!(a_m > 0.0))
        throw InputError("electrical_size: radius must be > 0");
    return ElectricalSize{2.0 * pi * f_hz * a_m / c, a_m};
}

double efficiency_bound_unclipped(const ResonanceSpec& res, double a_m) {
    const ElectricalSize size = electrical_size(res.f_hz, a_m);
    return q_bw(res) / q_chl(size.ka);
}

double efficiency_bound(const ResonanceSpec& res, double a_m) {
    return std::min(efficiency_bound_unclipped(res, a_m), 1.0);
}

double power_density_limit(const ResonanceSpec& res) {
    const double f = res.f_hz;
    return 6.0 * pi * pi * f * f * f * f / (c * c * c * res.delta_f_hz);
}

double fom(double eta, double a_m, const ResonanceSpec& res) {
    if (!(eta >= 0.0))
        throw InputError("fom: efficiency must be >= 0");
    if (!(a_m > 0.0))
        throw InputError("fom: radius must be > 0");
    const double volume = 4.0 * pi * a_m * a_m * a_m / 3.0;
    return eta / volume / power_density_limit(res);
}

double enclosing_radius(const GeometryDescriptor& geometry) {
    switch (geometry.kind) {
    case GeometryKind::rod:
        if (!(geometry.length_m > 0.0) || !(geometry.diameter_m > 0.0))
            throw InputError("enclosing_radius: rod dimensions must be > 0");
        return geometry.length_m / 2.0;
    case GeometryKind::disk: {
        if (!(geometry.diameter_m > 0.0) || !(geometry.height_m > 0.0))
            throw InputError("enclosing_radius: disk dimensions must be > 0");
        const double d = geometry.diameter_m;
        const double h = geometry.height_m;
        return std::sqrt(d * d + h * h) / 2.0;
    }
    case GeometryKind::crossed_dipoles:
        if (!(geometry.length_m > 0.0))
            throw InputError(
                "enclosing_radius: crossed-dipole length must be > 0");
        return geometry.length_m / std::numbers::sqrt2_v<double>;
    case GeometryKind::sphere:
        if (!(geometry.radius_m > 0.0))
            throw InputError("enclosing_radius: sphere radius must be > 0");
        return geometry.radius_m;
    }
    throw InputError("enclosing_radius: unknown geometry tag");
}

ChlReport chl_report(const ResonanceSpec& res, double a_m, double eta) {
    ChlReport report;
    const ElectricalSize size = electrical_size(res.f_hz, a_m);
    report.ka = size.ka;
    report.q_chl = q_chl(size.ka);
    report.q_chl_ds = q_chl_deep_subwavelength(size.ka);
    report.q_bw = q_bw(res);
    const double unclipped = report.q_bw / report.q_chl;
    report.efficiency_bound_clipped = unclipped >= 1.0;
    report.efficiency_bound = std::min(unclipped, 1.0);
    report.power_density_limit = power_density_limit(res);
    report.fom = fom(eta, a_m, res);
    return report;
}

} // namespace ese
