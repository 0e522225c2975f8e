#include "ese/atomic_limits.hpp"

#include <cmath>
#include <string>

#include "ese/chl_core.hpp"
#include "ese/constants.hpp"

namespace ese {

using namespace constants;

double AtomicTransition::frequency_hz() const {
    return wavelength_to_frequency(wavelength_m);
}

EinsteinAMode parse_einstein_a_mode(std::string_view tag) {
    if (tag == "standard")
        return EinsteinAMode::standard;
    if (tag == "paper_factor2")
        return EinsteinAMode::paper_factor2;
    throw InputError("unknown A-coefficient mode: '" + std::string(tag) + "'");
}

std::string_view einstein_a_mode_name(EinsteinAMode mode) {
    return mode == EinsteinAMode::standard ? "standard" : "paper_factor2";
}

double uncertainty_qbw_bound(double f_hz, double delta_t_s) {
    if (!(f_hz > 0.0))
        throw InputError("uncertainty_qbw_bound: frequency must be > 0");
    if (!(delta_t_s > 0.0))
        throw InputError("uncertainty_qbw_bound: lifetime must be > 0");
    return 4.0 * pi * f_hz * delta_t_s;
}

static void check_transition(const AtomicTransition& t) {
    if (!(t.wavelength_m > 0.0))
        throw InputError("atomic transition: wavelength must be > 0");
    if (!(t.chu_radius_au > 0.0))
        throw InputError("atomic transition: Chu radius must be > 0");
}

static double transition_ka(const AtomicTransition& t) {
    const double f = t.frequency_hz();
    return 2.0 * pi * f / c * (t.chu_radius_au * a0);
}

double lifetime_bound(const AtomicTransition& t) {
    check_transition(t);
    const double f = t.frequency_hz();
    return q_chl(transition_ka(t)) / (4.0 * pi * f);
}

double dipole_bound(const AtomicTransition& t) {
    check_transition(t);
    const double f = t.frequency_hz();
    const double d_si =
        std::sqrt(3.0 * eps0 * h * c * c * c /
                  (4.0 * pi * pi * f * f * q_chl(transition_ka(t))));
    return dipole_si_to_atomic(d_si);
}

double einstein_a(double f_hz, double d_au, EinsteinAMode mode) {
    if (!(f_hz > 0.0))
        throw InputError("einstein_a: frequency must be > 0");
    if (!(d_au >= 0.0))
        throw InputError("einstein_a: dipole moment must be >= 0");
    const double omega = 2.0 * pi * f_hz;
    const double d_si = d_au * ea0;
    const double a_standard =
        omega * omega * omega * d_si * d_si / (3.0 * pi * eps0 * hbar * c * c * c);
    return mode == EinsteinAMode::standard ? a_standard : 2.0 * a_standard;
}

AtomicBoundReport atomic_bound_report(const AtomicTransition& t,
                                      EinsteinAMode mode) {
    check_transition(t);
    AtomicBoundReport report;
    report.ka = transition_ka(t);
    report.q_chl = q_chl(report.ka);
    report.lifetime_bound_s = lifetime_bound(t);
    report.dipole_bound_au = dipole_bound(t);
    report.a_coefficient_mode = mode;
    return report;
}

} // namespace ese
