#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ese/errors.hpp"

namespace ese {

// A two-level atomic emitter. The Chu radius is the RMS radius of the state
// enclosing the transition (in Bohr radii); reference lifetime and dipole
// moment are ingested measured values, not computed here.
struct AtomicTransition {
    std::string label;              // e.g. "Cs D2"
    std::string element;            // "H", "Cs", "Rb87"
    int n = 0;                      // excited-state principal quantum number
    int l = 0;                      // excited-state orbital quantum number
    double j = 0.0;                 // excited-state total angular momentum
    double wavelength_m = 0.0;      // vacuum wavelength
    double chu_radius_au = 0.0;     // Bohr radii, used for the bounds
    std::optional<double> chu_radius_published_au; // variant carried when it
                                                   // disagrees (hydrogen)
    double reference_lifetime_s = 0.0;
    double reference_dipole_au = 0.0;

    double frequency_hz() const;
};

// Which spontaneous-emission coefficient convention to use.
//   standard:      A = omega^3 |d|^2 / (3*pi*eps0*hbar*c^3)
//   paper_factor2: twice the standard value (quantum emitter treated as
//                  twice as bright as the classical dipole)
// The dipole bound below is the algebraic inverse of the standard form, so
// standard is the default.
enum class EinsteinAMode { standard, paper_factor2 };

EinsteinAMode parse_einstein_a_mode(std::string_view tag);
std::string_view einstein_a_mode_name(EinsteinAMode mode);

// CHL-derived bounds for one transition.
struct AtomicBoundReport {
    double q_chl = 0.0;
    double ka = 0.0;
    double lifetime_bound_s = 0.0; // Q_CHL/(4*pi*f), lower bound
    double dipole_bound_au = 0.0;  // upper bound
    EinsteinAMode a_coefficient_mode = EinsteinAMode::standard;
};

/// Energy-time uncertainty ceiling on the bandwidth Q factor: 4*pi*f*dt.
double uncertainty_qbw_bound(double f_hz, double delta_t_s);

/// Lower bound on the excited-state lifetime: Q_CHL(ka)/(4*pi*f) with
/// ka = (2*pi*f/c) * chu_radius * a0. Uses the full two-term Q_CHL.
double lifetime_bound(const AtomicTransition& t);

/// Upper bound on the transition dipole moment, in atomic units:
/// sqrt(3*eps0*h*c^3 / (4*pi^2*f^2*Q_CHL)) / (e*a0).
double dipole_bound(const AtomicTransition& t);

/// Spontaneous-emission rate for dipole moment d (atomic units) at
/// frequency f, in the chosen convention.
double einstein_a(double f_hz, double d_au, EinsteinAMode mode);

/// Bounds for a transition; mode only tags the report (the bounds themselves
/// derive from the standard convention).
AtomicBoundReport atomic_bound_report(const AtomicTransition& t,
                                      EinsteinAMode mode = EinsteinAMode::standard);

} // namespace ese
