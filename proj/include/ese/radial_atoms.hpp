#pragma once

#include <map>
#include <string>
#include <vector>

#include "ese/errors.hpp"

namespace ese {

// One bound state of an atom. j is ignored for hydrogen.
struct QuantumState {
    std::string element; // "H", "Rb87", "Cs"
    int n = 0;           // >= 1
    int l = 0;           // 0 <= l < n
    double j = 0.0;      // l - 1/2 or l + 1/2 (positive)

    void validate() const;
};

// One-electron model potential coefficients for a given (element, l):
// V(r) = -Z_l(r)/r - alpha_c/(2 r^4) * (1 - exp(-(r/r_c)^6)),
// Z_l(r) = 1 + (z-1) exp(-a1 r) - r (a3 + a4 r) exp(-a2 r).
// All quantities in atomic units.
struct ModelPotentialParams {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;
    double r_c = 1.0;    // > 0
    double alpha_c = 0.0; // core polarizability, >= 0
    int z = 1;            // nuclear charge
};

// Rydberg-Ritz quantum-defect expansion for one (element, l, j) series:
// delta(n) = delta0 + delta2/(n - delta0)^2 + delta4/(n - delta0)^4.
struct QuantumDefectSeries {
    double delta0 = 0.0;
    double delta2 = 0.0;
    double delta4 = 0.0;

    double defect(int n) const;
};

// Per-element parameter set loaded from the data file.
struct AtomData {
    int z = 1;
    double alpha_c = 0.0;
    std::map<int, ModelPotentialParams> potential_by_l;             // l = 0..3
    std::map<std::pair<int, int>, QuantumDefectSeries> defect_by_lj; // (l, 2j)
};

// Key-value parameter table for the supported alkali atoms. The shipped copy
// lives in data/alkali_parameters.txt and is also embedded in the binary;
// load() accepts a user-supplied file in the same format.
class AtomParameterTable {
  public:
    static AtomParameterTable embedded();
    static AtomParameterTable load(const std::string& path);
    static AtomParameterTable parse(const std::string& text);

    bool has_element(const std::string& element) const;
    const AtomData& atom(const std::string& element) const;
    const ModelPotentialParams& potential(const std::string& element, int l) const;
    const QuantumDefectSeries& defects(const std::string& element, int l,
                                       double j) const;
    std::vector<std::string> elements() const;

  private:
    std::map<std::string, AtomData> atoms_;
};

// Discretized reduced radial wavefunction u(r) = r R(r) on a uniform grid,
// normalized to unit norm.
struct RadialSolution {
    std::vector<double> grid_au; // increasing radii
    std::vector<double> u;       // same length as grid_au
    double energy_hartree = 0.0;
    double step_au = 0.0;
    double norm_check = 0.0; // integral of u^2 dr after normalization
};

// Integration controls. r_max defaults to 2n(n+15); r_min to the core cutoff
// alpha_c^(1/3) clamped to >= 0.01.
struct SolverOptions {
    double step_au = 1e-3;
    double r_max_au = 0.0; // 0 = automatic
    double r_min_au = 0.0; // 0 = automatic
};

/// Closed-form hydrogen RMS radius sqrt(<r^2>) in Bohr radii:
/// sqrt(n^2 (5 n^2 + 1 - 3 l (l+1)) / 2).
double hydrogen_rms_radius(int n, int l);

/// Quantum-defect energy E = -1/(2 (n - delta(n))^2), in Hartree.
double alkali_energy(const QuantumState& state, const QuantumDefectSeries& defects);

/// Inward Numerov integration of u'' = [2V + l(l+1)/r^2 - 2E] u from an
/// asymptotic decaying seed at r_max down to r_min, with the diverging inner
/// tail truncated and the result normalized to unit norm.
RadialSolution solve_radial(const QuantumState& state,
                            const ModelPotentialParams& params,
                            const QuantumDefectSeries& defects,
                            const SolverOptions& options = {});

/// sqrt( integral(u^2 r^2 dr) / integral(u^2 dr) ) by trapezoidal quadrature.
double rms_radius(const RadialSolution& sol);

/// integral(u^2 r dr) / integral(u^2 dr) — used for the Cauchy-Schwarz check.
double mean_radius(const RadialSolution& sol);

/// RMS radius of a state: closed form for H, Numerov solve for the alkalis.
double state_rms_radius(const QuantumState& state, const AtomParameterTable& table,
                        const SolverOptions& options = {});

} // namespace ese
