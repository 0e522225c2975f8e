#include "ese/radial_atoms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ese {

// Embedded copy of data/alkali_parameters.txt, generated at configure time.
extern const char* const kAlkaliParametersText;

void QuantumState::validate() const {
    if (n < 1)
        throw InputError("quantum state: n must be >= 1");
    if (l < 0 || l > n - 1)
        throw InputError("quantum state: l must satisfy 0 <= l <= n-1");
    if (element != "H") {
        const double two_j = 2.0 * j;
        const bool half_int = std::abs(two_j - std::round(two_j)) < 1e-9;
        const bool valid_j = half_int && (std::abs(j - (l + 0.5)) < 1e-9 ||
                                          (l > 0 && std::abs(j - (l - 0.5)) < 1e-9));
        if (!valid_j)
            throw InputError("quantum state: j must be l-1/2 or l+1/2 (positive)");
    }
}

double QuantumDefectSeries::defect(int n) const {
    const double m = n - delta0;
    return delta0 + delta2 / (m * m) + delta4 / (m * m * m * m);
}

// ---------------------------------------------------------------------------
// Parameter table
// ---------------------------------------------------------------------------

static double parse_double(const std::string& token, const std::string& context) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(token, &pos);
        if (pos != token.size())
            throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError("atom parameter file: bad number '" + token + "' in " +
                         context);
    }
}

// Splits "key=value" tokens of a potential/defect line into a map.
static std::map<std::string, double> parse_kv(std::istringstream& in,
                                              const std::string& context) {
    std::map<std::string, double> kv;
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw ParseError("atom parameter file: expected key=value, got '" +
                             token + "' in " + context);
        kv[token.substr(0, eq)] = parse_double(token.substr(eq + 1), context);
    }
    return kv;
}

static double require(const std::map<std::string, double>& kv,
                      const std::string& key, const std::string& context) {
    const auto it = kv.find(key);
    if (it == kv.end())
        throw ParseError("atom parameter file: missing '" + key + "' in " +
                         context);
    return it->second;
}

AtomParameterTable AtomParameterTable::parse(const std::string& text) {
    AtomParameterTable table;
    std::istringstream stream(text);
    std::string line;
    AtomData* current = nullptr;
    std::string current_name;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream in(line);
        std::string keyword;
        if (!(in >> keyword))
            continue;
        const std::string context = "line " + std::to_string(line_no);
        if (keyword == "element") {
            if (!(in >> current_name))
                throw ParseError("atom parameter file: element needs a name, " +
                                 context);
            current = &table.atoms_[current_name];
        } else if (!current) {
            throw ParseError("atom parameter file: '" + keyword +
                             "' before any element block, " + context);
        } else if (keyword == "z") {
            std::string token;
            in >> token;
            current->z = static_cast<int>(parse_double(token, context));
        } else if (keyword == "alpha_c") {
            std::string token;
            in >> token;
            current->alpha_c = parse_double(token, context);
            if (current->alpha_c < 0.0)
                throw ValidationError("atom parameter file: alpha_c must be >= 0");
        } else if (keyword == "potential") {
            const auto kv = parse_kv(in, context);
            const int l = static_cast<int>(require(kv, "l", context));
            ModelPotentialParams p;
            p.a1 = require(kv, "a1", context);
            p.a2 = require(kv, "a2", context);
            p.a3 = require(kv, "a3", context);
            p.a4 = require(kv, "a4", context);
            p.r_c = require(kv, "rc", context);
            if (!(p.r_c > 0.0))
                throw ValidationError("atom parameter file: rc must be > 0, " +
                                      context);
            current->potential_by_l[l] = p;
        } else if (keyword == "defect") {
            const auto kv = parse_kv(in, context);
            const int l = static_cast<int>(require(kv, "l", context));
            const int two_j = static_cast<int>(std::lround(2.0 * require(kv, "j", context)));
            QuantumDefectSeries d;
            d.delta0 = require(kv, "delta0", context);
            d.delta2 = require(kv, "delta2", context);
            d.delta4 = require(kv, "delta4", context);
            current->defect_by_lj[{l, two_j}] = d;
        } else {
            throw ParseError("atom parameter file: unknown keyword '" + keyword +
                             "', " + context);
        }
    }
    // Every element must cover l = 0..3 and carry its polarizability/rc fields.
    for (auto& [name, atom] : table.atoms_) {
        for (int l = 0; l <= 3; ++l) {
            auto it = atom.potential_by_l.find(l);
            if (it == atom.potential_by_l.end())
                throw ValidationError("atom parameter file: element " + name +
                                      " missing potential row for l=" +
                                      std::to_string(l));
            it->second.alpha_c = atom.alpha_c;
            it->second.z = atom.z;
        }
    }
    return table;
}

AtomParameterTable AtomParameterTable::embedded() {
    return parse(kAlkaliParametersText);
}

AtomParameterTable AtomParameterTable::load(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw DataError("cannot open atom parameter file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse(buffer.str());
}

bool AtomParameterTable::has_element(const std::string& element) const {
    return atoms_.count(element) > 0;
}

const AtomData& AtomParameterTable::atom(const std::string& element) const {
    const auto it = atoms_.find(element);
    if (it == atoms_.end())
        throw DataError("no parameter data for element '" + element + "'");
    return it->second;
}

const ModelPotentialParams& AtomParameterTable::potential(const std::string& element,
                                                          int l) const {
    const AtomData& data = atom(element);
    // The l=3 row covers all higher l.
    return data.potential_by_l.at(std::min(l, 3));
}

const QuantumDefectSeries& AtomParameterTable::defects(const std::string& element,
                                                       int l, double j) const {
    const AtomData& data = atom(element);
    const auto it = data.defect_by_lj.find({l, static_cast<int>(std::lround(2.0 * j))});
    if (it == data.defect_by_lj.end())
        throw DataError("no quantum-defect series for " + element + " l=" +
                        std::to_string(l) + " j=" + std::to_string(j));
    return it->second;
}

std::vector<std::string> AtomParameterTable::elements() const {
    std::vector<std::string> names;
    names.reserve(atoms_.size());
    for (const auto& [name, _] : atoms_)
        names.push_back(name);
    return names;
}

// ---------------------------------------------------------------------------
// Solver
// ---------------------------------------------------------------------------

double hydrogen_rms_radius(int n, int l) {
    if (n < 1 || l < 0 || l > n - 1)
        throw InputError("hydrogen_rms_radius: need n >= 1 and 0 <= l <= n-1");
    const double nn = static_cast<double>(n) * n;
    return std::sqrt(nn * (5.0 * nn + 1.0 - 3.0 * l * (l + 1.0)) / 2.0);
}

double alkali_energy(const QuantumState& state, const QuantumDefectSeries& defects) {
    state.validate();
    const double n_eff = state.n - defects.defect(state.n);
    if (!(n_eff > 0.0))
        throw DataError("alkali_energy: defect series gives non-positive "
                        "effective quantum number");
    return -1.0 / (2.0 * n_eff * n_eff);
}

static double model_potential(const ModelPotentialParams& p, double r) {
    const double z_l = 1.0 + (p.z - 1.0) * std::exp(-p.a1 * r) -
                       r * (p.a3 + p.a4 * r) * std::exp(-p.a2 * r);
    double v = -z_l / r;
    if (p.alpha_c > 0.0) {
        const double x = r / p.r_c;
        const double x2 = x * x;
        const double x6 = x2 * x2 * x2;
        const double r2 = r * r;
        v -= p.alpha_c / (2.0 * r2 * r2) * (1.0 - std::exp(-x6));
    }
    return v;
}

RadialSolution solve_radial(const QuantumState& state,
                            const ModelPotentialParams& params,
                            const QuantumDefectSeries& defects,
                            const SolverOptions& options) {
    state.validate();
    const double h = options.step_au;
    if (!(h > 0.0))
        throw InputError("solve_radial: step must be > 0");

    const double energy = alkali_energy(state, defects);
    const double r_max = options.r_max_au > 0.0
                             ? options.r_max_au
                             : 2.0 * state.n * (state.n + 15.0);
    double r_min = options.r_min_au > 0.0 ? options.r_min_au
                                          : std::cbrt(params.alpha_c);
    r_min = std::max(r_min, 0.01);
    if (!(r_max > r_min + 10.0 * h))
        throw InputError("solve_radial: integration range too small");

    const std::size_t count =
        static_cast<std::size_t>(std::floor((r_max - r_min) / h)) + 1;

    RadialSolution sol;
    sol.step_au = h;
    sol.energy_hartree = energy;
    sol.grid_au.resize(count);
    sol.u.assign(count, 0.0);

    const double ll1 = static_cast<double>(state.l) * (state.l + 1.0);
    std::vector<double> fcoef(count); // Numerov 1 - h^2 g / 12
    const double h2 = h * h;
    for (std::size_t i = 0; i < count; ++i) {
        const double r = r_min + static_cast<double>(i) * h;
        sol.grid_au[i] = r;
        const double g = 2.0 * model_potential(params, r) + ll1 / (r * r) -
                         2.0 * energy;
        fcoef[i] = 1.0 - h2 * g / 12.0;
    }

    // Asymptotic decaying seed exp(-kappa r) in the outer forbidden region;
    // amplitude is arbitrary, fixed by normalization below.
    const double kappa = std::sqrt(-2.0 * energy);
    sol.u[count - 1] = 1e-15;
    sol.u[count - 2] = 1e-15 * std::exp(kappa * h);

    for (std::size_t i = count - 2; i > 0; --i) {
        sol.u[i - 1] = ((12.0 - 10.0 * fcoef[i]) * sol.u[i] -
                        fcoef[i + 1] * sol.u[i + 1]) /
                       fcoef[i - 1];
        if (!std::isfinite(sol.u[i - 1]))
            throw NumericError("solve_radial: integration overflow at r=" +
                               std::to_string(sol.grid_au[i - 1]) +
                               " (E=" + std::to_string(energy) + " Ha)");
        if (std::abs(sol.u[i - 1]) > 1e250) {
            // Rescale everything integrated so far; the overall amplitude is
            // fixed by normalization anyway.
            for (std::size_t k = i - 1; k < count; ++k)
                sol.u[k] *= 1e-100;
        }
    }

    // The energy is generally not an exact eigenvalue of the model potential,
    // so the irregular solution grows through the inner forbidden region.
    // Truncate where |u| stops decreasing outward from the inner edge.
    std::size_t trunc = 0;
    while (trunc + 1 < count && std::abs(sol.u[trunc + 1]) < std::abs(sol.u[trunc]))
        ++trunc;
    if (trunc > 0 && std::abs(sol.u[0]) > 1e2 * std::abs(sol.u[trunc])) {
        for (std::size_t i = 0; i <= trunc; ++i)
            sol.u[i] = 0.0;
    }

    // Fix the overall sign: outermost antinode positive.
    double peak = 0.0;
    for (double v : sol.u)
        peak = std::max(peak, std::abs(v));
    if (!(peak > 0.0))
        throw NumericError("solve_radial: integration produced a null solution");
    std::size_t i_peak = 0;
    for (std::size_t i = 0; i < count; ++i)
        if (std::abs(sol.u[i]) == peak) {
            i_peak = i;
        }
    if (sol.u[i_peak] < 0.0)
        for (double& v : sol.u)
            v = -v;

    // Bring the peak to 1 before squaring, so the norm integral cannot
    // overflow however far the inward growth ran.
    for (double& v : sol.u)
        v /= peak;

    // Normalize to unit norm (trapezoid).
    double norm = 0.0;
    for (std::size_t i = 0; i + 1 < count; ++i)
        norm += 0.5 * h * (sol.u[i] * sol.u[i] + sol.u[i + 1] * sol.u[i + 1]);
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw NumericError("solve_radial: normalization integral is not positive");
    const double scale = 1.0 / std::sqrt(norm);
    for (double& v : sol.u)
        v *= scale;

    double check = 0.0;
    for (std::size_t i = 0; i + 1 < count; ++i)
        check += 0.5 * h * (sol.u[i] * sol.u[i] + sol.u[i + 1] * sol.u[i + 1]);
    sol.norm_check = check;
    return sol;
}

static double weighted_moment(const RadialSolution& sol, int power) {
    double num = 0.0;
    double den = 0.0;
    const std::size_t count = sol.u.size();
    for (std::size_t i = 0; i + 1 < count; ++i) {
        const double w0 = sol.u[i] * sol.u[i] * std::pow(sol.grid_au[i], power);
        const double w1 =
            sol.u[i + 1] * sol.u[i + 1] * std::pow(sol.grid_au[i + 1], power);
        num += 0.5 * sol.step_au * (w0 + w1);
        den += 0.5 * sol.step_au *
               (sol.u[i] * sol.u[i] + sol.u[i + 1] * sol.u[i + 1]);
    }
    if (!(den > 0.0))
        throw NumericError("radial moment: null norm");
    return num / den;
}

double rms_radius(const RadialSolution& sol) {
    return std::sqrt(weighted_moment(sol, 2));
}

double mean_radius(const RadialSolution& sol) {
    return weighted_moment(sol, 1);
}

double state_rms_radius(const QuantumState& state, const AtomParameterTable& table,
                        const SolverOptions& options) {
    state.validate();
    if (state.element == "H")
        return hydrogen_rms_radius(state.n, state.l);
    const ModelPotentialParams& params = table.potential(state.element, state.l);
    const QuantumDefectSeries& defects =
        table.defects(state.element, state.l, state.j);
    return rms_radius(solve_radial(state, params, defects, options));
}

} // namespace ese
