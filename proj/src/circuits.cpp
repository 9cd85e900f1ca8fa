#include "geophase/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geophase/errors.hpp"
#include "geophase/evolution.hpp"

namespace geophase {

namespace {

constexpr double kExceptionalTol = 1e-12;
constexpr double kNeutralTol = 1e-9;

void sort_modes(std::array<Complex, 4>& modes) {
    const double scale =
        std::max(1.0, std::abs(*std::max_element(modes.begin(), modes.end(), [](Complex a, Complex b) {
            return std::abs(a) < std::abs(b);
        })));
    const double tie = 1e-13 * scale;
    std::sort(modes.begin(), modes.end(), [tie](Complex a, Complex b) {
        if (std::abs(a.imag() - b.imag()) > tie) return a.imag() > b.imag();
        return a.real() > b.real();
    });
}

bool is_scalar(const Eigen::Matrix2d& k) {
    const double tol = 1e-14 * std::max(1.0, k.norm());
    return std::abs(k(0, 1)) <= tol && std::abs(k(1, 0)) <= tol &&
           std::abs(k(0, 0) - k(1, 1)) <= tol;
}

}  // namespace

void CircuitParams::validate() const {
    if (!(inductance > 0.0) || !std::isfinite(inductance)) {
        throw InvalidParameter("circuit: inductance must be positive");
    }
    if (!(capacitance > 0.0) || !std::isfinite(capacitance)) {
        throw InvalidParameter("circuit: capacitance must be positive");
    }
    if (!(gyrator_conductance >= 0.0) || !std::isfinite(gyrator_conductance)) {
        throw InvalidParameter("circuit: gyrator conductance must be >= 0");
    }
    if (resistance && !(*resistance > 0.0)) {
        throw InvalidParameter("circuit: resistance must be positive (its mirror -R is implied)");
    }
}

double CircuitRates::gamma() const {
    if (coupling > 0.0) return loss / coupling;
    return loss > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

CircuitRates circuit_rates(const CircuitParams& p) {
    p.validate();
    CircuitRates r;
    r.omega0 = 1.0 / std::sqrt(p.inductance * p.capacitance);
    r.coupling = p.gyrator_conductance / p.capacitance;
    r.loss = p.resistance ? 1.0 / (*p.resistance * p.capacitance) : 0.0;
    return r;
}

SecondOrderSystem foucault_system(const CircuitParams& p) {
    if (p.resistance) throw UnexpectedResistor("foucault_system: the Foucault circuit is lossless");
    const CircuitRates r = circuit_rates(p);
    SecondOrderSystem sys;
    sys.damping << 0.0, r.coupling, -r.coupling, 0.0;
    sys.stiffness = r.omega0 * r.omega0 * Eigen::Matrix2d::Identity();
    sys.variable = SecondOrderVariable::Voltage;
    return sys;
}

SecondOrderSystem pt_circuit_system(const CircuitParams& p) {
    return pt_circuit_system(circuit_rates(p));
}

SecondOrderSystem pt_circuit_system(const CircuitRates& r) {
    if (!(r.omega0 > 0.0)) throw InvalidParameter("pt_circuit_system: omega0 must be positive");
    SecondOrderSystem sys;
    sys.damping << r.loss, r.coupling, -r.coupling, -r.loss;
    sys.stiffness = r.omega0 * r.omega0 * Eigen::Matrix2d::Identity();
    sys.variable = SecondOrderVariable::Voltage;
    return sys;
}

const char* to_string(EPClass c) {
    switch (c) {
        case EPClass::BelowEP: return "below_ep";
        case EPClass::AtEP: return "at_ep";
        case EPClass::AboveEP: return "above_ep";
    }
    return "below_ep";
}

std::array<Complex, 4> SpectrumPoint::normalized_modes() const {
    std::array<Complex, 4> out = modes;
    for (auto& m : out) m /= omega0;
    return out;
}

std::array<Complex, 4> companion_spectrum(const SecondOrderSystem& sys) {
    const Eigen::EigenSolver<Eigen::Matrix4d> solver(first_order_matrix(sys), false);
    std::array<Complex, 4> modes;
    for (int i = 0; i < 4; ++i) modes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    sort_modes(modes);
    return modes;
}

std::array<Complex, 4> second_order_spectrum(const SecondOrderSystem& sys) {
    if (!is_scalar(sys.stiffness)) return companion_spectrum(sys);

    const double k = 0.5 * (sys.stiffness(0, 0) + sys.stiffness(1, 1));
    const ComplexMatrix2 d{sys.damping(0, 0), sys.damping(0, 1), sys.damping(1, 0),
                           sys.damping(1, 1)};
    const EigenSystem2 es = eig2(d);
    std::array<Complex, 4> modes;
    std::size_t i = 0;
    for (const Complex c : {es.eigenvalue1, es.eigenvalue2}) {
        const Complex root = std::sqrt(c * c - 4.0 * k);
        modes[i++] = 0.5 * (c + root);
        modes[i++] = 0.5 * (c - root);
    }
    sort_modes(modes);
    return modes;
}

SpectrumPoint circuit_spectrum(const CircuitParams& p) { return circuit_spectrum(circuit_rates(p)); }

SpectrumPoint circuit_spectrum(const CircuitRates& r) {
    SpectrumPoint pt;
    pt.gamma = r.gamma();
    pt.omega0 = r.omega0;
    pt.modes = second_order_spectrum(pt_circuit_system(r));
    const bool neutral = std::all_of(pt.modes.begin(), pt.modes.end(), [&](Complex m) {
        return std::abs(m.real()) <= kNeutralTol * r.omega0;
    });
    if (r.coupling > 0.0 && std::abs(pt.gamma - 1.0) < kExceptionalTol) {
        pt.classification = EPClass::AtEP;
    } else {
        pt.classification = neutral ? EPClass::BelowEP : EPClass::AboveEP;
    }
    return pt;
}

std::vector<SpectrumPoint> gamma_sweep(const CircuitParams& base, std::span<const double> gamma_grid) {
    const CircuitRates rates = circuit_rates(base);
    if (!(rates.coupling > 0.0)) throw InvalidParameter("gamma_sweep: base circuit needs Gg > 0");
    if (!std::is_sorted(gamma_grid.begin(), gamma_grid.end())) {
        throw InvalidParameter("gamma_sweep: gamma grid must be ascending");
    }
    std::vector<SpectrumPoint> out;
    out.reserve(gamma_grid.size());
    for (const double gamma : gamma_grid) {
        if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
            throw InvalidParameter("gamma_sweep: gamma must be finite and >= 0");
        }
        CircuitRates r = rates;
        r.loss = gamma * rates.coupling;
        SpectrumPoint pt = circuit_spectrum(r);
        pt.gamma = gamma;
        out.push_back(pt);
    }
    return out;
}

}  // namespace geophase
