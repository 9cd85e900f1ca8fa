#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "geophase/complex_linalg.hpp"
#include "geophase/decomplexify.hpp"

namespace geophase {

/// Two identical LC tanks coupled by a gyrator; an optional resistor R on tank 1
/// is balanced by -R on tank 2.
struct CircuitParams {
    double inductance = 1.0;           // henry
    double capacitance = 1.0;          // farad
    double gyrator_conductance = 0.0;  // siemens
    std::optional<double> resistance;  // ohm; absent means lossless

    /// Throws InvalidParameter on non-positive L, C, R or negative Gg.
    void validate() const;
};

/// The rates the circuit equations depend on.
struct CircuitRates {
    double omega0 = 1.0;    // 1 / sqrt(LC)
    double coupling = 0.0;  // Gg / C  (a for the Foucault circuit, g for the PT circuit)
    double loss = 0.0;      // 1 / (RC), zero when lossless

    /// s / g; zero for an uncoupled lossless pair, infinite for uncoupled with loss.
    double gamma() const;
};

CircuitRates circuit_rates(const CircuitParams& p);

/// z'' = D z' - omega0^2 z with D = [[0, a], [-a, 0]].
/// Throws UnexpectedResistor when p carries a resistance.
SecondOrderSystem foucault_system(const CircuitParams& p);

/// z'' = D z' - omega0^2 z with D = [[s, g], [-g, -s]]. Without a resistor s = 0.
SecondOrderSystem pt_circuit_system(const CircuitParams& p);
SecondOrderSystem pt_circuit_system(const CircuitRates& r);

enum class EPClass { BelowEP, AtEP, AboveEP };

const char* to_string(EPClass c);

struct SpectrumPoint {
    double gamma = 0.0;
    double omega0 = 1.0;
    /// Eigenvalues of the 4-dim first-order system, ordered by descending imaginary part,
    /// then descending real part.
    std::array<Complex, 4> modes{};
    EPClass classification = EPClass::BelowEP;

    std::array<Complex, 4> normalized_modes() const;
};

/// Eigenvalues of the companion matrix [[0, I], [-K, D]].
/// When K is a multiple of the identity the characteristic polynomial factors exactly as
/// prod_i (lambda^2 - c_i lambda + k) over the eigenvalues c_i of D, which stays exact at
/// defective points; otherwise a dense 4x4 eigensolver is used.
std::array<Complex, 4> second_order_spectrum(const SecondOrderSystem& sys);

/// Dense 4x4 eigensolve of the companion matrix, same ordering as second_order_spectrum.
std::array<Complex, 4> companion_spectrum(const SecondOrderSystem& sys);

SpectrumPoint circuit_spectrum(const CircuitParams& p);
SpectrumPoint circuit_spectrum(const CircuitRates& r);

/// One spectrum per gamma at fixed omega0 and g (taken from base), with s = gamma g.
/// The grid must be ascending and non-negative.
std::vector<SpectrumPoint> gamma_sweep(const CircuitParams& base, std::span<const double> gamma_grid);

}  // namespace geophase
