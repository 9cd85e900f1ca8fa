#pragma once

#include <array>

#include "geophase/complex_linalg.hpp"

namespace geophase {

enum class HamiltonianKind { Hermitian, UniformDecay, PTDimer, General };

/// H = M - i Gamma with M and Gamma hermitian.
struct EffectiveHamiltonian {
    ComplexMatrix2 m{};
    ComplexMatrix2 gamma{};
    HamiltonianKind kind = HamiltonianKind::General;

    ComplexMatrix2 matrix() const { return m - kI * gamma; }
};

/// Splits an arbitrary H into its hermitian and anti-hermitian parts.
EffectiveHamiltonian decompose(const ComplexMatrix2& h);

/// [[h, f - ig], [f + ig, h]].
struct HermitianEqualDiagonal {
    double h = 0.0;
    double f = 0.0;
    double g = 0.0;
};

/// M = [[a, -ig], [ig, a]], Gamma = diag(-s, s).
struct PTDimerParams {
    double a = 0.0;
    double g = 1.0;
    double s = 0.0;

    double gamma_ratio() const { return s / g; }
    bool unbroken() const;
    bool broken() const;
    /// |gamma - 1| < 1e-12.
    bool exceptional() const;
};

EffectiveHamiltonian build_hermitian(const HermitianEqualDiagonal& p);

/// Gamma = s * identity. Throws NonPositiveRate for s <= 0 and InvalidParameter for a non-hermitian h.
EffectiveHamiltonian build_uniform_decay(const ComplexMatrix2& h, double s);

/// Throws InvalidParameter unless g > 0 and s >= 0.
EffectiveHamiltonian build_pt_dimer(const PTDimerParams& p);

/// The antilinear map v -> P conj(v). Parity is site exchange, P = [[0, 1], [1, 0]].
struct PTOperator {
    std::array<std::array<double, 2>, 2> parity{{{0.0, 1.0}, {1.0, 0.0}}};
    bool conjugate = true;

    ComplexVector2 apply(const ComplexVector2& v) const;
};

PTOperator pt_operator();

enum class PTRealization { NotSymmetric, Unbroken, Broken, Exceptional };

struct PTSymmetryReport {
    bool symmetric = false;
    PTRealization realization = PTRealization::NotSymmetric;
    /// Phase-tolerant distances used for the classification.
    double self_map_distance = 0.0;
    double exchange_distance = 0.0;
};

/// symmetric <=> P conj(H) P = H within 1e-12 * max(1, ||H||).
PTSymmetryReport pt_symmetry_check(const EffectiveHamiltonian& h);

enum class DecayClass { Decaying, Conserving, Indefinite };

struct GammaSpectrum {
    double trace = 0.0;
    double det = 0.0;
    DecayClass decay_class = DecayClass::Indefinite;
};

/// Trace and determinant of Gamma, i.e. the coefficients of lambda^2 - Tr lambda + det.
GammaSpectrum gamma_spectrum(const EffectiveHamiltonian& h);

const char* to_string(HamiltonianKind kind);
const char* to_string(PTRealization realization);
const char* to_string(DecayClass decay_class);

}  // namespace geophase
