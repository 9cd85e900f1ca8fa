#pragma once

#include <vector>

#include "geophase/evolution.hpp"
#include "geophase/hamiltonian_models.hpp"

namespace geophase {

/// cos(theta0/2)|1> + sin(theta0/2) e^{i phi0}|2> in the eigenbasis of H.
struct BlochInitialState {
    double theta0 = 0.0;
    double phi0 = 0.0;

    /// Throws InvalidParameter unless theta0 in [0, pi] and phi0 in [0, 2 pi).
    void validate() const;
    Complex amplitude1() const;
    Complex amplitude2() const;
    ComplexVector2 compose(const ComplexVector2& first, const ComplexVector2& second) const;
};

enum class PhaseMethod { Analytic, TrajectoryExtraction };

const char* to_string(PhaseMethod method);

/// A phase phi is the argument of the multiplier e^{i phi}: Psi(T) = e^{i total} Psi(0).
struct PhaseReport {
    double period = 0.0;
    double total = 0.0;
    double dynamic = 0.0;
    double geometric = 0.0;
    double hannay = 0.0;
    PhaseMethod method = PhaseMethod::Analytic;
};

/// T with T (lambda1 - lambda2) = 2 pi. Requires lambda1 > lambda2.
double return_period(double lambda1, double lambda2);

/// -2 pi lambda1 / (lambda1 - lambda2).
double total_phase(double lambda1, double lambda2);

/// -2 pi lambda1 / (lambda1 - lambda2) + 2 pi sin^2(theta0 / 2).
double dynamic_phase(double lambda1, double lambda2, const BlochInitialState& init);

/// -2 pi sin^2(theta0 / 2) = pi (cos theta0 - 1). Independent of the spectrum.
double berry_phase(const BlochInitialState& init);

/// Classical angle 2 pi (1 - cos theta) for colatitude theta in [0, pi].
double hannay_angle(double theta);

/// Closed-form report for a hermitian two-level system with real spectrum lambda1 > lambda2.
PhaseReport analytic_phases(double lambda1, double lambda2, const BlochInitialState& init);

/// -integral over one return period of <Psi~|H|Psi> / <Psi~|Psi>, where Psi~ evolves under
/// H^dagger in the left eigenbasis. Evaluated by Simpson quadrature on the actual vectors.
/// Requires a PT dimer in its unbroken phase: throws ExceptionalPoint at gamma = 1 and
/// BrokenPhase above it.
double biorthogonal_dynamic_phase(const EffectiveHamiltonian& h, const BlochInitialState& init);

/// Full report for an unbroken PT dimer, with the dynamic part from biorthogonal_dynamic_phase.
PhaseReport pt_dimer_phases(const EffectiveHamiltonian& h, const BlochInitialState& init);

/// 2 pi / (Omega sqrt(1 - gamma^2)). Throws BrokenPhase for gamma >= 1.
double pt_modified_period(double g, double gamma, double omega_loop);

/// a~ T~ / 2 with a~ = g sqrt(1 - gamma^2); equals pi g / Omega for every gamma < 1.
double pt_geometric_phase(double g, double gamma, double omega_loop);

/// Minimum carrier-to-coupling ratio accepted by extract_precession.
inline constexpr double kMinScaleSeparation = 20.0;

/// Slow rotation of the oscillation plane of a gyrator-coupled pair.
/// The sign is chosen so that a coupling a > 0 yields a positive rate a / 2.
struct PrecessionEstimate {
    double rate = 0.0;
    /// Carrier angular frequency measured from zero crossings.
    double carrier = 0.0;
    /// Coupling used for the scale-separation check (from metadata, else 2 |rate|).
    double coupling = 0.0;
    std::vector<double> times;
    std::vector<double> angles;

    /// Accumulated (unwrapped) precession angle since t = 0.
    double angle_at(double t) const;
};

/// Demodulates y = z1 + i z2: the square y^2 removes the sign flips of the carrier, a boxcar
/// over one carrier period removes the fast terms, and the unwrapped phase of what remains is
/// fitted by least squares over a whole number of slow periods.
/// Throws ScaleSeparationViolated when omega / coupling < 20.
PrecessionEstimate extract_precession(const Trajectory& t);

}  // namespace geophase
