#include "geophase/hamiltonian_models.hpp"

#include <algorithm>
#include <cmath>

#include "geophase/errors.hpp"

namespace geophase {

namespace {

constexpr double kExceptionalTol = 1e-12;
constexpr double kCommutationTol = 1e-12;
constexpr double kEigenvectorPhaseTol = 1e-8;

bool is_zero(const ComplexMatrix2& m, double tol) { return m.norm() <= tol; }

}  // namespace

bool PTDimerParams::unbroken() const { return gamma_ratio() < 1.0 && !exceptional(); }

bool PTDimerParams::broken() const { return gamma_ratio() > 1.0 && !exceptional(); }

bool PTDimerParams::exceptional() const {
    return std::abs(gamma_ratio() - 1.0) < kExceptionalTol;
}

EffectiveHamiltonian decompose(const ComplexMatrix2& h) {
    const ComplexMatrix2 h_dag = adjoint(h);
    EffectiveHamiltonian eff;
    eff.m = 0.5 * (h + h_dag);
    eff.gamma = (0.5 * kI) * (h - h_dag);
    const double tol = 1e-12 * std::max(1.0, h.norm());
    const Complex s = eff.gamma.h11;
    if (is_zero(eff.gamma, tol)) {
        eff.kind = HamiltonianKind::Hermitian;
    } else if (s.real() > 0.0 && max_abs_diff(eff.gamma, ComplexMatrix2::diagonal(s, s)) <= tol) {
        eff.kind = HamiltonianKind::UniformDecay;
    } else {
        eff.kind = HamiltonianKind::General;
    }
    return eff;
}

EffectiveHamiltonian build_hermitian(const HermitianEqualDiagonal& p) {
    if (!std::isfinite(p.h) || !std::isfinite(p.f) || !std::isfinite(p.g)) {
        throw InvalidParameter("build_hermitian: non-finite parameter");
    }
    EffectiveHamiltonian eff;
    eff.m = {Complex{p.h, 0.0}, Complex{p.f, -p.g}, Complex{p.f, p.g}, Complex{p.h, 0.0}};
    eff.kind = HamiltonianKind::Hermitian;
    return eff;
}

EffectiveHamiltonian build_uniform_decay(const ComplexMatrix2& h, double s) {
    if (!(s > 0.0)) throw NonPositiveRate("build_uniform_decay: rate s must be positive");
    if (!h.is_hermitian()) throw InvalidParameter("build_uniform_decay: h must be hermitian");
    EffectiveHamiltonian eff;
    eff.m = h;
    eff.gamma = ComplexMatrix2::diagonal(s, s);
    eff.kind = HamiltonianKind::UniformDecay;
    return eff;
}

EffectiveHamiltonian build_pt_dimer(const PTDimerParams& p) {
    if (!(p.g > 0.0)) throw InvalidParameter("build_pt_dimer: coupling g must be positive");
    if (!(p.s >= 0.0)) throw InvalidParameter("build_pt_dimer: gain/loss rate s must be >= 0");
    if (!std::isfinite(p.a) || !std::isfinite(p.g) || !std::isfinite(p.s)) {
        throw InvalidParameter("build_pt_dimer: non-finite parameter");
    }
    EffectiveHamiltonian eff;
    eff.m = {Complex{p.a, 0.0}, Complex{0.0, -p.g}, Complex{0.0, p.g}, Complex{p.a, 0.0}};
    eff.gamma = ComplexMatrix2::diagonal(-p.s, p.s);
    eff.kind = HamiltonianKind::PTDimer;
    return eff;
}

ComplexVector2 PTOperator::apply(const ComplexVector2& v) const {
    const ComplexVector2 w = conjugate ? conj(v) : v;
    return {parity[0][0] * w.c1 + parity[0][1] * w.c2, parity[1][0] * w.c1 + parity[1][1] * w.c2};
}

PTOperator pt_operator() { return {}; }

PTSymmetryReport pt_symmetry_check(const EffectiveHamiltonian& h) {
    const ComplexMatrix2 hm = h.matrix();
    // P conj(H) P with P the site exchange.
    const ComplexMatrix2 mapped{std::conj(hm.h22), std::conj(hm.h21), std::conj(hm.h12),
                                std::conj(hm.h11)};

    PTSymmetryReport report;
    report.symmetric = max_abs_diff(mapped, hm) <= kCommutationTol * std::max(1.0, hm.norm());
    if (!report.symmetric) return report;

    const EigenSystem2 es = eig2(hm);
    if (es.degenerate) {
        report.realization = es.defective ? PTRealization::Exceptional : PTRealization::Unbroken;
        return report;
    }

    const PTOperator pt = pt_operator();
    const ComplexVector2 pt1 = pt.apply(es.eigenvector1);
    const ComplexVector2 pt2 = pt.apply(es.eigenvector2);
    report.self_map_distance = std::max(phase_distance(pt1, es.eigenvector1),
                                        phase_distance(pt2, es.eigenvector2));
    report.exchange_distance = std::max(phase_distance(pt1, es.eigenvector2),
                                        phase_distance(pt2, es.eigenvector1));
    if (report.self_map_distance <= kEigenvectorPhaseTol) {
        report.realization = PTRealization::Unbroken;
    } else if (report.exchange_distance <= kEigenvectorPhaseTol) {
        report.realization = PTRealization::Broken;
    } else {
        report.realization = report.self_map_distance <= report.exchange_distance
                                 ? PTRealization::Unbroken
                                 : PTRealization::Broken;
    }
    return report;
}

GammaSpectrum gamma_spectrum(const EffectiveHamiltonian& h) {
    GammaSpectrum out;
    out.trace = h.gamma.trace().real();
    out.det = h.gamma.det().real();
    const double tol = 1e-12 * std::max(1.0, h.gamma.norm());
    if (out.trace > tol && out.det > 0.0) {
        out.decay_class = DecayClass::Decaying;
    } else if (std::abs(out.trace) <= tol &&
               (is_zero(h.gamma, tol) || (out.det < 0.0 && pt_symmetry_check(h).symmetric))) {
        out.decay_class = DecayClass::Conserving;
    } else {
        out.decay_class = DecayClass::Indefinite;
    }
    return out;
}

const char* to_string(HamiltonianKind kind) {
    switch (kind) {
        case HamiltonianKind::Hermitian: return "hermitian";
        case HamiltonianKind::UniformDecay: return "uniform_decay";
        case HamiltonianKind::PTDimer: return "pt_dimer";
        case HamiltonianKind::General: return "general";
    }
    return "general";
}

const char* to_string(PTRealization realization) {
    switch (realization) {
        case PTRealization::NotSymmetric: return "not_symmetric";
        case PTRealization::Unbroken: return "unbroken";
        case PTRealization::Broken: return "broken";
        case PTRealization::Exceptional: return "exceptional";
    }
    return "not_symmetric";
}

const char* to_string(DecayClass decay_class) {
    switch (decay_class) {
        case DecayClass::Decaying: return "decaying";
        case DecayClass::Conserving: return "conserving";
        case DecayClass::Indefinite: return "indefinite";
    }
    return "indefinite";
}

}  // namespace geophase
