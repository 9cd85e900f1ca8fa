#include "geophase/phases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "geophase/errors.hpp"

namespace geophase {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDegenerateGap = 1e-12;
constexpr double kRangeSlack = 1e-12;
constexpr int kQuadratureIntervals = 1000;

void require_gap(double lambda1, double lambda2, const char* who) {
    if (std::abs(lambda1 - lambda2) < kDegenerateGap) {
        throw DegenerateSpectrum(std::string(who) + ": degenerate spectrum");
    }
}

void require_unbroken(double gamma, const char* who) {
    if (!(gamma >= 0.0)) throw InvalidParameter(std::string(who) + ": gamma must be >= 0");
    if (gamma >= 1.0) {
        throw BrokenPhase(std::string(who) + ": gamma >= 1, PT symmetry is broken");
    }
}

PTDimerParams dimer_params(const EffectiveHamiltonian& h) {
    if (h.kind != HamiltonianKind::PTDimer) {
        throw InvalidParameter("expected a PT-dimer Hamiltonian");
    }
    return {h.m.h11.real(), h.m.h21.imag(), h.gamma.h22.real()};
}

// Sign changes of one component, linearly interpolated.
std::vector<double> zero_crossings(const Trajectory& t, std::size_t component) {
    std::vector<double> out;
    for (std::size_t k = 1; k < t.size(); ++k) {
        const double a = t.state(k - 1)[component];
        const double b = t.state(k)[component];
        if ((a < 0.0 && b >= 0.0) || (a > 0.0 && b <= 0.0)) {
            const double frac = a / (a - b);
            out.push_back(t.times[k - 1] + frac * (t.times[k] - t.times[k - 1]));
        }
    }
    return out;
}

struct Line {
    double intercept = 0.0;
    double slope = 0.0;
};

Line least_squares(const std::vector<double>& x, const std::vector<double>& y, std::size_t count) {
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(count);
    my /= static_cast<double>(count);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
    return {my - slope * mx, slope};
}

double metadata(const Trajectory& t, const char* key, double fallback) {
    const auto it = t.parameters.find(key);
    return it == t.parameters.end() ? fallback : it->second;
}

}  // namespace

void BlochInitialState::validate() const {
    if (!(theta0 >= -kRangeSlack && theta0 <= kPi + kRangeSlack)) {
        throw InvalidParameter("Bloch state: theta0 must lie in [0, pi]");
    }
    if (!(phi0 >= -kRangeSlack && phi0 < kTwoPi)) {
        throw InvalidParameter("Bloch state: phi0 must lie in [0, 2 pi)");
    }
}

Complex BlochInitialState::amplitude1() const { return {std::cos(0.5 * theta0), 0.0}; }

Complex BlochInitialState::amplitude2() const {
    return std::sin(0.5 * theta0) * std::exp(kI * phi0);
}

ComplexVector2 BlochInitialState::compose(const ComplexVector2& first,
                                          const ComplexVector2& second) const {
    return amplitude1() * first + amplitude2() * second;
}

const char* to_string(PhaseMethod method) {
    return method == PhaseMethod::Analytic ? "analytic" : "trajectory_extraction";
}

double return_period(double lambda1, double lambda2) {
    require_gap(lambda1, lambda2, "return_period");
    if (lambda1 < lambda2) {
        throw InvalidParameter("return_period: eigenvalues must be ordered lambda1 > lambda2");
    }
    return kTwoPi / (lambda1 - lambda2);
}

double total_phase(double lambda1, double lambda2) {
    require_gap(lambda1, lambda2, "total_phase");
    return -kTwoPi * lambda1 / (lambda1 - lambda2);
}

double dynamic_phase(double lambda1, double lambda2, const BlochInitialState& init) {
    require_gap(lambda1, lambda2, "dynamic_phase");
    init.validate();
    const double s = std::sin(0.5 * init.theta0);
    return -kTwoPi * lambda1 / (lambda1 - lambda2) + kTwoPi * s * s;
}

double berry_phase(const BlochInitialState& init) {
    init.validate();
    const double s = std::sin(0.5 * init.theta0);
    return -kTwoPi * s * s;
}

double hannay_angle(double theta) {
    if (!(theta >= -kRangeSlack && theta <= kPi + kRangeSlack)) {
        throw InvalidParameter("hannay_angle: colatitude must lie in [0, pi]");
    }
    return kTwoPi * (1.0 - std::cos(theta));
}

PhaseReport analytic_phases(double lambda1, double lambda2, const BlochInitialState& init) {
    PhaseReport r;
    r.period = return_period(lambda1, lambda2);
    r.total = total_phase(lambda1, lambda2);
    r.dynamic = dynamic_phase(lambda1, lambda2, init);
    r.geometric = berry_phase(init);
    r.hannay = hannay_angle(init.theta0);
    r.method = PhaseMethod::Analytic;
    return r;
}

double biorthogonal_dynamic_phase(const EffectiveHamiltonian& h, const BlochInitialState& init) {
    const PTDimerParams p = dimer_params(h);
    init.validate();
    if (p.exceptional()) {
        throw ExceptionalPoint("biorthogonal_dynamic_phase: gamma = 1 is an exceptional point");
    }
    if (p.broken()) throw BrokenPhase("biorthogonal_dynamic_phase: gamma > 1");

    const ComplexMatrix2 hm = h.matrix();
    const BiorthogonalBasis basis = biorthogonal(hm);
    const Complex k1 = basis.eigenvalues[0];
    const Complex k2 = basis.eigenvalues[1];
    const double period = return_period(k1.real(), k2.real());
    const Complex c1 = init.amplitude1();
    const Complex c2 = init.amplitude2();

    // |Psi(t)> evolves under H, |Psi~(t)> under H^dagger.
    auto integrand = [&](double t) {
        const ComplexVector2 psi =
            (c1 * std::exp(-kI * k1 * t)) * basis.right[0] + (c2 * std::exp(-kI * k2 * t)) * basis.right[1];
        const ComplexVector2 dual = (c1 * std::exp(-kI * std::conj(k1) * t)) * basis.left[0] +
                                    (c2 * std::exp(-kI * std::conj(k2) * t)) * basis.left[1];
        return inner(dual, hm * psi) / inner(dual, psi);
    };

    const double dt = period / kQuadratureIntervals;
    Complex sum = integrand(0.0) + integrand(period);
    for (int i = 1; i < kQuadratureIntervals; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(i * dt);
    }
    return -(sum * (dt / 3.0)).real();
}

PhaseReport pt_dimer_phases(const EffectiveHamiltonian& h, const BlochInitialState& init) {
    const double dynamic = biorthogonal_dynamic_phase(h, init);
    const EigenSystem2 es = eig2(h.matrix());
    const double k1 = es.eigenvalue1.real();
    const double k2 = es.eigenvalue2.real();
    PhaseReport r;
    r.period = return_period(k1, k2);
    r.total = total_phase(k1, k2);
    r.dynamic = dynamic;
    r.geometric = r.total - r.dynamic;
    r.hannay = -2.0 * r.geometric;
    r.method = PhaseMethod::Analytic;
    return r;
}

double pt_modified_period(double g, double gamma, double omega_loop) {
    (void)g;  // the period depends on g only through gamma
    require_unbroken(gamma, "pt_modified_period");
    if (!(omega_loop > 0.0)) throw InvalidParameter("pt_modified_period: Omega must be positive");
    return kTwoPi / (omega_loop * std::sqrt(1.0 - gamma * gamma));
}

double pt_geometric_phase(double g, double gamma, double omega_loop) {
    const double period = pt_modified_period(g, gamma, omega_loop);
    const double effective_coupling = g * std::sqrt(1.0 - gamma * gamma);
    return 0.5 * effective_coupling * period;
}

double PrecessionEstimate::angle_at(double t) const {
    if (times.empty()) return rate * t;
    if (t <= times.front()) return angles.front() - rate * (times.front() - t);
    if (t >= times.back()) return angles.back() + rate * (t - times.back());
    const auto hi = std::upper_bound(times.begin(), times.end(), t);
    const std::size_t j = static_cast<std::size_t>(hi - times.begin());
    const double w = (t - times[j - 1]) / (times[j] - times[j - 1]);
    return (1.0 - w) * angles[j - 1] + w * angles[j];
}

PrecessionEstimate extract_precession(const Trajectory& t) {
    if (t.representation != Representation::SecondOrder2) {
        throw WrongRepresentation("extract_precession: needs a second-order (z1, z2) trajectory");
    }
    const std::size_t n = t.size();
    if (n < 16) throw InvalidParameter("extract_precession: trajectory too short");
    const double dt = t.times[1] - t.times[0];

    std::vector<double> crossings = zero_crossings(t, 0);
    if (crossings.size() < 3) crossings = zero_crossings(t, 1);
    if (crossings.size() < 3) {
        throw InvalidParameter("extract_precession: fewer than two carrier half-cycles");
    }
    PrecessionEstimate est;
    est.carrier = kPi * static_cast<double>(crossings.size() - 1) /
                  (crossings.back() - crossings.front());

    const std::size_t window = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::lround(kTwoPi / (est.carrier * dt))));
    if (window + 2 > n) {
        throw InvalidParameter("extract_precession: trajectory shorter than one carrier period");
    }

    // Boxcar average of y^2 over one carrier period.
    std::vector<Complex> prefix(n + 1, Complex{});
    std::vector<double> magnitude_prefix(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const auto s = t.state(k);
        const Complex y{s[0], s[1]};
        prefix[k + 1] = prefix[k] + y * y;
        magnitude_prefix[k + 1] = magnitude_prefix[k] + std::norm(y);
    }
    const std::size_t count = n - window + 1;
    const double center = 0.5 * static_cast<double>(window - 1) * dt;
    std::vector<double> times(count);
    std::vector<double> phase(count);
    double previous = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const Complex avg = prefix[k + window] - prefix[k];
        const double scale = magnitude_prefix[k + window] - magnitude_prefix[k];
        if (!(std::abs(avg) > 1e-6 * scale)) {
            throw InvalidParameter("extract_precession: motion has no well-defined oscillation plane");
        }
        times[k] = t.times[k] + center;
        const double raw = std::arg(avg);
        if (k == 0) {
            phase[k] = raw;
        } else {
            // Continuous tracking: add the principal value of each increment.
            phase[k] = phase[k - 1] + std::remainder(raw - previous, kTwoPi);
        }
        previous = raw;
    }

    // With loss the plane turns non-uniformly (but monotonically); the mean rate is
    // 2*pi*k over the time the phase needs to advance by k whole turns. Records shorter
    // than one turn fall back to a least-squares line.
    Line line = least_squares(times, phase, count);
    const double advance = phase.back() - phase.front();
    const double turns = std::floor(std::abs(advance) / kTwoPi);
    if (turns >= 1.0) {
        const double sign = advance > 0.0 ? 1.0 : -1.0;
        const double target = phase.front() + sign * turns * kTwoPi;
        std::size_t j = 1;
        while (j + 1 < count && sign * (phase[j] - target) < 0.0) ++j;
        const double f = (target - phase[j - 1]) / (phase[j] - phase[j - 1]);
        const double reached = times[j - 1] + f * (times[j] - times[j - 1]);
        const double slope = sign * turns * kTwoPi / (reached - times.front());
        line = {phase.front() - slope * times.front(), slope};
    }

    est.rate = -0.5 * line.slope;
    est.times = std::move(times);
    est.angles.resize(count);
    for (std::size_t k = 0; k < count; ++k) est.angles[k] = -0.5 * (phase[k] - line.intercept);

    const double omega = metadata(t, "omega0", est.carrier);
    est.coupling = metadata(t, "coupling", 2.0 * std::abs(est.rate));
    if (est.coupling > 0.0 && omega / est.coupling < kMinScaleSeparation) {
        throw ScaleSeparationViolated("extract_precession: omega / coupling below 20");
    }
    return est;
}

}  // namespace geophase
