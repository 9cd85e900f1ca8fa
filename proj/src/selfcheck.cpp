#include "geophase/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "geophase/circuits.hpp"
#include "geophase/decomplexify.hpp"
#include "geophase/errors.hpp"
#include "geophase/evolution.hpp"
#include "geophase/hamiltonian_models.hpp"
#include "geophase/phases.hpp"

namespace geophase {

namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(double worst, double tol) {
    std::ostringstream s;
    s << "max deviation " << worst << " (tolerance " << tol << ")";
    return s.str();
}

CheckResult bounded(std::string name, double worst, double tol) {
    return {std::move(name), worst <= tol, describe(worst, tol)};
}

CheckResult phase_identity_chain(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> lam(-5.0, 5.0);
    std::uniform_real_distribution<double> th(0.0, kPi);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        double l1 = lam(rng);
        double l2 = lam(rng);
        if (l1 < l2) std::swap(l1, l2);
        if (l1 - l2 < 1e-3) continue;
        const BlochInitialState init{th(rng), 0.0};
        worst = std::max(worst, std::abs(total_phase(l1, l2) -
                                         (dynamic_phase(l1, l2, init) + berry_phase(init))));
    }
    return bounded("phase decomposition total = dynamic + geometric", worst, 1e-10);
}

CheckResult berry_hannay_factor() {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double theta = kPi * k / 99.0;
        worst = std::max(worst, std::abs(hannay_angle(theta) + 2.0 * berry_phase({theta, 0.0})));
    }
    return bounded("Hannay angle = -2 x Berry phase", worst, 1e-12);
}

double max_state_gap(const Trajectory& a, const Trajectory& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const auto sa = a.state(k);
        const auto sb = b.state(k);
        for (std::size_t i = 0; i < sa.size(); ++i) worst = std::max(worst, std::abs(sa[i] - sb[i]));
    }
    return worst;
}

CheckResult representation_equivalence(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const IntegratorConfig cfg{1e-3, 10.0, 10};
    double worst = 0.0;
    int tested = 0;
    while (tested < 10) {
        const ComplexMatrix2 h{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        const ComplexVector2 psi0 = ComplexVector2{{u(rng), u(rng)}, {u(rng), u(rng)}}.normalized();
        const RealSplit rs = split(h);
        if (std::abs(rs.b_mat.determinant()) < 0.05) continue;
        ++tested;

        const Trajectory cx = integrate_schrodinger(h, psi0, cfg);
        const Trajectory r4 = integrate_real4(real4(h), to_real4(psi0), cfg);
        worst = std::max(worst, max_state_gap(cx, r4));

        const Eigen::Vector2d x0{psi0.c1.real(), psi0.c2.real()};
        const Eigen::Vector2d y0{psi0.c1.imag(), psi0.c2.imag()};
        const Trajectory xs = integrate_second_order(
            second_order(rs, SecondOrderVariable::X), x0,
            initial_derivative(rs, SecondOrderVariable::X, x0, y0), cfg);
        const Trajectory ys = integrate_second_order(
            second_order(rs, SecondOrderVariable::Y), y0,
            initial_derivative(rs, SecondOrderVariable::Y, x0, y0), cfg);
        for (std::size_t k = 0; k < cx.size(); ++k) {
            const auto s = cx.state(k);
            worst = std::max({worst, std::abs(s[0] - xs.state(k)[0]), std::abs(s[2] - xs.state(k)[1]),
                              std::abs(s[1] - ys.state(k)[0]), std::abs(s[3] - ys.state(k)[1])});
        }
    }
    return bounded("complex / real-4 / second-order propagation agree", worst, 1e-7);
}

CheckResult norm_laws() {
    const IntegratorConfig cfg{1e-3, 10.0, 100};
    double worst = 0.0;

    const EffectiveHamiltonian herm = build_hermitian({0.3, 0.7, -0.4});
    const NormSeries nh = norm_series(integrate_schrodinger(herm.matrix(), {{0.6, 0.0}, {0.0, 0.8}}, cfg));
    for (const double n : nh.norms2) worst = std::max(worst, std::abs(n - 1.0) / 1e-9);

    const double s = 0.1;
    const EffectiveHamiltonian decay = build_uniform_decay(herm.m, s);
    const NormSeries nd = norm_series(integrate_schrodinger(decay.matrix(), {{0.6, 0.0}, {0.0, 0.8}}, cfg));
    for (std::size_t k = 0; k < nd.times.size(); ++k) {
        const double expected = std::exp(-2.0 * s * nd.times[k]);
        worst = std::max(worst, std::abs(nd.norms2[k] / expected - 1.0) / 1e-8);
    }

    // Balanced states stay balanced only along the PT eigenstates.
    const EffectiveHamiltonian dimer = build_pt_dimer({0.2, 1.0, 0.5});
    const Trajectory tp = integrate_schrodinger(dimer.matrix(), eig2(dimer.matrix()).eigenvector1, cfg);
    const NormSeries np = norm_series(tp);
    for (const double n : np.norms2) worst = std::max(worst, std::abs(n - 1.0) / 1e-6);

    // d/dt |psi|^2 = -2 psi^H Gamma psi, central differences.
    const double r = 1.0 / std::sqrt(2.0);
    const Trajectory tg = integrate_schrodinger(dimer.matrix(), {{r, 0.0}, {0.0, r}}, {1e-3, 10.0, 10});
    const NormSeries ng = norm_series(tg);
    const double dt = tg.spacing();
    for (std::size_t k = 1; k + 1 < ng.times.size(); ++k) {
        const double lhs = (ng.norms2[k + 1] - ng.norms2[k - 1]) / (2.0 * dt);
        const ComplexVector2 psi = tg.psi(k);
        const double rhs = -2.0 * inner(psi, dimer.gamma * psi).real();
        worst = std::max(worst, std::abs(lhs - rhs) / 1e-4);
    }

    return {"norm laws (hermitian, uniform decay, PT eigenstate, gamma law)", worst <= 1.0,
            "worst deviation / tolerance = " + std::to_string(worst)};
}

CheckResult pt_realization() {
    int mismatches = 0;
    for (int i = 0; i <= 80; ++i) {
        const double gamma = 2.0 * i / 80.0;
        const EffectiveHamiltonian h = build_pt_dimer({0.5, 1.0, gamma});
        const PTSymmetryReport rep = pt_symmetry_check(h);
        PTRealization want = PTRealization::Unbroken;
        if (std::abs(gamma - 1.0) < 1e-12) {
            want = PTRealization::Exceptional;
        } else if (gamma > 1.0) {
            want = PTRealization::Broken;
        }
        if (!rep.symmetric || rep.realization != want) ++mismatches;
    }
    return {"PT realization across the exceptional point", mismatches == 0,
            std::to_string(mismatches) + " misclassified gamma values of 81"};
}

CheckResult pt_geometric_independence() {
    double lo = 1e300;
    double hi = -1e300;
    for (int i = 0; i < 10; ++i) {
        const double v = pt_geometric_phase(1.0, 0.1 * i, 0.1);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return bounded("PT geometric phase independent of gamma", hi - lo, 1e-12);
}

CheckResult foucault_precession() {
    const CircuitParams p{1.0 / 400.0, 1.0, 0.4, std::nullopt};
    Trajectory t = integrate_second_order(foucault_system(p), {1.0, 0.0}, {0.0, 0.0}, {1e-3, 10.0, 1});
    t.parameters = {{"omega0", 20.0}, {"coupling", 0.4}};
    const PrecessionEstimate est = extract_precession(t);
    return bounded("Foucault circuit precesses by a t / 2", std::abs(est.angle_at(10.0) - 2.0) / 2.0,
                   0.01);
}

CheckResult sweep_symmetry() {
    std::vector<double> grid;
    for (int i = 0; i <= 80; ++i) grid.push_back(2.0 * i / 80.0);
    const auto sweep = gamma_sweep({1.0, 1.0, 0.1, std::nullopt}, grid);
    double worst = 0.0;
    for (const auto& pt : sweep) {
        Complex sum{};
        for (const auto& m : pt.modes) {
            sum += m;
            double nearest = 1e300;
            for (const auto& other : pt.modes) nearest = std::min(nearest, std::abs(other - std::conj(m)));
            worst = std::max(worst, nearest);
            if (pt.gamma < 1.0) worst = std::max(worst, std::abs(m.real()));
        }
        worst = std::max(worst, std::abs(sum));
    }
    return bounded("circuit spectrum: conjugation closure, zero trace, neutral below EP", worst, 1e-10);
}

}  // namespace

std::uint64_t self_check_seed() {
    if (const char* env = std::getenv("GEOPHASE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InvalidParameter("GEOPHASE_SEED must be an unsigned integer");
        }
    }
    return 20240601ULL;
}

std::vector<CheckResult> run_self_checks(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;
    const std::vector<std::function<CheckResult()>> checks = {
        [&] { return phase_identity_chain(rng); },
        [] { return berry_hannay_factor(); },
        [&] { return representation_equivalence(rng); },
        [] { return norm_laws(); },
        [] { return pt_realization(); },
        [] { return pt_geometric_independence(); },
        [] { return foucault_precession(); },
        [] { return sweep_symmetry(); },
    };
    for (const auto& check : checks) {
        try {
            out.push_back(check());
        } catch (const std::exception& e) {
            out.push_back({"(check raised)", false, e.what()});
        }
    }
    return out;
}

}  // namespace geophase
