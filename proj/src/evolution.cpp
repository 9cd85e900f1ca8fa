#include "geophase/evolution.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "geophase/errors.hpp"

namespace geophase {

namespace {

constexpr double kMaxStepTimesRate = 0.1;

void check_step(double step, double rate, const char* who) {
    if (step * rate > kMaxStepTimesRate) {
        std::ostringstream msg;
        msg << who << ": step " << step << " times spectral radius " << rate << " exceeds "
            << kMaxStepTimesRate;
        throw StepTooLarge(msg.str());
    }
}

double spectral_radius(const Eigen::Matrix4d& m) {
    const Eigen::EigenSolver<Eigen::Matrix4d> solver(m, false);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Trajectory make_trajectory(Representation rep, std::size_t dim, const IntegratorConfig& cfg) {
    Trajectory t;
    t.representation = rep;
    t.dim = dim;
    t.step = cfg.step;
    t.record_stride = cfg.record_stride;
    const std::size_t n = cfg.sample_count();
    t.times.reserve(n);
    t.values.reserve(n * dim);
    return t;
}

void record(Trajectory& t, std::size_t step_index, const double* state) {
    t.times.push_back(static_cast<double>(step_index) * t.step);
    t.values.insert(t.values.end(), state, state + t.dim);
}

// Fixed-step RK4 for a linear real system x' = M x.
Trajectory integrate_linear(const Eigen::Matrix4d& m, Eigen::Vector4d x, std::size_t dim,
                            Representation rep, const IntegratorConfig& cfg) {
    Trajectory t = make_trajectory(rep, dim, cfg);
    const double h = cfg.step;
    const std::size_t steps = cfg.step_count();
    record(t, 0, x.data());
    for (std::size_t k = 1; k <= steps; ++k) {
        const Eigen::Vector4d k1 = m * x;
        const Eigen::Vector4d k2 = m * (x + 0.5 * h * k1);
        const Eigen::Vector4d k3 = m * (x + 0.5 * h * k2);
        const Eigen::Vector4d k4 = m * (x + h * k3);
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (k % static_cast<std::size_t>(cfg.record_stride) == 0) record(t, k, x.data());
    }
    return t;
}

}  // namespace

void IntegratorConfig::validate() const {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw InvalidParameter("integrator: step must be positive");
    }
    if (!(duration > 0.0) || !std::isfinite(duration)) {
        throw InvalidParameter("integrator: duration must be positive");
    }
    if (step > duration) throw InvalidParameter("integrator: step exceeds duration");
    if (record_stride < 1) throw InvalidParameter("integrator: record_stride must be >= 1");
}

std::size_t IntegratorConfig::step_count() const {
    // Tolerate duration/step landing a hair below an integer.
    return static_cast<std::size_t>(std::floor(duration / step + 1e-9));
}

std::size_t IntegratorConfig::sample_count() const {
    return step_count() / static_cast<std::size_t>(record_stride) + 1;
}

double default_step(double spectral_radius) {
    if (!(spectral_radius > 0.0)) throw InvalidParameter("default_step: spectral radius must be > 0");
    return 2.0 * std::numbers::pi / (1000.0 * spectral_radius);
}

const char* to_string(Representation rep) {
    switch (rep) {
        case Representation::Complex2: return "complex2";
        case Representation::Real4: return "real4";
        case Representation::SecondOrder2: return "second_order2";
    }
    return "complex2";
}

Representation representation_from_string(const std::string& name) {
    if (name == "complex2") return Representation::Complex2;
    if (name == "real4") return Representation::Real4;
    if (name == "second_order2") return Representation::SecondOrder2;
    throw InvalidParameter("unknown representation '" + name + "'");
}

ComplexVector2 Trajectory::psi(std::size_t k) const {
    if (representation == Representation::SecondOrder2) {
        throw WrongRepresentation("psi: second-order trajectories carry no complex state");
    }
    const auto s = state(k);
    return {Complex{s[0], s[1]}, Complex{s[2], s[3]}};
}

Trajectory integrate_schrodinger(const ComplexMatrix2& h, const ComplexVector2& psi0,
                                 const IntegratorConfig& cfg) {
    cfg.validate();
    if (!psi0.is_finite()) throw InvalidParameter("integrate_schrodinger: non-finite initial state");
    check_step(cfg.step, h.spectral_radius(), "integrate_schrodinger");

    const ComplexMatrix2 gen = (-kI) * h;
    const double dt = cfg.step;
    const std::size_t steps = cfg.step_count();
    Trajectory t = make_trajectory(Representation::Complex2, 4, cfg);
    t.source = "schrodinger";

    ComplexVector2 psi = psi0;
    auto push = [&](std::size_t k) {
        const double s[4] = {psi.c1.real(), psi.c1.imag(), psi.c2.real(), psi.c2.imag()};
        record(t, k, s);
    };
    push(0);
    for (std::size_t k = 1; k <= steps; ++k) {
        const ComplexVector2 k1 = gen * psi;
        const ComplexVector2 k2 = gen * (psi + Complex{0.5 * dt} * k1);
        const ComplexVector2 k3 = gen * (psi + Complex{0.5 * dt} * k2);
        const ComplexVector2 k4 = gen * (psi + Complex{dt} * k3);
        psi = psi + Complex{dt / 6.0} * (k1 + Complex{2.0} * k2 + Complex{2.0} * k3 + k4);
        if (k % static_cast<std::size_t>(cfg.record_stride) == 0) push(k);
    }
    return t;
}

Trajectory integrate_real4(const RealSystem4& sys, const Eigen::Vector4d& state0,
                           const IntegratorConfig& cfg) {
    cfg.validate();
    if (!state0.allFinite()) throw InvalidParameter("integrate_real4: non-finite initial state");
    check_step(cfg.step, spectral_radius(sys.evo), "integrate_real4");
    Trajectory t = integrate_linear(sys.evo, state0, 4, Representation::Real4, cfg);
    t.source = "real4";
    return t;
}

Eigen::Matrix4d first_order_matrix(const SecondOrderSystem& sys) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m.block<2, 2>(0, 2) = Eigen::Matrix2d::Identity();
    m.block<2, 2>(2, 0) = -sys.stiffness;
    m.block<2, 2>(2, 2) = sys.damping;
    return m;
}

Trajectory integrate_second_order(const SecondOrderSystem& sys, const Eigen::Vector2d& z0,
                                  const Eigen::Vector2d& zdot0, const IntegratorConfig& cfg) {
    cfg.validate();
    if (!z0.allFinite() || !zdot0.allFinite()) {
        throw InvalidParameter("integrate_second_order: non-finite initial state");
    }
    const Eigen::Matrix4d m = first_order_matrix(sys);
    check_step(cfg.step, spectral_radius(m), "integrate_second_order");

    // Integrate on (z, z') and keep only z.
    Eigen::Vector4d x;
    x << z0, zdot0;
    const Trajectory full = integrate_linear(m, x, 4, Representation::SecondOrder2, cfg);
    Trajectory t = make_trajectory(Representation::SecondOrder2, 2, cfg);
    t.source = "second_order";
    t.times = full.times;
    for (std::size_t k = 0; k < full.size(); ++k) {
        const auto s = full.state(k);
        t.values.push_back(s[0]);
        t.values.push_back(s[1]);
    }
    return t;
}

NormSeries norm_series(const Trajectory& t) {
    if (t.representation == Representation::SecondOrder2) {
        throw WrongRepresentation("norm_series: second-order trajectory has no probability norm");
    }
    NormSeries out;
    out.times = t.times;
    out.norms2.reserve(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
        const auto s = t.state(k);
        out.norms2.push_back(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3]);
    }
    return out;
}

}  // namespace geophase
