#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "geophase/complex_linalg.hpp"
#include "geophase/decomplexify.hpp"

namespace geophase {

struct IntegratorConfig {
    double step = 1e-3;
    double duration = 1.0;
    int record_stride = 1;

    /// Throws InvalidParameter unless 0 < step <= duration and stride >= 1.
    void validate() const;
    std::size_t step_count() const;
    /// floor(duration / step / stride) + 1.
    std::size_t sample_count() const;
};

/// At least 1000 steps per period of the fastest mode.
double default_step(double spectral_radius);

enum class Representation { Complex2, Real4, SecondOrder2 };

const char* to_string(Representation rep);
Representation representation_from_string(const std::string& name);

/// Uniformly sampled states. Complex2 and Real4 samples are stored as (x1, y1, x2, y2),
/// i.e. (Re Psi1, Im Psi1, Re Psi2, Im Psi2); SecondOrder2 samples as (z1, z2).
struct Trajectory {
    Representation representation = Representation::Complex2;
    std::size_t dim = 4;
    double step = 0.0;
    int record_stride = 1;
    std::vector<double> times;
    std::vector<double> values;
    std::string source;
    std::map<std::string, double> parameters;

    std::size_t size() const { return times.size(); }
    double spacing() const { return step * record_stride; }
    std::span<const double> state(std::size_t k) const {
        return {values.data() + k * dim, dim};
    }
    /// Throws WrongRepresentation for SecondOrder2.
    ComplexVector2 psi(std::size_t k) const;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

struct NormSeries {
    std::vector<double> times;
    std::vector<double> norms2;
};

/// Classical fourth-order Runge-Kutta on Psi' = -i H Psi.
/// Throws StepTooLarge when step * spectral_radius(H) > 0.1.
Trajectory integrate_schrodinger(const ComplexMatrix2& h, const ComplexVector2& psi0,
                                 const IntegratorConfig& cfg);

Trajectory integrate_real4(const RealSystem4& sys, const Eigen::Vector4d& state0,
                           const IntegratorConfig& cfg);

/// Integrates z'' = D z' - K z as a first-order system on (z, z').
/// The step guard uses the spectral radius of that first-order system.
Trajectory integrate_second_order(const SecondOrderSystem& sys, const Eigen::Vector2d& z0,
                                  const Eigen::Vector2d& zdot0, const IntegratorConfig& cfg);

/// |Psi1|^2 + |Psi2|^2 per sample. Throws WrongRepresentation for SecondOrder2.
NormSeries norm_series(const Trajectory& t);

/// Companion matrix [[0, I], [-K, D]] of a second-order system.
Eigen::Matrix4d first_order_matrix(const SecondOrderSystem& sys);

}  // namespace geophase
