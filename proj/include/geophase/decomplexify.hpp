#pragma once

#include <Eigen/Dense>

#include "geophase/complex_linalg.hpp"

namespace geophase {

/// H = B + iA entrywise: b_mat holds Re H_ij, a_mat holds Im H_ij.
struct RealSplit {
    Eigen::Matrix2d a_mat = Eigen::Matrix2d::Zero();
    Eigen::Matrix2d b_mat = Eigen::Matrix2d::Zero();

    ComplexMatrix2 reassemble() const;
};

/// First-order real flow on (x1, y1, x2, y2) with Psi = x + iy.
struct RealSystem4 {
    Eigen::Matrix4d evo = Eigen::Matrix4d::Zero();
};

/// Which half of the state the second-order equation evolves.
/// Voltage tags circuit equations that do not come from a Hamiltonian.
enum class SecondOrderVariable { X, Y, Voltage };

/// z'' = damping z' - stiffness z.
struct SecondOrderSystem {
    Eigen::Matrix2d damping = Eigen::Matrix2d::Zero();
    Eigen::Matrix2d stiffness = Eigen::Matrix2d::Zero();
    SecondOrderVariable variable = SecondOrderVariable::X;
};

RealSplit split(const ComplexMatrix2& h);

/// Rows (g11, f11, g12, f12), (-f11, g11, -f12, g12), (g21, f21, g22, f22), (-f21, g21, -f22, g22).
RealSystem4 real4(const ComplexMatrix2& h);

/// Second-order form for x or y. Both obey
///   z'' = (A + B A B^-1) z' - (B A B^-1 A + B B) z
/// since -i Psi is again a solution; the initial slope comes from the first-order
/// system (see initial_derivative). Throws SingularB when |det B| <= 1e-12 ||B||^2.
SecondOrderSystem second_order(const RealSplit& rs, SecondOrderVariable which);

/// x'(0) = A x(0) + B y(0) for X, y'(0) = A y(0) - B x(0) for Y.
Eigen::Vector2d initial_derivative(const RealSplit& rs, SecondOrderVariable which,
                                   const Eigen::Vector2d& x0, const Eigen::Vector2d& y0);

/// Packs Psi into (x1, y1, x2, y2).
Eigen::Vector4d to_real4(const ComplexVector2& psi);
ComplexVector2 from_real4(const Eigen::Vector4d& state);

}  // namespace geophase
