#include "geophase/decomplexify.hpp"

#include "geophase/errors.hpp"

namespace geophase {

ComplexMatrix2 RealSplit::reassemble() const {
    return {Complex{b_mat(0, 0), a_mat(0, 0)}, Complex{b_mat(0, 1), a_mat(0, 1)},
            Complex{b_mat(1, 0), a_mat(1, 0)}, Complex{b_mat(1, 1), a_mat(1, 1)}};
}

RealSplit split(const ComplexMatrix2& h) {
    if (!h.is_finite()) throw InvalidParameter("split: non-finite matrix entry");
    RealSplit rs;
    rs.a_mat << h.h11.imag(), h.h12.imag(), h.h21.imag(), h.h22.imag();
    rs.b_mat << h.h11.real(), h.h12.real(), h.h21.real(), h.h22.real();
    return rs;
}

RealSystem4 real4(const ComplexMatrix2& h) {
    const RealSplit rs = split(h);
    const Eigen::Matrix2d& g = rs.a_mat;
    const Eigen::Matrix2d& f = rs.b_mat;
    RealSystem4 sys;
    // clang-format off
    sys.evo <<  g(0, 0), f(0, 0),  g(0, 1), f(0, 1),
               -f(0, 0), g(0, 0), -f(0, 1), g(0, 1),
                g(1, 0), f(1, 0),  g(1, 1), f(1, 1),
               -f(1, 0), g(1, 0), -f(1, 1), g(1, 1);
    // clang-format on
    return sys;
}

SecondOrderSystem second_order(const RealSplit& rs, SecondOrderVariable which) {
    if (which == SecondOrderVariable::Voltage) {
        throw InvalidParameter("second_order: variable must be X or Y");
    }
    const Eigen::Matrix2d& a = rs.a_mat;
    const Eigen::Matrix2d& b = rs.b_mat;
    const double scale = b.squaredNorm();
    if (scale == 0.0 || std::abs(b.determinant()) <= 1e-12 * scale) {
        throw SingularB("second_order: B = Re(H) is not invertible");
    }
    const Eigen::Matrix2d bab_inv = b * a * b.inverse();
    SecondOrderSystem sys;
    sys.damping = a + bab_inv;
    sys.stiffness = bab_inv * a + b * b;
    sys.variable = which;
    return sys;
}

Eigen::Vector2d initial_derivative(const RealSplit& rs, SecondOrderVariable which,
                                   const Eigen::Vector2d& x0, const Eigen::Vector2d& y0) {
    switch (which) {
        case SecondOrderVariable::X: return rs.a_mat * x0 + rs.b_mat * y0;
        case SecondOrderVariable::Y: return rs.a_mat * y0 - rs.b_mat * x0;
        case SecondOrderVariable::Voltage: break;
    }
    throw InvalidParameter("initial_derivative: variable must be X or Y");
}

Eigen::Vector4d to_real4(const ComplexVector2& psi) {
    return {psi.c1.real(), psi.c1.imag(), psi.c2.real(), psi.c2.imag()};
}

ComplexVector2 from_real4(const Eigen::Vector4d& state) {
    return {Complex{state(0), state(1)}, Complex{state(2), state(3)}};
}

}  // namespace geophase
