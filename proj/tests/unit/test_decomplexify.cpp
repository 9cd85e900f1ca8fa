#include <gtest/gtest.h>

#include <random>

#include "geophase/decomplexify.hpp"
#include "geophase/errors.hpp"
#include "geophase/hamiltonian_models.hpp"

using namespace geophase;

TEST(Split, DisplayedExample) {
    const RealSplit rs = split(build_hermitian({2.0, 1.0, 3.0}).matrix());
    Eigen::Matrix2d a;
    a << 0, -3, 3, 0;
    Eigen::Matrix2d b;
    b << 2, 1, 1, 2;
    EXPECT_EQ(rs.a_mat, a);
    EXPECT_EQ(rs.b_mat, b);
}

TEST(Split, Limits) {
    EXPECT_TRUE(split(build_hermitian({1.0, 0.5, 0.0}).matrix()).a_mat.isZero());
    const RealSplit rs = split(ComplexMatrix2{kI, 0.0, 0.0, kI});
    EXPECT_TRUE(rs.b_mat.isZero());
    EXPECT_EQ(rs.a_mat, Eigen::Matrix2d::Identity());
}

TEST(Split, LosslessRoundTrip) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const ComplexMatrix2 h{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        EXPECT_EQ(split(h).reassemble(), h);
    }
}

TEST(Real4, BlockLayout) {
    const ComplexMatrix2 h{Complex(0.1, 0.2), Complex(0.3, 0.4), Complex(0.5, 0.6), Complex(0.7, 0.8)};
    const Eigen::Matrix4d e = real4(h).evo;
    // state (x1, y1, x2, y2): xdot = A x + B y, ydot = A y - B x
    EXPECT_EQ(e(0, 0), 0.2);
    EXPECT_EQ(e(0, 1), 0.1);
    EXPECT_EQ(e(1, 0), -0.1);
    EXPECT_EQ(e(1, 1), 0.2);
    EXPECT_EQ(e(0, 2), 0.4);
    EXPECT_EQ(e(0, 3), 0.3);
    EXPECT_EQ(e(1, 2), -0.3);
    EXPECT_EQ(e(2, 0), 0.6);
    EXPECT_EQ(e(3, 0), -0.5);
    EXPECT_EQ(e(2, 1), 0.5);
    EXPECT_EQ(e(3, 3), 0.8);
    EXPECT_TRUE(real4(ComplexMatrix2{}).evo.isZero());
}

TEST(Real4, MatchesComplexAction) {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const ComplexMatrix2 h{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        const ComplexVector2 psi{{u(rng), u(rng)}, {u(rng), u(rng)}};
        const ComplexVector2 want = Complex(0.0, -1.0) * (h * psi);
        const ComplexVector2 got = from_real4(real4(h).evo * to_real4(psi));
        EXPECT_LT((got - want).norm(), 1e-15);
    }
}

TEST(SecondOrder, CommutingCase) {
    const double g = 0.7;
    const double h = 1.3;
    const RealSplit rs = split(build_hermitian({h, 0.0, g}).matrix());
    const SecondOrderSystem x = second_order(rs, SecondOrderVariable::X);
    Eigen::Matrix2d damping;
    damping << 0, -2 * g, 2 * g, 0;  // 2A with A = Im H
    EXPECT_TRUE(x.damping.isApprox(2.0 * rs.a_mat, 1e-15));
    EXPECT_TRUE(x.damping.isApprox(damping, 1e-15));
    EXPECT_TRUE(x.stiffness.isApprox((h * h - g * g) * Eigen::Matrix2d::Identity(), 1e-14));
}

TEST(SecondOrder, InductiveLimit) {
    const RealSplit rs = split(build_hermitian({1.0, 0.4, 0.0}).matrix());
    for (const auto which : {SecondOrderVariable::X, SecondOrderVariable::Y}) {
        const SecondOrderSystem s = second_order(rs, which);
        EXPECT_TRUE(s.damping.isZero());
        EXPECT_TRUE(s.stiffness.isApprox(rs.b_mat * rs.b_mat, 1e-15));
    }
}

TEST(SecondOrder, SingularB) {
    EXPECT_THROW(second_order(split(build_hermitian({0.0, 0.0, 1.0}).matrix()), SecondOrderVariable::X),
                 SingularB);
    EXPECT_THROW(second_order(split(ComplexMatrix2{kI, 0.0, 0.0, kI}), SecondOrderVariable::Y), SingularB);
    EXPECT_THROW(second_order(split(ComplexMatrix2::identity()), SecondOrderVariable::Voltage), InvalidParameter);
}

TEST(SecondOrder, InitialDerivativeRule) {
    const RealSplit rs = split(build_hermitian({1.0, 0.4, 0.3}).matrix());
    const Eigen::Vector2d x0{0.6, -0.1};
    const Eigen::Vector2d y0{0.2, 0.5};
    EXPECT_TRUE(initial_derivative(rs, SecondOrderVariable::X, x0, y0)
                    .isApprox(rs.a_mat * x0 + rs.b_mat * y0, 1e-15));
    EXPECT_TRUE(initial_derivative(rs, SecondOrderVariable::Y, x0, y0)
                    .isApprox(rs.a_mat * y0 - rs.b_mat * x0, 1e-15));
}

// Both x and y obey the same second-order equation: the flow's generator L satisfies
// L^2 - D L + K = 0 on either component.
TEST(SecondOrder, ComponentsShareEquation) {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const ComplexMatrix2 h{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        const RealSplit rs = split(h);
        if (std::abs(rs.b_mat.determinant()) < 1e-2) continue;
        const Eigen::Vector2d x0{u(rng), u(rng)};
        const Eigen::Vector2d y0{u(rng), u(rng)};
        const Eigen::Matrix2d& a = rs.a_mat;
        const Eigen::Matrix2d& b = rs.b_mat;
        const Eigen::Vector2d xd = a * x0 + b * y0;
        const Eigen::Vector2d yd = a * y0 - b * x0;
        const Eigen::Vector2d xdd = a * xd + b * yd;
        const Eigen::Vector2d ydd = a * yd - b * xd;
        const SecondOrderSystem sx = second_order(rs, SecondOrderVariable::X);
        const SecondOrderSystem sy = second_order(rs, SecondOrderVariable::Y);
        EXPECT_LT((xdd - (sx.damping * xd - sx.stiffness * x0)).norm(), 1e-12);
        EXPECT_LT((ydd - (sy.damping * yd - sy.stiffness * y0)).norm(), 1e-12);
    }
}
