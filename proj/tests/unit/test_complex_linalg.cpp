#include <gtest/gtest.h>

#include <random>

#include "geophase/complex_linalg.hpp"
#include "geophase/errors.hpp"

using namespace geophase;

namespace {

ComplexMatrix2 random_matrix(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
}

double residual(const ComplexMatrix2& m, Complex lambda, const ComplexVector2& v) {
    return (m * v - lambda * v).norm();
}

}  // namespace

TEST(Eig2, IdentityIsDegenerate) {
    const EigenSystem2 es = eig2(ComplexMatrix2::identity());
    EXPECT_TRUE(es.degenerate);
    EXPECT_FALSE(es.defective);
    EXPECT_EQ(es.eigenvalue1, Complex(1.0));
    EXPECT_EQ(es.eigenvalue2, Complex(1.0));
    EXPECT_NEAR(std::abs(inner(es.eigenvector1, es.eigenvector2)), 0.0, 1e-15);
}

TEST(Eig2, PauliY) {
    const EigenSystem2 es = eig2({0.0, -kI, kI, 0.0});
    EXPECT_NEAR(std::abs(es.eigenvalue1 - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(es.eigenvalue2 + 1.0), 0.0, 1e-14);
}

TEST(Eig2, PTDimerValues) {
    // a = 1, g = 1, s = 0.6: a +- g sqrt(1 - 0.36)
    const ComplexMatrix2 h{Complex(1.0, 0.6), -kI, kI, Complex(1.0, -0.6)};
    const EigenSystem2 es = eig2(h);
    EXPECT_NEAR(std::abs(es.eigenvalue1 - 1.8), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(es.eigenvalue2 - 0.2), 0.0, 1e-12);
}

TEST(Eig2, JordanBlockIsDefective) {
    const EigenSystem2 es = eig2({2.0, 1.0, 0.0, 2.0});
    EXPECT_TRUE(es.degenerate);
    EXPECT_TRUE(es.defective);
    EXPECT_LT(residual({2.0, 1.0, 0.0, 2.0}, es.eigenvalue1, es.eigenvector1), 1e-14);
}

TEST(Eig2, RandomResidualsTraceDet) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const ComplexMatrix2 m = random_matrix(rng);
        const EigenSystem2 es = eig2(m);
        const double scale = m.norm();
        EXPECT_LT(residual(m, es.eigenvalue1, es.eigenvector1), 1e-10 * scale);
        EXPECT_LT(residual(m, es.eigenvalue2, es.eigenvector2), 1e-10 * scale);
        EXPECT_NEAR(std::abs(es.eigenvalue1 + es.eigenvalue2 - m.trace()), 0.0, 1e-10);
        EXPECT_NEAR(std::abs(es.eigenvalue1 * es.eigenvalue2 - m.det()), 0.0, 1e-10);
        EXPECT_NEAR(es.eigenvector1.norm(), 1.0, 1e-12);
        // ordering: Re descending, then Im descending
        EXPECT_GE(es.eigenvalue1.real(), es.eigenvalue2.real() - 1e-13);
    }
}

TEST(Eig2, PhaseConventionLargestComponentRealPositive) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        const EigenSystem2 es = eig2(random_matrix(rng));
        for (const auto& v : {es.eigenvector1, es.eigenvector2}) {
            const Complex big = std::abs(v.c1) >= std::abs(v.c2) ? v.c1 : v.c2;
            EXPECT_GT(big.real(), 0.0);
            EXPECT_NEAR(big.imag(), 0.0, 1e-15);
        }
    }
}

TEST(Eig2, HermitianEigenvaluesReal) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const ComplexMatrix2 m = random_matrix(rng);
        const ComplexMatrix2 h = m + adjoint(m);
        ASSERT_TRUE(h.is_hermitian());
        const EigenSystem2 es = eig2(h);
        EXPECT_LT(std::abs(es.eigenvalue1.imag()), 1e-12);
        EXPECT_LT(std::abs(es.eigenvalue2.imag()), 1e-12);
    }
}

TEST(Biorthogonal, HermitianIsSelfBiorthogonal) {
    const ComplexMatrix2 h{2.0, Complex(1.0, -3.0), Complex(1.0, 3.0), 2.0};
    const BiorthogonalBasis b = biorthogonal(h);
    for (int n = 0; n < 2; ++n) EXPECT_LT(phase_distance(b.left[n], b.right[n]), 1e-12);
}

TEST(Biorthogonal, PTDimerOverlapMatrix) {
    const ComplexMatrix2 h{Complex(0.0, 0.5), -kI, kI, Complex(0.0, -0.5)};
    const BiorthogonalBasis b = biorthogonal(h);
    EXPECT_NEAR(std::abs(inner(b.left[0], b.right[1])), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(inner(b.left[1], b.right[0])), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(inner(b.left[0], b.right[0]) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(inner(b.left[1], b.right[1]) - 1.0), 0.0, 1e-12);
}

TEST(Biorthogonal, RandomIdentityOverlap) {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 500; ++i) {
        const ComplexMatrix2 m = random_matrix(rng);
        const BiorthogonalBasis b = biorthogonal(m);
        for (int n = 0; n < 2; ++n) {
            for (int k = 0; k < 2; ++k) {
                EXPECT_NEAR(std::abs(inner(b.left[n], b.right[k]) - (n == k ? 1.0 : 0.0)), 0.0, 1e-10);
            }
        }
    }
}

TEST(Biorthogonal, ExceptionalPointThrows) {
    const ComplexMatrix2 h{kI, -kI, kI, -kI};  // s = g = 1
    EXPECT_THROW(biorthogonal(h), ExceptionalPoint);
}

TEST(Adjoint, DefinitionAndInvolution) {
    const ComplexMatrix2 m{0.0, -kI, 0.5 * kI, 0.0};
    const ComplexMatrix2 want{0.0, -0.5 * kI, kI, 0.0};
    EXPECT_EQ(adjoint(m), want);
    std::mt19937_64 rng(15);
    for (int i = 0; i < 100; ++i) {
        const ComplexMatrix2 r = random_matrix(rng);
        EXPECT_EQ(adjoint(adjoint(r)), r);
    }
    const ComplexMatrix2 h{2.0, Complex(1.0, -3.0), Complex(1.0, 3.0), 2.0};
    EXPECT_EQ(adjoint(h), h);
}

TEST(Vector, NormalizedAndPhaseDistance) {
    const ComplexVector2 v = ComplexVector2{Complex(3.0, 1.0), Complex(-2.0, 0.5)}.normalized();
    EXPECT_LT(std::abs(v.norm2() - 1.0), 1e-12);
    EXPECT_LT(phase_distance(v, std::polar(1.0, 0.7) * v), 1e-12);
    EXPECT_GT(phase_distance(v, ComplexVector2{v.c2, v.c1}), 1e-3);
}
