#include "geophase/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "geophase/errors.hpp"

namespace geophase {

namespace {

constexpr double kDegeneracyTol = 1e-10;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Global ordering: real part descending, then imaginary part descending.
bool precedes(Complex a, Complex b, double scale) {
    const double tie = 1e-13 * scale;
    if (std::abs(a.real() - b.real()) > tie) return a.real() > b.real();
    return a.imag() > b.imag();
}

// Unit norm, largest-modulus component made real and positive. Near-ties keep the first component.
ComplexVector2 fix_phase(const ComplexVector2& v) {
    ComplexVector2 u = v.normalized();
    const bool second = std::abs(u.c2) > std::abs(u.c1) * (1.0 + 1e-12);
    const Complex pivot = second ? u.c2 : u.c1;
    const Complex rot = std::conj(pivot) / std::abs(pivot);
    u = rot * u;
    if (second) {
        u.c2 = {std::abs(u.c2), 0.0};
    } else {
        u.c1 = {std::abs(u.c1), 0.0};
    }
    return u;
}

// Kernel vector of (m - lambda I) from whichever row is better conditioned.
// Returns a zero vector when m - lambda I vanishes to within tol.
ComplexVector2 kernel_vector(const ComplexMatrix2& m, Complex lambda, double tol) {
    const ComplexVector2 from_row1{m.h12, lambda - m.h11};
    const ComplexVector2 from_row2{lambda - m.h22, m.h21};
    const double n1 = from_row1.norm();
    const double n2 = from_row2.norm();
    if (std::max(n1, n2) <= tol) return {};
    return n1 >= n2 ? from_row1 : from_row2;
}

}  // namespace

double ComplexVector2::norm() const { return std::sqrt(norm2()); }

ComplexVector2 ComplexVector2::normalized() const {
    const double n = norm();
    return {c1 / n, c2 / n};
}

bool ComplexVector2::is_finite() const { return finite(c1) && finite(c2); }

ComplexVector2 operator+(const ComplexVector2& u, const ComplexVector2& v) {
    return {u.c1 + v.c1, u.c2 + v.c2};
}

ComplexVector2 operator-(const ComplexVector2& u, const ComplexVector2& v) {
    return {u.c1 - v.c1, u.c2 - v.c2};
}

ComplexVector2 operator*(Complex z, const ComplexVector2& v) { return {z * v.c1, z * v.c2}; }

Complex inner(const ComplexVector2& bra, const ComplexVector2& ket) {
    return std::conj(bra.c1) * ket.c1 + std::conj(bra.c2) * ket.c2;
}

ComplexVector2 conj(const ComplexVector2& v) { return {std::conj(v.c1), std::conj(v.c2)}; }

double phase_distance(const ComplexVector2& u, const ComplexVector2& v) {
    const Complex overlap = inner(v, u);
    const Complex rot = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
    return (u - rot * v).norm();
}

double ComplexMatrix2::norm() const {
    return std::sqrt(std::norm(h11) + std::norm(h12) + std::norm(h21) + std::norm(h22));
}

double ComplexMatrix2::spectral_radius() const {
    const EigenSystem2 es = eig2(*this);
    return std::max(std::abs(es.eigenvalue1), std::abs(es.eigenvalue2));
}

bool ComplexMatrix2::is_finite() const {
    return finite(h11) && finite(h12) && finite(h21) && finite(h22);
}

bool ComplexMatrix2::is_hermitian(double tol) const {
    const double bound = tol * std::max(1.0, norm());
    return std::abs(h11.imag()) <= bound && std::abs(h22.imag()) <= bound &&
           std::abs(h21 - std::conj(h12)) <= bound;
}

ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return {a.h11 + b.h11, a.h12 + b.h12, a.h21 + b.h21, a.h22 + b.h22};
}

ComplexMatrix2 operator-(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return {a.h11 - b.h11, a.h12 - b.h12, a.h21 - b.h21, a.h22 - b.h22};
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return {a.h11 * b.h11 + a.h12 * b.h21, a.h11 * b.h12 + a.h12 * b.h22,
            a.h21 * b.h11 + a.h22 * b.h21, a.h21 * b.h12 + a.h22 * b.h22};
}

ComplexMatrix2 operator*(Complex z, const ComplexMatrix2& m) {
    return {z * m.h11, z * m.h12, z * m.h21, z * m.h22};
}

ComplexVector2 operator*(const ComplexMatrix2& m, const ComplexVector2& v) {
    return {m.h11 * v.c1 + m.h12 * v.c2, m.h21 * v.c1 + m.h22 * v.c2};
}

double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return std::max({std::abs(a.h11 - b.h11), std::abs(a.h12 - b.h12), std::abs(a.h21 - b.h21),
                     std::abs(a.h22 - b.h22)});
}

ComplexMatrix2 adjoint(const ComplexMatrix2& m) {
    return {std::conj(m.h11), std::conj(m.h21), std::conj(m.h12), std::conj(m.h22)};
}

ComplexMatrix2 conj(const ComplexMatrix2& m) {
    return {std::conj(m.h11), std::conj(m.h12), std::conj(m.h21), std::conj(m.h22)};
}

EigenSystem2 eig2(const ComplexMatrix2& m) {
    if (!m.is_finite()) throw InvalidParameter("eig2: non-finite matrix entry");

    const double scale = std::max(1.0, m.norm());
    const double tol = kDegeneracyTol * scale;

    // Roots of lambda^2 - tr(m) lambda + det(m), written around the mean to limit cancellation.
    const Complex mean = 0.5 * (m.h11 + m.h22);
    const Complex half_diff = 0.5 * (m.h11 - m.h22);
    const Complex root = std::sqrt(half_diff * half_diff + m.h12 * m.h21);

    EigenSystem2 es;
    es.eigenvalue1 = mean + root;
    es.eigenvalue2 = mean - root;
    if (precedes(es.eigenvalue2, es.eigenvalue1, scale)) std::swap(es.eigenvalue1, es.eigenvalue2);
    es.degenerate = std::abs(es.eigenvalue1 - es.eigenvalue2) < tol;

    const ComplexVector2 v1 = kernel_vector(m, es.eigenvalue1, tol);
    if (es.degenerate) {
        if (v1.norm() == 0.0) {
            // m is a multiple of the identity: every vector is an eigenvector.
            es.eigenvector1 = {1.0, 0.0};
            es.eigenvector2 = {0.0, 1.0};
        } else {
            es.defective = true;
            es.eigenvector1 = fix_phase(v1);
            es.eigenvector2 = es.eigenvector1;
        }
        return es;
    }

    const ComplexVector2 v2 = kernel_vector(m, es.eigenvalue2, tol);
    es.eigenvector1 = fix_phase(v1);
    es.eigenvector2 = fix_phase(v2);
    return es;
}

BiorthogonalBasis biorthogonal(const ComplexMatrix2& m) {
    const EigenSystem2 right = eig2(m);
    if (right.defective) {
        throw ExceptionalPoint("biorthogonal: operator is defective (exceptional point)");
    }
    const EigenSystem2 left = eig2(adjoint(m));

    BiorthogonalBasis basis;
    basis.eigenvalues = {right.eigenvalue1, right.eigenvalue2};
    basis.right = {right.eigenvector1, right.eigenvector2};

    // The left partner of kappa_n is the eigenvector of m^dagger with eigenvalue conj(kappa_n).
    const Complex k1 = std::conj(right.eigenvalue1);
    const Complex k2 = std::conj(right.eigenvalue2);
    const double direct = std::abs(k1 - left.eigenvalue1) + std::abs(k2 - left.eigenvalue2);
    const double swapped = std::abs(k1 - left.eigenvalue2) + std::abs(k2 - left.eigenvalue1);
    basis.left = {left.eigenvector1, left.eigenvector2};
    if (swapped < direct) std::swap(basis.left[0], basis.left[1]);

    for (int n = 0; n < 2; ++n) {
        const Complex overlap = inner(basis.left[n], basis.right[n]);
        if (std::abs(overlap) < 1e-14) {
            throw ExceptionalPoint("biorthogonal: self-orthogonal eigenvector");
        }
        basis.left[n] = (1.0 / std::conj(overlap)) * basis.left[n];
    }
    return basis;
}

}  // namespace geophase
