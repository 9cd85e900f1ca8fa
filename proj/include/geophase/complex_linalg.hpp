#pragma once

#include <array>
#include <complex>

namespace geophase {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Two-component state (Psi_1, Psi_2).
struct ComplexVector2 {
    Complex c1{};
    Complex c2{};

    double norm2() const { return std::norm(c1) + std::norm(c2); }
    double norm() const;
    ComplexVector2 normalized() const;
    bool is_finite() const;

    Complex& operator[](int i) { return i == 0 ? c1 : c2; }
    const Complex& operator[](int i) const { return i == 0 ? c1 : c2; }

    friend bool operator==(const ComplexVector2&, const ComplexVector2&) = default;
};

ComplexVector2 operator+(const ComplexVector2& u, const ComplexVector2& v);
ComplexVector2 operator-(const ComplexVector2& u, const ComplexVector2& v);
ComplexVector2 operator*(Complex z, const ComplexVector2& v);

/// <bra|ket>, antilinear in the first argument.
Complex inner(const ComplexVector2& bra, const ComplexVector2& ket);

ComplexVector2 conj(const ComplexVector2& v);

/// Smallest ||u - e^{ia} v|| over the global phase a.
double phase_distance(const ComplexVector2& u, const ComplexVector2& v);

struct ComplexMatrix2 {
    Complex h11{};
    Complex h12{};
    Complex h21{};
    Complex h22{};

    static ComplexMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static ComplexMatrix2 diagonal(Complex d1, Complex d2) { return {d1, 0.0, 0.0, d2}; }

    Complex trace() const { return h11 + h22; }
    Complex det() const { return h11 * h22 - h12 * h21; }
    /// Frobenius norm.
    double norm() const;
    double spectral_radius() const;
    bool is_finite() const;
    /// h11, h22 real and h21 = conj(h12) within tol * max(1, ||m||).
    bool is_hermitian(double tol = 1e-12) const;

    friend bool operator==(const ComplexMatrix2&, const ComplexMatrix2&) = default;
};

ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 operator-(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 operator*(Complex z, const ComplexMatrix2& m);
ComplexVector2 operator*(const ComplexMatrix2& m, const ComplexVector2& v);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b);

ComplexMatrix2 adjoint(const ComplexMatrix2& m);
ComplexMatrix2 conj(const ComplexMatrix2& m);

/// Eigenpairs ordered by descending real part, ties broken by descending imaginary part.
/// Eigenvectors have unit norm with their largest-modulus component real and positive.
struct EigenSystem2 {
    Complex eigenvalue1{};
    Complex eigenvalue2{};
    ComplexVector2 eigenvector1{};
    ComplexVector2 eigenvector2{};
    /// |lambda1 - lambda2| < 1e-10 * max(1, ||m||).
    bool degenerate = false;
    /// Degenerate with a single eigenvector; eigenvector2 repeats eigenvector1.
    bool defective = false;
};

EigenSystem2 eig2(const ComplexMatrix2& m);

/// Right eigenvectors of m paired with left eigenvectors (eigenvectors of m^dagger)
/// normalized so that <left_n|right_m> = delta_nm.
struct BiorthogonalBasis {
    std::array<ComplexVector2, 2> right{};
    std::array<ComplexVector2, 2> left{};
    std::array<Complex, 2> eigenvalues{};
};

/// Throws ExceptionalPoint when m is defective.
BiorthogonalBasis biorthogonal(const ComplexMatrix2& m);

}  // namespace geophase
