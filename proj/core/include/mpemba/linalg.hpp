#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace mpemba {

using Complex = std::complex<double>;

// Dense 4x4 complex matrix, row-major, basis order |00>,|01>,|10>,|11>.
struct Matrix4 {
  std::array<Complex, 16> e{};

  Complex& operator()(std::size_t row, std::size_t col) { return e[4 * row + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return e[4 * row + col]; }

  static Matrix4 zero() { return Matrix4{}; }
  static Matrix4 identity();

  Matrix4& operator+=(const Matrix4& rhs);
  Matrix4& operator-=(const Matrix4& rhs);
  Matrix4& operator*=(Complex s);

  friend bool operator==(const Matrix4&, const Matrix4&) = default;
};

Matrix4 operator+(Matrix4 lhs, const Matrix4& rhs);
Matrix4 operator-(Matrix4 lhs, const Matrix4& rhs);
Matrix4 operator*(Complex s, Matrix4 m);
Matrix4 operator*(const Matrix4& lhs, const Matrix4& rhs);

Matrix4 adjoint(const Matrix4& m);
Matrix4 conjugate(const Matrix4& m);
Complex trace(const Matrix4& m);

// Largest |m(i,j) - conj(m(j,i))|.
double hermiticity_error(const Matrix4& m);
double max_abs_diff(const Matrix4& lhs, const Matrix4& rhs);

struct HermitianEigen {
  std::array<double, 4> values{};  // ascending
  Matrix4 vectors;                 // columns are eigenvectors
};

// Cyclic complex Jacobi rotations. The input must be Hermitian; only its
// upper triangle is read. Throws Error(EigenFailure) if the off-diagonal norm
// does not fall below 1e-12 (relative to the Frobenius norm) in max_sweeps.
HermitianEigen hermitian_eigen(const Matrix4& m, int max_sweeps = 50);

// Principal square root of a Hermitian positive semi-definite matrix.
// Eigenvalues within round-off of zero are clamped before the root.
Matrix4 psd_sqrt(const Matrix4& m);

}  // namespace mpemba
