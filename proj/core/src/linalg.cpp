#include "mpemba/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mpemba/error.hpp"

namespace mpemba {

Matrix4 Matrix4::identity() {
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Matrix4& Matrix4::operator+=(const Matrix4& rhs) {
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += rhs.e[k];
  return *this;
}

Matrix4& Matrix4::operator-=(const Matrix4& rhs) {
  for (std::size_t k = 0; k < e.size(); ++k) e[k] -= rhs.e[k];
  return *this;
}

Matrix4& Matrix4::operator*=(Complex s) {
  for (auto& x : e) x *= s;
  return *this;
}

Matrix4 operator+(Matrix4 lhs, const Matrix4& rhs) { return lhs += rhs; }
Matrix4 operator-(Matrix4 lhs, const Matrix4& rhs) { return lhs -= rhs; }
Matrix4 operator*(Complex s, Matrix4 m) { return m *= s; }

Matrix4 operator*(const Matrix4& lhs, const Matrix4& rhs) {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      const Complex l = lhs(i, k);
      if (l == Complex{}) continue;
      for (std::size_t j = 0; j < 4; ++j) out(i, j) += l * rhs(k, j);
    }
  }
  return out;
}

Matrix4 adjoint(const Matrix4& m) {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

Matrix4 conjugate(const Matrix4& m) {
  Matrix4 out;
  for (std::size_t k = 0; k < 16; ++k) out.e[k] = std::conj(m.e[k]);
  return out;
}

Complex trace(const Matrix4& m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }

double hermiticity_error(const Matrix4& m) {
  double err = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) err = std::max(err, std::abs(m(i, j) - std::conj(m(j, i))));
  return err;
}

double max_abs_diff(const Matrix4& lhs, const Matrix4& rhs) {
  double err = 0.0;
  for (std::size_t k = 0; k < 16; ++k) err = std::max(err, std::abs(lhs.e[k] - rhs.e[k]));
  return err;
}

namespace {

double off_diagonal_norm(const Matrix4& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) s += std::norm(m(i, j));
  return std::sqrt(2.0 * s);
}

double frobenius_norm(const Matrix4& m) {
  double s = 0.0;
  for (const auto& x : m.e) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen(const Matrix4& input, int max_sweeps) {
  // Symmetrize from the upper triangle so round-off in the lower half is ignored.
  Matrix4 a;
  for (std::size_t i = 0; i < 4; ++i) {
    a(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < 4; ++j) {
      a(i, j) = input(i, j);
      a(j, i) = std::conj(input(i, j));
    }
  }
  Matrix4 v = Matrix4::identity();

  const double scale = frobenius_norm(a);
  const double threshold = 1e-14 * std::max(scale, 1e-300);

  bool converged = off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        // Phase-rotate so the pivot is real, then apply a real Jacobi rotation.
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // Unitary acting on columns p, q: J = [[c, s*phase], [-s*conj(phase), c]].
        const Complex jpp = c;
        const Complex jpq = s * phase;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c;
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) throw Error(ErrorKind::EigenFailure, "Jacobi sweeps did not converge");

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigen out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < 4; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

Matrix4 psd_sqrt(const Matrix4& m) {
  const HermitianEigen eig = hermitian_eigen(m);
  Matrix4 out;
  for (std::size_t k = 0; k < 4; ++k) {
    const double root = std::sqrt(std::max(eig.values[k], 0.0));
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        out(i, j) += root * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  return out;
}

}  // namespace mpemba
