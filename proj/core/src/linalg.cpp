// Copyright 2026 The entverify developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entverify/linalg.hpp"

#include <stdexcept>

namespace entverify::linalg {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector vec(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unvec: size mismatch");
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  return m;
}

double operator_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double smallest_singular_value(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

Eigen::Index numerical_rank(const Matrix& m, double cutoff) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff * s(0)) ++r;
  return r;
}

Eigensystem hermitian_eigensystem(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigensystem: solver failed");
  Eigensystem sys{es.eigenvalues(), es.eigenvectors()};
  // Fix the phase gauge so serialized decompositions are reproducible.
  for (Eigen::Index k = 0; k < sys.vectors.cols(); ++k) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < sys.vectors.rows(); ++i) {
      double a = std::abs(sys.vectors(i, k));
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    if (best > 0.0) {
      Complex z = sys.vectors(imax, k);
      sys.vectors.col(k) *= std::conj(z) / std::abs(z);
    }
  }
  return sys;
}

double min_hermitian_eigenvalue(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  return es.eigenvalues()(0);
}

double max_hermitian_eigenvalue(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  return es.eigenvalues()(es.eigenvalues().size() - 1);
}

bool is_positive_semidefinite(const Matrix& m, double rel_tol) {
  if (m.rows() == 0) return true;
  double lo = min_hermitian_eigenvalue(m);
  double hi = std::max(1.0, std::abs(max_hermitian_eigenvalue(m)));
  return lo >= -rel_tol * hi;
}

Matrix sqrt_psd(const Matrix& m) {
  if (m.rows() == 0) return m;
  Eigensystem es = hermitian_eigensystem(m);
  RealVector s = es.values.cwiseMax(0.0).cwiseSqrt();
  return es.vectors * s.asDiagonal() * es.vectors.adjoint();
}

Matrix inverse_sqrt_positive(const Matrix& m, double cutoff) {
  if (m.rows() == 0) return m;
  Eigensystem es = hermitian_eigensystem(m);
  double top = es.values(es.values.size() - 1);
  RealVector s(es.values.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (es.values(i) <= cutoff * std::max(top, 1.0))
      throw std::domain_error("inverse_sqrt_positive: matrix not positive definite");
    s(i) = 1.0 / std::sqrt(es.values(i));
  }
  return es.vectors * s.asDiagonal() * es.vectors.adjoint();
}

Matrix partial_trace_first(const Matrix& m, Eigen::Index dim_a, Eigen::Index dim_b) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b)
    throw std::invalid_argument("partial_trace_first: dimension mismatch");
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (Eigen::Index a = 0; a < dim_a; ++a)
    out += m.block(a * dim_b, a * dim_b, dim_b, dim_b);
  return out;
}

Matrix partial_trace_second(const Matrix& m, Eigen::Index dim_a, Eigen::Index dim_b) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b)
    throw std::invalid_argument("partial_trace_second: dimension mismatch");
  Matrix out = Matrix::Zero(dim_a, dim_a);
  for (Eigen::Index i = 0; i < dim_a; ++i)
    for (Eigen::Index j = 0; j < dim_a; ++j) {
      Complex s = 0.0;
      for (Eigen::Index b = 0; b < dim_b; ++b) s += m(i * dim_b + b, j * dim_b + b);
      out(i, j) = s;
    }
  return out;
}

Vector eta_vector(Eigen::Index d) {
  Vector v = Vector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) v(i * d + i) = 1.0;
  return v;
}

Matrix swap_matrix(Eigen::Index dim_a, Eigen::Index dim_b) {
  Matrix s = Matrix::Zero(dim_a * dim_b, dim_a * dim_b);
  for (Eigen::Index a = 0; a < dim_a; ++a)
    for (Eigen::Index b = 0; b < dim_b; ++b) s(b * dim_a + a, a * dim_b + b) = 1.0;
  return s;
}

Vector solve_least_squares(const Matrix& a, const Vector& b) {
  if (a.rows() == 0 || a.cols() == 0) return Vector::Zero(a.cols());
  return a.completeOrthogonalDecomposition().solve(b);
}

Matrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

Matrix random_unitary(std::mt19937_64& rng, Eigen::Index d) {
  Matrix g = random_matrix(rng, d, d);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal phases so the distribution is Haar.
  for (Eigen::Index i = 0; i < d; ++i) {
    Complex z = r(i, i);
    double a = std::abs(z);
    q.col(i) *= (a > 0.0) ? z / a : Complex(1.0, 0.0);
  }
  return q;
}

Matrix random_density(std::mt19937_64& rng, Eigen::Index d) {
  Matrix g = random_matrix(rng, d, d);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

}  // namespace entverify::linalg
