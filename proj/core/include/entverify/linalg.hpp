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

#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace entverify {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
// Construction-level residuals (exact identities up to floating-point noise).
inline constexpr double construct = 1e-10;
// Module-wide default for diagram identities.
inline constexpr double diagram = 1e-9;
// Verdict tolerance for classification predicates; looser to absorb
// accumulation through long composites.
inline constexpr double verdict = 1e-8;
// Relative singular-value cutoff for numerical rank decisions.
inline constexpr double rank_cutoff = 1e-10;
}  // namespace tol

namespace linalg {

// Kronecker product, row-major multi-index convention:
// (A (x) B)[(i,k),(j,l)] = A[i,j] * B[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

// Row-major vectorization: vec(M)[i*cols + j] = M(i, j), so that
// vec(A X B^T) = (A (x) B) vec(X).
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

// Largest singular value; the operator norm used for all residuals.
double operator_norm(const Matrix& m);

// Smallest singular value (0 for empty matrices).
double smallest_singular_value(const Matrix& m);

// Number of singular values above cutoff * s_max.
Eigen::Index numerical_rank(const Matrix& m, double cutoff = tol::rank_cutoff);

// Hermitian eigendecomposition with the phase of each eigenvector fixed so
// its largest-magnitude entry is real positive. Eigenvalues ascending.
struct Eigensystem {
  RealVector values;
  Matrix vectors;  // columns
};
Eigensystem hermitian_eigensystem(const Matrix& m);

// min / max eigenvalue of (m + m^dag)/2.
double min_hermitian_eigenvalue(const Matrix& m);
double max_hermitian_eigenvalue(const Matrix& m);

bool is_positive_semidefinite(const Matrix& m, double rel_tol = tol::diagram);

// Positive square root / inverse square root of a positive (semi)definite
// Hermitian matrix. inverse_sqrt throws if an eigenvalue is below cutoff.
Matrix sqrt_psd(const Matrix& m);
Matrix inverse_sqrt_positive(const Matrix& m, double cutoff = tol::rank_cutoff);

// Partial trace over the first (dim_a) or second (dim_b) tensor factor of a
// matrix on C^{dim_a} (x) C^{dim_b}.
Matrix partial_trace_first(const Matrix& m, Eigen::Index dim_a, Eigen::Index dim_b);
Matrix partial_trace_second(const Matrix& m, Eigen::Index dim_a, Eigen::Index dim_b);

// Unnormalized maximally entangled column vector sum_i |i,i> on C^d (x) C^d.
Vector eta_vector(Eigen::Index d);

// Permutation matrix for swapping tensor factors: S (x (x) y) = y (x) x.
Matrix swap_matrix(Eigen::Index dim_a, Eigen::Index dim_b);

// Least-squares solution of A x = b.
Vector solve_least_squares(const Matrix& a, const Vector& b);

// Deterministic pseudo-random test data.
Matrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols);
Matrix random_unitary(std::mt19937_64& rng, Eigen::Index d);
Matrix random_density(std::mt19937_64& rng, Eigen::Index d);

}  // namespace linalg
}  // namespace entverify
