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

#include <vector>

#include "entverify/diagram.hpp"
#include "entverify/linalg.hpp"

namespace entverify::algebra {

// A finite-dimensional C*-algebra presented as an ordered direct sum of
// matrix factors B(C^{d_1}) (+) ... (+) B(C^{d_m}).
struct MultimatrixAlgebra {
  std::vector<int> factors;

  MultimatrixAlgebra() = default;
  explicit MultimatrixAlgebra(std::vector<int> f);

  int num_factors() const { return static_cast<int>(factors.size()); }
  int factor_dim(int i) const { return factors[i]; }
  // dim(A) = sum_i d_i^2
  int total_dimension() const;
  // Total dimension of the vectorized element space (same number).
  int element_vector_dim() const { return total_dimension(); }

  // The splitting wire X: [1] -> [m] with dims (d_1, ..., d_m).
  diagram::OneMorphism splitting() const;

  // The n-dimensional commutative algebra [n].
  static MultimatrixAlgebra classical(int n);
  // B(C^d) as a single factor.
  static MultimatrixAlgebra full_matrix(int d);

  bool operator==(const MultimatrixAlgebra& o) const { return factors == o.factors; }
};

struct AlgebraElement {
  MultimatrixAlgebra algebra;
  std::vector<Matrix> blocks;

  AlgebraElement() = default;
  AlgebraElement(MultimatrixAlgebra a, std::vector<Matrix> b);

  static AlgebraElement zero(const MultimatrixAlgebra& a);
  static AlgebraElement identity(const MultimatrixAlgebra& a);
};

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const AlgebraElement& x, Complex c);
AlgebraElement adjoint(const AlgebraElement& x);
double distance(const AlgebraElement& x, const AlgebraElement& y);

// Matrix trace sum_i Tr(x_i) and the special trace sum_i d_i Tr(x_i).
Complex matrix_trace(const AlgebraElement& x);
Complex special_trace(const AlgebraElement& x);

// Row-major vectorization of an element, blocks concatenated in factor order.
Vector vectorize(const AlgebraElement& x);
AlgebraElement unvectorize(const MultimatrixAlgebra& a, const Vector& v);

// A bipartite state of B(H1) (x) B(H2). A pure state is stored as the map
// omega: H1 -> H2 of its minimal dilation, normalized so that
// Tr(omega^dag omega) = (h1 h2)^{-1/2}. A mixed state is an explicit convex
// combination of pure components.
struct PureComponent {
  double weight;
  Matrix omega;  // h2 x h1
};

struct ResourceState {
  enum class Kind { pure, mixed };
  Kind kind = Kind::pure;
  int h1 = 1, h2 = 1;
  Matrix omega;                          // pure payload
  std::vector<PureComponent> components; // mixed payload

  bool is_pure() const { return kind == Kind::pure; }
};

// Factories; the checked variants throw when the dilation normalization is
// violated beyond tol.
ResourceState pure_state(const Matrix& omega, double tolerance = tol::diagram);
ResourceState pure_state_renormalized(const Matrix& omega);
ResourceState mixed_state(int h1, int h2, std::vector<PureComponent> components,
                          double tolerance = tol::diagram);

// The canonical maximally entangled state of C^d (x) C^d: omega = (1/d) I.
ResourceState canonical_max_entangled(int d);

// Density matrix on B(H2 (x) H1) with unit matrix trace (one factor of
// dimension h2*h1); inverse reconstructs the spectral convex decomposition.
AlgebraElement state_to_density(const ResourceState& w);
ResourceState density_to_state(const AlgebraElement& rho, int h1, int h2,
                               double rank_cutoff = tol::rank_cutoff,
                               double tolerance = tol::diagram);

// Density reordered onto H1 (x) H2, for superoperator plumbing.
Matrix density_on_h1h2(const ResourceState& w);

// omega = iota . omega_bar . q with iota an isometry (h2 x r), omega_bar
// invertible (r x r) and q a coisometry (r x h1); r is the numerical rank.
struct OmegaSplit {
  Matrix iota;
  Matrix omega_bar;
  Matrix q;
  int rank = 0;
};
OmegaSplit omega_svd_split(const ResourceState& w, double rank_cutoff = tol::rank_cutoff);

// A random alternative convex decomposition of the same mixed density
// (ensemble unitary freedom); used to probe decomposition independence.
ResourceState redecompose_mixed(const ResourceState& w, std::mt19937_64& rng);

}  // namespace entverify::algebra
