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

#include <optional>
#include <vector>

#include "entverify/algebra.hpp"
#include "entverify/diagram.hpp"

namespace entverify::channel {

using algebra::AlgebraElement;
using algebra::MultimatrixAlgebra;
using algebra::ResourceState;

enum class TraceConvention { matrix, special };

// A completely positive map between multimatrix algebras, stored as one Choi
// block per factor pair. With aux_dim h >= 1 the map is A (x) B(H) -> B, the
// auxiliary Hilbert space being the first tensor slot of each source factor;
// aux_dim 0 means a plain map A -> B. Block (i, j) is the Choi matrix of the
// component map B(H (x) X_i) -> B(Y_j),
//   choi(i, j) = sum_{s s'} F_ij(|s><s'|) (x) |s><s'| ,
// of size e_j * h * d_i. The declared trace convention records which trace
// the channel is meant to preserve; paper-facing predicates normalize their
// dilations against it.
class Channel {
 public:
  Channel(MultimatrixAlgebra source, MultimatrixAlgebra target, int aux_dim,
          std::vector<std::vector<Matrix>> choi_blocks,
          TraceConvention convention = TraceConvention::matrix);

  const MultimatrixAlgebra& source() const { return source_; }
  const MultimatrixAlgebra& target() const { return target_; }
  int aux_dim() const { return aux_dim_; }
  int aux_dim_effective() const { return aux_dim_ == 0 ? 1 : aux_dim_; }
  TraceConvention convention() const { return convention_; }
  const Matrix& choi(int i, int j) const { return choi_[i][j]; }
  Matrix& choi(int i, int j) { return choi_[i][j]; }

  Eigen::Index source_block_dim(int i) const {
    return static_cast<Eigen::Index>(aux_dim_effective()) * source_.factor_dim(i);
  }

  static Channel identity(const MultimatrixAlgebra& a,
                          TraceConvention convention = TraceConvention::matrix);
  // From per-block Kraus families: kraus[i][j] is a list of e_j x (h d_i)
  // matrices; F_ij(rho) = sum_k K rho K^dag.
  static Channel from_kraus(MultimatrixAlgebra source, MultimatrixAlgebra target, int aux_dim,
                            const std::vector<std::vector<std::vector<Matrix>>>& kraus,
                            TraceConvention convention = TraceConvention::matrix);

 private:
  MultimatrixAlgebra source_, target_;
  int aux_dim_ = 0;
  TraceConvention convention_ = TraceConvention::matrix;
  std::vector<std::vector<Matrix>> choi_;
};

struct CpReport {
  bool cp = false;
  // Per block (i, j): smallest eigenvalue of choi(i,j) divided by the block
  // input dimension h*d_i (the normalized Choi).
  std::vector<std::vector<double>> normalized_min_eigenvalues;
  double worst = 0.0;  // most negative normalized eigenvalue over all blocks
};
CpReport is_cp(const Channel& c, double rel_tol = tol::diagram);

struct TpReport {
  bool tp = false;
  TraceConvention convention = TraceConvention::matrix;
  double residual = 0.0;  // || sum_j w_ij Tr_out choi(i,j) - 1 || worst case
  // Residual of the trace-preservation isometry built on the special-trace
  // normalized minimal dilation (the dilation-theoretic cross-check).
  double dilation_isometry_residual = 0.0;
};
TpReport is_trace_preserving(const Channel& c, TraceConvention convention,
                             double tolerance = tol::diagram);

// A Stinespring dilation tau: H (x) X -> Y (x) E of a CP channel, normalized
// for the channel's declared trace convention. env_dims(j, i) = dim E_{ji}.
struct Dilation {
  MultimatrixAlgebra source, target;
  int aux_dim = 0;
  TraceConvention convention = TraceConvention::matrix;
  Eigen::MatrixXi env_dims;
  diagram::BlockMap tau;
  bool minimal = false;
  diagram::BlockMap lambda;  // positive square root of the minimality element

  diagram::OneMorphism environment() const { return diagram::OneMorphism(env_dims); }
  int aux_dim_effective() const { return aux_dim == 0 ? 1 : aux_dim; }
};

Dilation minimal_dilation(const Channel& c, double rank_cutoff = tol::rank_cutoff);
Channel dilation_to_channel(const Dilation& d);

// Rebuild a Dilation around a replacement tau of the same shape family
// (environment possibly padded or rotated); minimality is re-derived.
Dilation dilation_with_tau(const Dilation& base, const diagram::BlockMap& tau,
                           const Eigen::MatrixXi& env_dims);

// The minimality element tilde-tau . tilde-tau^dag in End(E), and its
// smallest eigenvalue over blocks.
diagram::BlockMap minimality_element(const Dilation& d);

struct DilationsRelatedReport {
  bool related = false;
  diagram::BlockMap alpha;  // partial isometry E1 -> E2
  double channel_distance = 0.0;
  double forward_residual = 0.0;   // || (1 (x) alpha) tau1 - tau2 ||
  double backward_residual = 0.0;  // || (1 (x) alpha^dag) tau2 - tau1 ||
  double partial_isometry_residual = 0.0;
};
DilationsRelatedReport dilations_related(const Dilation& d1, const Dilation& d2,
                                         double tolerance = tol::diagram);

// Plain-channel algebra (aux-free unless stated); used as the brute-force
// oracle path throughout.
Channel compose_channels(const Channel& g, const Channel& f);
Channel tensor_channels(const Channel& f, const Channel& g);
AlgebraElement apply(const Channel& c, const AlgebraElement& x);
AlgebraElement apply(const Channel& c, const AlgebraElement& x, const Matrix& aux_density);
Matrix as_superoperator(const Channel& c);

// Reinterpret A (x) B(H) -> B as an aux-free channel whose source factors are
// H (x) X_i (identical Choi data).
Channel flatten_aux(const Channel& c);

// W as a channel C -> B(H1 (x) H2) (single target factor, H1 first).
Channel state_channel(const ResourceState& w);

// Per-factor conjugation x_i -> U_i x_i U_i^dag; target factor dims may be a
// permuted tensor layout of the source's.
Channel unitary_conjugation_channel(const MultimatrixAlgebra& source,
                                    const MultimatrixAlgebra& target,
                                    const std::vector<Matrix>& unitaries);

// The swap channel B(H1) (x) B(H2) -> B(H2) (x) B(H1) on single-factor form.
Channel swap_channel(int h1, int h2);

// Kraus operators of block (i, j) extracted from a dilation, in the stored
// normalization (rows of tau), and with the convention weight removed (the
// plain Kraus form of the stored linear map).
std::vector<Matrix> dilation_kraus_paper(const Dilation& d, int i, int j);
std::vector<Matrix> dilation_kraus_plain(const Dilation& d, int i, int j);

// Convention weight w_ij: tau_paper = w_ij * tau_plain.
double convention_weight(const Dilation& d, int i, int j);
double convention_weight(TraceConvention convention, int aux_dim_eff, int d_i, int e_j);

}  // namespace entverify::channel
