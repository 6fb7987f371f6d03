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

#include "entverify/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace entverify::algebra {

MultimatrixAlgebra::MultimatrixAlgebra(std::vector<int> f) : factors(std::move(f)) {
  if (factors.empty()) throw std::invalid_argument("MultimatrixAlgebra: needs >= 1 factor");
  for (int d : factors)
    if (d < 1) throw std::invalid_argument("MultimatrixAlgebra: factor dims must be >= 1");
}

int MultimatrixAlgebra::total_dimension() const {
  int s = 0;
  for (int d : factors) s += d * d;
  return s;
}

diagram::OneMorphism MultimatrixAlgebra::splitting() const {
  return diagram::OneMorphism::splitting(factors);
}

MultimatrixAlgebra MultimatrixAlgebra::classical(int n) {
  return MultimatrixAlgebra(std::vector<int>(n, 1));
}

MultimatrixAlgebra MultimatrixAlgebra::full_matrix(int d) {
  return MultimatrixAlgebra(std::vector<int>{d});
}

AlgebraElement::AlgebraElement(MultimatrixAlgebra a, std::vector<Matrix> b)
    : algebra(std::move(a)), blocks(std::move(b)) {
  if (static_cast<int>(blocks.size()) != algebra.num_factors())
    throw std::invalid_argument("AlgebraElement: block count mismatch");
  for (int i = 0; i < algebra.num_factors(); ++i)
    if (blocks[i].rows() != algebra.factor_dim(i) || blocks[i].cols() != algebra.factor_dim(i))
      throw std::invalid_argument("AlgebraElement: block " + std::to_string(i) +
                                  " is not square of the factor dimension");
}

AlgebraElement AlgebraElement::zero(const MultimatrixAlgebra& a) {
  std::vector<Matrix> b;
  for (int d : a.factors) b.push_back(Matrix::Zero(d, d));
  return AlgebraElement(a, std::move(b));
}

AlgebraElement AlgebraElement::identity(const MultimatrixAlgebra& a) {
  std::vector<Matrix> b;
  for (int d : a.factors) b.push_back(Matrix::Identity(d, d));
  return AlgebraElement(a, std::move(b));
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.algebra == y.algebra)) throw std::invalid_argument("multiply: algebra mismatch");
  std::vector<Matrix> b;
  for (std::size_t i = 0; i < x.blocks.size(); ++i) b.push_back(x.blocks[i] * y.blocks[i]);
  return AlgebraElement(x.algebra, std::move(b));
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.algebra == y.algebra)) throw std::invalid_argument("add: algebra mismatch");
  std::vector<Matrix> b;
  for (std::size_t i = 0; i < x.blocks.size(); ++i) b.push_back(x.blocks[i] + y.blocks[i]);
  return AlgebraElement(x.algebra, std::move(b));
}

AlgebraElement scale(const AlgebraElement& x, Complex c) {
  std::vector<Matrix> b;
  for (const auto& m : x.blocks) b.push_back(c * m);
  return AlgebraElement(x.algebra, std::move(b));
}

AlgebraElement adjoint(const AlgebraElement& x) {
  std::vector<Matrix> b;
  for (const auto& m : x.blocks) b.push_back(m.adjoint());
  return AlgebraElement(x.algebra, std::move(b));
}

double distance(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.algebra == y.algebra)) throw std::invalid_argument("distance: algebra mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < x.blocks.size(); ++i)
    m = std::max(m, linalg::operator_norm(x.blocks[i] - y.blocks[i]));
  return m;
}

Complex matrix_trace(const AlgebraElement& x) {
  Complex t = 0.0;
  for (const auto& m : x.blocks) t += m.trace();
  return t;
}

Complex special_trace(const AlgebraElement& x) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < x.blocks.size(); ++i)
    t += static_cast<double>(x.algebra.factors[i]) * x.blocks[i].trace();
  return t;
}

Vector vectorize(const AlgebraElement& x) {
  Vector v(x.algebra.element_vector_dim());
  Eigen::Index off = 0;
  for (const auto& m : x.blocks) {
    v.segment(off, m.size()) = linalg::vec(m);
    off += m.size();
  }
  return v;
}

AlgebraElement unvectorize(const MultimatrixAlgebra& a, const Vector& v) {
  if (v.size() != a.element_vector_dim())
    throw std::invalid_argument("unvectorize: vector length mismatch");
  std::vector<Matrix> blocks;
  Eigen::Index off = 0;
  for (int d : a.factors) {
    blocks.push_back(linalg::unvec(v.segment(off, d * d), d, d));
    off += d * d;
  }
  return AlgebraElement(a, std::move(blocks));
}

namespace {

double pure_norm_target(int h1, int h2) {
  return 1.0 / std::sqrt(static_cast<double>(h1) * static_cast<double>(h2));
}

void check_pure_normalization(const Matrix& omega, double tolerance) {
  const int h2 = static_cast<int>(omega.rows());
  const int h1 = static_cast<int>(omega.cols());
  double t = (omega.adjoint() * omega).trace().real();
  if (std::abs(t - pure_norm_target(h1, h2)) > tolerance)
    throw std::invalid_argument(
        "pure state: trace(omega^dag omega) must equal (h1 h2)^{-1/2}");
}

}  // namespace

ResourceState pure_state(const Matrix& omega, double tolerance) {
  if (omega.size() == 0) throw std::invalid_argument("pure state: empty omega");
  check_pure_normalization(omega, tolerance);
  ResourceState w;
  w.kind = ResourceState::Kind::pure;
  w.h2 = static_cast<int>(omega.rows());
  w.h1 = static_cast<int>(omega.cols());
  w.omega = omega;
  return w;
}

ResourceState pure_state_renormalized(const Matrix& omega) {
  double t = (omega.adjoint() * omega).trace().real();
  if (t <= 0.0) throw std::invalid_argument("pure state: omega is zero");
  const int h2 = static_cast<int>(omega.rows());
  const int h1 = static_cast<int>(omega.cols());
  return pure_state(omega * std::sqrt(pure_norm_target(h1, h2) / t));
}

ResourceState mixed_state(int h1, int h2, std::vector<PureComponent> components,
                          double tolerance) {
  if (components.empty()) throw std::invalid_argument("mixed state: needs >= 1 component");
  double total = 0.0;
  for (const auto& c : components) {
    if (c.weight <= 0.0) throw std::invalid_argument("mixed state: weights must be positive");
    if (c.omega.rows() != h2 || c.omega.cols() != h1)
      throw std::invalid_argument("mixed state: component shape mismatch");
    check_pure_normalization(c.omega, tolerance);
    total += c.weight;
  }
  if (std::abs(total - 1.0) > tolerance)
    throw std::invalid_argument("mixed state: weights must sum to 1");
  ResourceState w;
  w.kind = ResourceState::Kind::mixed;
  w.h1 = h1;
  w.h2 = h2;
  w.components = std::move(components);
  return w;
}

ResourceState canonical_max_entangled(int d) {
  if (d < 1) throw std::invalid_argument("canonical_max_entangled: d >= 1 required");
  return pure_state(Matrix::Identity(d, d) / static_cast<double>(d));
}

namespace {

Matrix pure_density(const Matrix& omega) {
  const double scale =
      std::sqrt(static_cast<double>(omega.rows()) * static_cast<double>(omega.cols()));
  Vector v = linalg::vec(omega);  // lives on H2 (x) H1
  return scale * (v * v.adjoint());
}

}  // namespace

AlgebraElement state_to_density(const ResourceState& w) {
  Matrix rho = Matrix::Zero(w.h2 * w.h1, w.h2 * w.h1);
  if (w.is_pure()) {
    rho = pure_density(w.omega);
  } else {
    for (const auto& c : w.components) rho += c.weight * pure_density(c.omega);
  }
  return AlgebraElement(MultimatrixAlgebra::full_matrix(w.h2 * w.h1), {rho});
}

ResourceState density_to_state(const AlgebraElement& rho_el, int h1, int h2, double rank_cutoff,
                               double tolerance) {
  if (rho_el.algebra.num_factors() != 1 || rho_el.algebra.factor_dim(0) != h1 * h2)
    throw std::invalid_argument("density_to_state: expected one factor of dimension h2*h1");
  const Matrix& rho = rho_el.blocks[0];
  double lo = linalg::min_hermitian_eigenvalue(rho);
  if (lo < -1e-9) throw std::invalid_argument("density_to_state: density is not PSD");
  if (std::abs(rho.trace().real() - 1.0) > tolerance ||
      std::abs(rho.trace().imag()) > tolerance)
    throw std::invalid_argument("density_to_state: density must have unit matrix trace");

  linalg::Eigensystem es = linalg::hermitian_eigensystem(rho);
  const double top = es.values(es.values.size() - 1);
  const double norm_target = 1.0 / std::pow(static_cast<double>(h1) * h2, 0.25);
  std::vector<PureComponent> comps;
  double total = 0.0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    double lam = es.values(k);
    if (lam <= rank_cutoff * std::max(top, 1.0)) continue;
    PureComponent c;
    c.weight = lam;
    c.omega = norm_target * linalg::unvec(es.vectors.col(k), h2, h1);
    comps.push_back(std::move(c));
    total += lam;
  }
  if (comps.empty()) throw std::invalid_argument("density_to_state: zero density");
  for (auto& c : comps) c.weight /= total;
  if (comps.size() == 1) return pure_state(comps[0].omega, tolerance);
  return mixed_state(h1, h2, std::move(comps), tolerance);
}

Matrix density_on_h1h2(const ResourceState& w) {
  const Matrix rho21 = state_to_density(w).blocks[0];
  const Matrix s = linalg::swap_matrix(w.h2, w.h1);  // maps H2 (x) H1 to H1 (x) H2
  return s * rho21 * s.adjoint();
}

OmegaSplit omega_svd_split(const ResourceState& w, double rank_cutoff) {
  if (!w.is_pure()) throw std::invalid_argument("omega_svd_split: state must be pure");
  Eigen::JacobiSVD<Matrix> svd(w.omega, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 0.0) throw std::invalid_argument("omega_svd_split: omega is zero");
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rank_cutoff * s(0)) ++r;
  if (r == 0) throw std::invalid_argument("omega_svd_split: omega is zero");

  OmegaSplit out;
  out.rank = r;
  out.iota = svd.matrixU().leftCols(r);
  out.omega_bar = Matrix::Zero(r, r);
  for (int i = 0; i < r; ++i) out.omega_bar(i, i) = s(i);
  out.q = svd.matrixV().leftCols(r).adjoint();
  return out;
}

ResourceState redecompose_mixed(const ResourceState& w, std::mt19937_64& rng) {
  std::vector<PureComponent> comps;
  if (w.is_pure()) {
    comps.push_back({1.0, w.omega});
  } else {
    comps = w.components;
  }
  const int k = static_cast<int>(comps.size());
  // Ensemble freedom: mixing the weighted component vectors by an isometry
  // of ensembles preserves the density.
  const int k2 = k + 1;  // allow the decomposition size to change
  Matrix u = linalg::random_unitary(rng, k2);
  std::vector<PureComponent> out;
  for (int a = 0; a < k2; ++a) {
    Matrix om = Matrix::Zero(w.h2, w.h1);
    for (int b = 0; b < k; ++b) om += u(a, b) * std::sqrt(comps[b].weight) * comps[b].omega;
    double t = (om.adjoint() * om).trace().real();
    double target = 1.0 / std::sqrt(static_cast<double>(w.h1) * static_cast<double>(w.h2));
    double weight = t / target;
    if (weight < 1e-14) continue;
    out.push_back({weight, om / std::sqrt(weight)});
  }
  double tot = 0.0;
  for (auto& c : out) tot += c.weight;
  for (auto& c : out) c.weight /= tot;
  if (out.size() == 1) return pure_state(out[0].omega);
  return mixed_state(w.h1, w.h2, std::move(out));
}

}  // namespace entverify::algebra
