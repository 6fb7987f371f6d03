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

#include "entverify/diagram.hpp"

#include <numeric>
#include <stdexcept>

namespace entverify::diagram {

namespace {

std::vector<int> decode_multi(Eigen::Index flat, const std::vector<int>& dims) {
  std::vector<int> idx(dims.size());
  for (Eigen::Index k = static_cast<Eigen::Index>(dims.size()) - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(flat % dims[k]);
    flat /= dims[k];
  }
  return idx;
}

Eigen::Index encode_multi(const std::vector<int>& idx, const std::vector<int>& dims) {
  Eigen::Index flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + idx[k];
  return flat;
}

// Matrix transpose combined with reversal of the tensor-factor order on both
// sides: the component form of the pi-rotation.
Matrix transpose_reverse(const Matrix& m, const std::vector<int>& tgt_dims,
                         const std::vector<int>& src_dims) {
  std::vector<int> rev_t(tgt_dims.rbegin(), tgt_dims.rend());
  std::vector<int> rev_s(src_dims.rbegin(), src_dims.rend());
  Matrix out(m.cols(), m.rows());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::vector<int> ti = decode_multi(r, tgt_dims);
    std::vector<int> tir(ti.rbegin(), ti.rend());
    Eigen::Index oc = encode_multi(tir, rev_t);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::vector<int> si = decode_multi(c, src_dims);
      std::vector<int> sir(si.rbegin(), si.rend());
      out(encode_multi(sir, rev_s), oc) = m(r, c);
    }
  }
  return out;
}

}  // namespace

OneMorphism::OneMorphism(Eigen::MatrixXi d) : dims(std::move(d)) {
  if (dims.rows() < 1 || dims.cols() < 1)
    throw std::invalid_argument("OneMorphism: index sets must be nonempty");
  if ((dims.array() < 0).any())
    throw std::invalid_argument("OneMorphism: dimensions must be nonnegative");
}

OneMorphism OneMorphism::dual() const { return OneMorphism(dims.transpose()); }

bool OneMorphism::is_identity() const {
  if (dims.rows() != dims.cols()) return false;
  for (int i = 0; i < dims.rows(); ++i)
    for (int j = 0; j < dims.cols(); ++j)
      if (dims(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

OneMorphism OneMorphism::identity(int m) {
  Eigen::MatrixXi d = Eigen::MatrixXi::Identity(m, m);
  return OneMorphism(d);
}

OneMorphism OneMorphism::simple(int d) {
  Eigen::MatrixXi m(1, 1);
  m(0, 0) = d;
  return OneMorphism(m);
}

OneMorphism OneMorphism::splitting(const std::vector<int>& factor_dims) {
  Eigen::MatrixXi m(1, static_cast<int>(factor_dims.size()));
  for (std::size_t j = 0; j < factor_dims.size(); ++j) m(0, static_cast<int>(j)) = factor_dims[j];
  return OneMorphism(m);
}

void validate_chain(const Chain& chain) {
  if (chain.empty()) throw std::invalid_argument("chain: must contain at least one wire");
  for (std::size_t t = 0; t + 1 < chain.size(); ++t)
    if (chain[t].right() != chain[t + 1].left())
      throw std::invalid_argument("chain: wires " + std::to_string(t) + " and " +
                                  std::to_string(t + 1) + " are not composable");
}

int chain_left(const Chain& chain) { return chain.front().left(); }
int chain_right(const Chain& chain) { return chain.back().right(); }

Chain dual_chain(const Chain& chain) {
  Chain out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.push_back(it->dual());
  return out;
}

EndoScalarFamily EndoScalarFamily::constant(int m, Complex c) {
  return EndoScalarFamily(Vector::Constant(m, c));
}

EndoScalarFamily EndoScalarFamily::pointwise_product(const EndoScalarFamily& o) const {
  if (values.size() != o.values.size())
    throw std::invalid_argument("EndoScalarFamily: index set mismatch");
  return EndoScalarFamily(values.cwiseProduct(o.values));
}

EndoScalarFamily EndoScalarFamily::sqrt() const {
  Vector v = values;
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = std::sqrt(v(i));
  return EndoScalarFamily(v);
}

EndoScalarFamily EndoScalarFamily::inverse() const {
  Vector v = values;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) == 0.0)
      throw std::domain_error("EndoScalarFamily: component is zero, not invertible");
    v(i) = 1.0 / v(i);
  }
  return EndoScalarFamily(v);
}

EndoScalarFamily EndoScalarFamily::pow(double e) const {
  Vector v = values;
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = std::pow(v(i), Complex(e, 0.0));
  return EndoScalarFamily(v);
}

BlockMap::BlockMap(Chain source, Chain target) : src_(std::move(source)), tgt_(std::move(target)) {
  validate_chain(src_);
  validate_chain(tgt_);
  if (chain_left(src_) != chain_left(tgt_) || chain_right(src_) != chain_right(tgt_))
    throw std::invalid_argument("BlockMap: source and target chains must share outer index sets");
  left_ = chain_left(src_);
  right_ = chain_right(src_);
  init_regions();
}

void BlockMap::init_regions() {
  const int p = static_cast<int>(src_.size());
  const int q = static_cast<int>(tgt_.size());
  region_sizes_.clear();
  region_sizes_.push_back(left_);
  for (int t = 1; t < p; ++t) region_sizes_.push_back(src_[t].left());
  region_sizes_.push_back(right_);
  for (int s = 1; s < q; ++s) region_sizes_.push_back(tgt_[s].left());

  strides_.assign(region_sizes_.size(), 1);
  for (int k = static_cast<int>(region_sizes_.size()) - 2; k >= 0; --k)
    strides_[k] = strides_[k + 1] * region_sizes_[k + 1];
  Eigen::Index total = strides_.empty() ? 1 : strides_[0] * region_sizes_[0];

  blocks_.resize(total);
  for_each_assignment([&](const std::vector<int>& assign, Eigen::Index flat) {
    blocks_[flat] = Matrix::Zero(block_rows(assign), block_cols(assign));
  });
}

Eigen::Index BlockMap::flat_index(const std::vector<int>& a) const {
  if (a.size() != region_sizes_.size())
    throw std::invalid_argument("BlockMap: assignment arity mismatch");
  Eigen::Index flat = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < 0 || a[k] >= region_sizes_[k])
      throw std::out_of_range("BlockMap: region index out of range");
    flat += strides_[k] * a[k];
  }
  return flat;
}

const Matrix& BlockMap::block(const std::vector<int>& a) const { return blocks_[flat_index(a)]; }
Matrix& BlockMap::block(const std::vector<int>& a) { return blocks_[flat_index(a)]; }

int BlockMap::source_region(const std::vector<int>& a, int t) const {
  const int p = static_cast<int>(src_.size());
  if (t == 0) return a[0];
  if (t == p) return a[p];
  return a[t];
}

int BlockMap::target_region(const std::vector<int>& a, int s) const {
  const int p = static_cast<int>(src_.size());
  const int q = static_cast<int>(tgt_.size());
  if (s == 0) return a[0];
  if (s == q) return a[p];
  return a[p + s];
}

int BlockMap::source_wire_dim(const std::vector<int>& a, int t) const {
  return src_[t].dim(source_region(a, t), source_region(a, t + 1));
}

int BlockMap::target_wire_dim(const std::vector<int>& a, int s) const {
  return tgt_[s].dim(target_region(a, s), target_region(a, s + 1));
}

Eigen::Index BlockMap::block_rows(const std::vector<int>& a) const {
  Eigen::Index r = 1;
  for (int s = 0; s < static_cast<int>(tgt_.size()); ++s) r *= target_wire_dim(a, s);
  return r;
}

Eigen::Index BlockMap::block_cols(const std::vector<int>& a) const {
  Eigen::Index c = 1;
  for (int t = 0; t < static_cast<int>(src_.size()); ++t) c *= source_wire_dim(a, t);
  return c;
}

void BlockMap::for_each_assignment(
    const std::function<void(const std::vector<int>&, Eigen::Index)>& fn) const {
  std::vector<int> a(region_sizes_.size(), 0);
  Eigen::Index flat = 0;
  const Eigen::Index total = static_cast<Eigen::Index>(blocks_.size());
  while (flat < total) {
    fn(a, flat);
    ++flat;
    for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) {
      if (++a[k] < region_sizes_[k]) break;
      a[k] = 0;
    }
  }
}

const Matrix& BlockMap::sole_block() const {
  if (blocks_.size() != 1)
    throw std::logic_error("BlockMap: sole_block requires a fully unshaded map");
  return blocks_[0];
}

bool BlockMap::same_shape(const BlockMap& o) const {
  return src_ == o.src_ && tgt_ == o.tgt_;
}

BlockMap BlockMap::identity(const Chain& chain) {
  BlockMap f(chain, chain);
  const int p = static_cast<int>(chain.size());
  f.for_each_assignment([&](const std::vector<int>& a, Eigen::Index flat) {
    bool diag = true;
    for (int t = 1; t < p; ++t)
      if (a[t] != a[p + t]) diag = false;
    if (diag) {
      Eigen::Index n = f.block_cols(a);
      f.blocks_[flat] = Matrix::Identity(n, n);
    }
  });
  return f;
}

BlockMap BlockMap::zero(const Chain& source, const Chain& target) {
  return BlockMap(source, target);
}

BlockMap compose(const BlockMap& g, const BlockMap& f) {
  const Chain& mid_f = f.target();
  const Chain& mid_g = g.source();
  if (mid_f.size() != mid_g.size())
    throw std::invalid_argument("compose: interface chain lengths differ");
  for (std::size_t t = 0; t < mid_f.size(); ++t)
    if (!(mid_f[t] == mid_g[t]))
      throw std::invalid_argument("compose: interface mismatch at wire " + std::to_string(t));

  BlockMap out(f.source(), g.target());
  const int p = static_cast<int>(f.source().size());
  const int r = static_cast<int>(mid_f.size());
  const int q = static_cast<int>(g.target().size());

  // Closed regions: the r-1 inner regions of the interface chain.
  std::vector<int> closed_sizes;
  for (int t = 1; t < r; ++t) closed_sizes.push_back(mid_f[t].left());
  Eigen::Index n_closed = 1;
  for (int s : closed_sizes) n_closed *= s;

  out.for_each_assignment([&](const std::vector<int>& a, Eigen::Index flat) {
    Matrix acc = Matrix::Zero(out.block_rows(a), out.block_cols(a));
    std::vector<int> f_assign(p + r), g_assign(r + q);
    for (Eigen::Index cflat = 0; cflat < n_closed; ++cflat) {
      std::vector<int> b =
          closed_sizes.empty() ? std::vector<int>{} : decode_multi(cflat, closed_sizes);
      f_assign[0] = a[0];
      for (int t = 1; t < p; ++t) f_assign[t] = a[t];
      f_assign[p] = a[p];
      for (int t = 1; t < r; ++t) f_assign[p + t] = b[t - 1];
      g_assign[0] = a[0];
      for (int t = 1; t < r; ++t) g_assign[t] = b[t - 1];
      g_assign[r] = a[p];
      for (int s = 1; s < q; ++s) g_assign[r + s] = a[p + s];
      const Matrix& gb = g.block(g_assign);
      const Matrix& fb = f.block(f_assign);
      if (gb.cols() != fb.rows())
        throw std::logic_error("compose: internal block dimension mismatch");
      if (gb.cols() == 0) continue;  // sum over an empty middle space
      acc.noalias() += gb * fb;
    }
    out.block_flat(flat) = std::move(acc);
  });
  return out;
}

BlockMap tensor(const BlockMap& f, const BlockMap& g) {
  if (f.right_index() != g.left_index())
    throw std::invalid_argument("tensor: region index sets do not match at the junction");
  Chain src = f.source();
  src.insert(src.end(), g.source().begin(), g.source().end());
  Chain tgt = f.target();
  tgt.insert(tgt.end(), g.target().begin(), g.target().end());

  BlockMap out(src, tgt);
  const int pf = static_cast<int>(f.source().size());
  const int pg = static_cast<int>(g.source().size());
  const int qf = static_cast<int>(f.target().size());
  const int qg = static_cast<int>(g.target().size());
  const int p = pf + pg;
  const int jsrc_slot = pf;          // junction between the source chains
  const int jtgt_slot = p + qf;      // junction between the target chains

  out.for_each_assignment([&](const std::vector<int>& a, Eigen::Index flat) {
    if (a[jsrc_slot] != a[jtgt_slot]) return;  // disconnected junction: zero block
    const int j = a[jsrc_slot];
    std::vector<int> fa(pf + qf), ga(pg + qg);
    fa[0] = a[0];
    for (int t = 1; t < pf; ++t) fa[t] = a[t];
    fa[pf] = j;
    for (int s = 1; s < qf; ++s) fa[pf + s] = a[p + s];
    ga[0] = j;
    for (int t = 1; t < pg; ++t) ga[t] = a[pf + t];
    ga[pg] = a[p];
    for (int s = 1; s < qg; ++s) ga[pg + s] = a[p + qf + s];
    out.block_flat(flat) = linalg::kron(f.block(fa), g.block(ga));
  });
  return out;
}

BlockMap dagger(const BlockMap& f) {
  BlockMap out(f.target(), f.source());
  const int p = static_cast<int>(f.source().size());
  const int q = static_cast<int>(f.target().size());
  out.for_each_assignment([&](const std::vector<int>& a, Eigen::Index flat) {
    std::vector<int> fa(p + q);
    fa[0] = a[0];
    fa[p] = a[q];
    for (int t = 1; t < p; ++t) fa[t] = a[q + t];
    for (int s = 1; s < q; ++s) fa[p + s] = a[s];
    out.block_flat(flat) = f.block(fa).adjoint();
  });
  return out;
}

BlockMap transpose(const BlockMap& f) {
  const int p = static_cast<int>(f.source().size());
  const int q = static_cast<int>(f.target().size());
  BlockMap out(dual_chain(f.target()), dual_chain(f.source()));
  out.for_each_assignment([&](const std::vector<int>& a, Eigen::Index flat) {
    // out slots: [left' (=old right), q-1 duals of old target inners reversed,
    //             right' (=old left), p-1 duals of old source inners reversed]
    std::vector<int> fa(p + q);
    fa[0] = a[q];
    fa[p] = a[0];
    for (int t = 1; t < p; ++t) fa[t] = a[q + (p - t)];
    for (int s = 1; s < q; ++s) fa[p + s] = a[q - s];
    std::vector<int> tdims(q), sdims(p);
    for (int s = 0; s < q; ++s) tdims[s] = f.target_wire_dim(fa, s);
    for (int t = 0; t < p; ++t) sdims[t] = f.source_wire_dim(fa, t);
    out.block_flat(flat) = transpose_reverse(f.block(fa), tdims, sdims);
  });
  return out;
}

BlockMap conjugate(const BlockMap& f) { return dagger(transpose(f)); }

BlockMap cup(const OneMorphism& v) {
  const int n = v.right();
  BlockMap out({OneMorphism::identity(n)}, {v.dual(), v});
  out.for_each_assignment([&](const std::vector<int>& a, Eigen::Index flat) {
    // a = (i: left [n], k: right [n], j: target inner [m])
    if (a[0] != a[1]) return;
    const int d = v.dim(a[2], a[0]);
    if (d == 0) return;
    out.block_flat(flat) = linalg::eta_vector(d);
  });
  return out;
}

BlockMap cap(const OneMorphism& v) {
  const int m = v.left();
  BlockMap out({v, v.dual()}, {OneMorphism::identity(m)});
  out.for_each_assignment([&](const std::vector<int>& a, Eigen::Index flat) {
    // a = (i: left [m], j: source inner [n], k: right [m])
    if (a[0] != a[2]) return;
    const int d = v.dim(a[0], a[1]);
    if (d == 0) return;
    out.block_flat(flat) = linalg::eta_vector(d).transpose();
  });
  return out;
}

EndoScalarFamily left_dimension(const OneMorphism& v) {
  Vector d(v.right());
  for (int j = 0; j < v.right(); ++j) {
    int s = 0;
    for (int i = 0; i < v.left(); ++i) s += v.dim(i, j);
    if (s == 0)
      throw std::domain_error("left_dimension: component " + std::to_string(j) +
                              " vanishes, d_V not invertible");
    d(j) = static_cast<double>(s);
  }
  return EndoScalarFamily(d);
}

BlockMap add(const BlockMap& f, const BlockMap& g) {
  if (!f.same_shape(g)) throw std::invalid_argument("add: shape mismatch");
  BlockMap out = f;
  for (Eigen::Index k = 0; k < out.num_blocks(); ++k) out.block_flat(k) += g.block_flat(k);
  return out;
}

BlockMap subtract(const BlockMap& f, const BlockMap& g) {
  if (!f.same_shape(g)) throw std::invalid_argument("subtract: shape mismatch");
  BlockMap out = f;
  for (Eigen::Index k = 0; k < out.num_blocks(); ++k) out.block_flat(k) -= g.block_flat(k);
  return out;
}

BlockMap scale(const BlockMap& f, Complex c) {
  BlockMap out = f;
  for (Eigen::Index k = 0; k < out.num_blocks(); ++k) out.block_flat(k) *= c;
  return out;
}

BlockMap scale_by_region(const BlockMap& f, int slot, const EndoScalarFamily& values) {
  if (slot < 0 || slot >= f.num_slots())
    throw std::invalid_argument("scale_by_region: slot out of range");
  if (values.index() != f.region_sizes()[slot])
    throw std::invalid_argument("scale_by_region: family size does not match region");
  BlockMap out = f;
  out.for_each_assignment([&](const std::vector<int>& a, Eigen::Index flat) {
    out.block_flat(flat) *= values.values(a[slot]);
  });
  return out;
}

double block_norm(const BlockMap& f) {
  double m = 0.0;
  for (Eigen::Index k = 0; k < f.num_blocks(); ++k)
    m = std::max(m, linalg::operator_norm(f.block_flat(k)));
  return m;
}

double distance(const BlockMap& f, const BlockMap& g) {
  if (!f.same_shape(g)) throw std::invalid_argument("distance: shape mismatch");
  double m = 0.0;
  for (Eigen::Index k = 0; k < f.num_blocks(); ++k)
    m = std::max(m, linalg::operator_norm(f.block_flat(k) - g.block_flat(k)));
  return m;
}

double isometry_residual(const BlockMap& f) {
  return distance(compose(dagger(f), f), BlockMap::identity(f.source()));
}

double coisometry_residual(const BlockMap& f) {
  return distance(compose(f, dagger(f)), BlockMap::identity(f.target()));
}

namespace {

struct StripPlan {
  Chain kept;
  std::vector<int> slot_group;  // old side-slot (0..len) -> new side-slot (0..len')
};

StripPlan plan_strip(const Chain& chain) {
  StripPlan plan;
  std::vector<bool> keep(chain.size());
  int kept_count = 0;
  for (std::size_t t = 0; t < chain.size(); ++t) {
    keep[t] = !chain[t].is_identity();
    if (keep[t]) ++kept_count;
  }
  if (kept_count == 0) keep[0] = true;
  plan.slot_group.resize(chain.size() + 1);
  plan.slot_group[0] = 0;
  int g = 0;
  for (std::size_t t = 0; t < chain.size(); ++t) {
    if (keep[t]) {
      plan.kept.push_back(chain[t]);
      ++g;
    }
    plan.slot_group[t + 1] = g;
  }
  return plan;
}

}  // namespace

BlockMap strip_identity_wires(const BlockMap& f) {
  StripPlan sp = plan_strip(f.source());
  StripPlan tp = plan_strip(f.target());
  const int p = static_cast<int>(f.source().size());
  const int q = static_cast<int>(f.target().size());
  const int np = static_cast<int>(sp.kept.size());

  BlockMap out(sp.kept, tp.kept);
  out.for_each_assignment([&](const std::vector<int>& a, Eigen::Index flat) {
    // Reconstruct the old assignment: every old slot takes the value of the
    // new slot representing its merged group.
    std::vector<int> fa(p + q);
    fa[0] = a[0];
    fa[p] = a[np];
    for (int t = 1; t < p; ++t) {
      int g = sp.slot_group[t];
      fa[t] = (g == 0) ? a[0] : (g == np ? a[np] : a[g]);
    }
    for (int s = 1; s < q; ++s) {
      int g = tp.slot_group[s];
      int nq = static_cast<int>(tp.kept.size());
      fa[p + s] = (g == 0) ? a[0] : (g == nq ? a[np] : a[np + g]);
    }
    out.block_flat(flat) = f.block(fa);
  });
  return out;
}

BlockMap disc_to_blockmap(const EndoScalarFamily& alpha) {
  const int m = alpha.index();
  Chain id_chain{OneMorphism::identity(m)};
  BlockMap out(id_chain, id_chain);
  out.for_each_assignment([&](const std::vector<int>& a, Eigen::Index flat) {
    if (a[0] != a[1]) return;
    Matrix b(1, 1);
    b(0, 0) = alpha.values(a[0]);
    out.block_flat(flat) = b;
  });
  return out;
}

}  // namespace entverify::diagram
