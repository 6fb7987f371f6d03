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

#include <functional>
#include <string>
#include <vector>

#include "entverify/linalg.hpp"

namespace entverify::diagram {

// A 1-morphism [m] -> [n]: an m x n matrix of Hilbert-space dimensions,
// one family member V_{ij} per pair of region indices.
struct OneMorphism {
  Eigen::MatrixXi dims;

  OneMorphism() = default;
  explicit OneMorphism(Eigen::MatrixXi d);

  int left() const { return static_cast<int>(dims.rows()); }
  int right() const { return static_cast<int>(dims.cols()); }
  int dim(int i, int j) const { return dims(i, j); }

  OneMorphism dual() const;     // V*: [n] -> [m], dims transposed
  bool is_identity() const;     // square with the 1-on-diagonal pattern

  // id_[m]: the invisible identity wire on the index set [m].
  static OneMorphism identity(int m);
  // A single unshaded Hilbert space of dimension d ([1] -> [1]).
  static OneMorphism simple(int d);
  // A splitting wire [1] -> [m] with the given factor dimensions.
  static OneMorphism splitting(const std::vector<int>& factor_dims);

  bool operator==(const OneMorphism& o) const { return dims == o.dims; }
};

using Chain = std::vector<OneMorphism>;

// Chain of composable wires; throws if ill-formed or empty.
void validate_chain(const Chain& chain);
int chain_left(const Chain& chain);
int chain_right(const Chain& chain);
Chain dual_chain(const Chain& chain);  // reversed, each wire dualized

// An element of End(id_[m]): one scalar per region index.
struct EndoScalarFamily {
  Vector values;

  EndoScalarFamily() = default;
  explicit EndoScalarFamily(Vector v) : values(std::move(v)) {}
  static EndoScalarFamily constant(int m, Complex c);

  int index() const { return static_cast<int>(values.size()); }
  EndoScalarFamily pointwise_product(const EndoScalarFamily& o) const;
  EndoScalarFamily sqrt() const;     // componentwise principal square root
  EndoScalarFamily inverse() const;  // throws on zero component
  EndoScalarFamily pow(double e) const;
};

// A 2-morphism: an indexed family of linear maps between composable chains.
//
// The regions adjoining a box with p source wires and q target wires are
// ordered canonically as
//   slot 0        : left outer region
//   slots 1..p-1  : regions between consecutive source wires, left to right
//   slot p        : right outer region
//   slots p+1..p+q-1 : regions between consecutive target wires, left to right
// and assignments are enumerated row-major over this slot order (last slot
// varies fastest). Blocks with a zero-dimensional source or target are the
// unique empty matrix of that shape.
class BlockMap {
 public:
  BlockMap() = default;
  BlockMap(Chain source, Chain target);  // zero-initialized blocks

  const Chain& source() const { return src_; }
  const Chain& target() const { return tgt_; }
  int left_index() const { return left_; }
  int right_index() const { return right_; }

  int num_slots() const { return static_cast<int>(region_sizes_.size()); }
  const std::vector<int>& region_sizes() const { return region_sizes_; }
  int slot_left() const { return 0; }
  int slot_source_inner(int t) const { return t; }  // 1 <= t <= p-1
  int slot_right() const { return static_cast<int>(src_.size()); }
  int slot_target_inner(int s) const { return static_cast<int>(src_.size()) + s; }

  Eigen::Index num_blocks() const { return static_cast<Eigen::Index>(blocks_.size()); }
  const Matrix& block(const std::vector<int>& assignment) const;
  Matrix& block(const std::vector<int>& assignment);
  const Matrix& block_flat(Eigen::Index k) const { return blocks_[k]; }
  Matrix& block_flat(Eigen::Index k) { return blocks_[k]; }

  // Region index of the region touching source wire t on its left/right
  // under the given assignment; likewise for target wires.
  int source_region(const std::vector<int>& a, int t) const;
  int target_region(const std::vector<int>& a, int s) const;
  int source_wire_dim(const std::vector<int>& a, int t) const;
  int target_wire_dim(const std::vector<int>& a, int s) const;
  Eigen::Index block_rows(const std::vector<int>& a) const;
  Eigen::Index block_cols(const std::vector<int>& a) const;

  void for_each_assignment(
      const std::function<void(const std::vector<int>&, Eigen::Index)>& fn) const;

  // For the unshaded case (every region of size 1): the single block.
  const Matrix& sole_block() const;

  bool same_shape(const BlockMap& o) const;

  static BlockMap identity(const Chain& chain);
  static BlockMap zero(const Chain& source, const Chain& target);

 private:
  Chain src_, tgt_;
  int left_ = 1, right_ = 1;
  std::vector<int> region_sizes_;
  std::vector<Eigen::Index> strides_;
  std::vector<Matrix> blocks_;

  void init_regions();
  Eigen::Index flat_index(const std::vector<int>& assignment) const;
};

// Vertical composition g . f (f applied first); closed interface regions are
// summed over. Throws on a source/target chain mismatch naming the first
// offending wire.
BlockMap compose(const BlockMap& g, const BlockMap& f);

// Horizontal juxtaposition f (x) g; requires f's right index set to equal
// g's left index set.
BlockMap tensor(const BlockMap& f, const BlockMap& g);

BlockMap dagger(const BlockMap& f);     // blockwise conjugate transpose
BlockMap transpose(const BlockMap& f);  // pi-rotation
BlockMap conjugate(const BlockMap& f);  // dagger of the transpose

// Right cup eta_V: id_[n] -> V* (x) V and right cap eps_V: V (x) V* -> id_[m];
// the left cup/cap are their daggers.
BlockMap cup(const OneMorphism& v);
BlockMap cap(const OneMorphism& v);

// Left dimension d_V in End(id_[n]) for V: [m] -> [n]; component j is
// sum_i dims(i, j). Throws if some component vanishes.
EndoScalarFamily left_dimension(const OneMorphism& v);

// Linear structure.
BlockMap add(const BlockMap& f, const BlockMap& g);
BlockMap subtract(const BlockMap& f, const BlockMap& g);
BlockMap scale(const BlockMap& f, Complex c);

// Multiply every block by values[a[slot]]; the disc calculus.
BlockMap scale_by_region(const BlockMap& f, int slot, const EndoScalarFamily& values);

// Largest block operator norm, and the distance max_blocks ||f_b - g_b||.
double block_norm(const BlockMap& f);
double distance(const BlockMap& f, const BlockMap& g);

// || f^dag f - id || and || f f^dag - id || in block operator norm.
double isometry_residual(const BlockMap& f);
double coisometry_residual(const BlockMap& f);

// Remove invisible identity wires from the chains (keeping at least one wire
// per chain), merging the adjacent region slots. Blocks are unchanged except
// for dropping the one-dimensional tensor factors.
BlockMap strip_identity_wires(const BlockMap& f);

// View an End(id_[m]) scalar family as a BlockMap on the identity wire.
BlockMap disc_to_blockmap(const EndoScalarFamily& alpha);

}  // namespace entverify::diagram
