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

#include <random>

#include "entverify/diagram.hpp"

namespace entverify::testing {

inline diagram::OneMorphism random_one_morphism(std::mt19937_64& rng, int m, int n, int max_dim,
                                                bool allow_zero = false) {
  std::uniform_int_distribution<int> d(allow_zero ? 0 : 1, max_dim);
  Eigen::MatrixXi dims(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) dims(i, j) = d(rng);
  return diagram::OneMorphism(dims);
}

inline diagram::BlockMap random_block_map(std::mt19937_64& rng, const diagram::Chain& src,
                                          const diagram::Chain& tgt) {
  diagram::BlockMap f(src, tgt);
  f.for_each_assignment([&](const std::vector<int>& a, Eigen::Index flat) {
    f.block_flat(flat) = linalg::random_matrix(rng, f.block_rows(a), f.block_cols(a));
  });
  return f;
}

}  // namespace entverify::testing
