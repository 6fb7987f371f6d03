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

#include <random>

#include "doctest.h"
#include "support/test_support.hpp"

using namespace entverify;
using namespace entverify::diagram;
using entverify::testing::random_block_map;
using entverify::testing::random_one_morphism;

namespace {

// Unshaded wrapper: a plain matrix as a single-wire BlockMap.
BlockMap wrap_matrix(const Matrix& m) {
  BlockMap f({OneMorphism::simple(static_cast<int>(m.cols()))},
             {OneMorphism::simple(static_cast<int>(m.rows()))});
  f.block_flat(0) = m;
  return f;
}

}  // namespace

TEST_CASE("compose: identity is a strict unit") {
  std::mt19937_64 rng(7);
  OneMorphism x = random_one_morphism(rng, 2, 3, 3);
  OneMorphism y = random_one_morphism(rng, 2, 3, 3);
  BlockMap f = random_block_map(rng, {x}, {y});
  BlockMap lf = compose(BlockMap::identity({y}), f);
  BlockMap rf = compose(f, BlockMap::identity({x}));
  for (Eigen::Index k = 0; k < f.num_blocks(); ++k) {
    CHECK(lf.block_flat(k) == f.block_flat(k));
    CHECK(rf.block_flat(k) == f.block_flat(k));
  }
}

TEST_CASE("compose: closed-region summation over scalar blocks") {
  // f: X (x) Y -> Z (x) U and g: Z (x) U -> V (x) W as in the two-box setup,
  // every wire dimension 1, m = 2 shaded regions in the middle.
  const int m = 2, n = 2;
  OneMorphism x = random_one_morphism(*(new std::mt19937_64(3)), 1, m, 1);
  // all-ones wires
  auto ones = [](int r, int c) {
    Eigen::MatrixXi d = Eigen::MatrixXi::Constant(r, c, 1);
    return OneMorphism(d);
  };
  OneMorphism X = ones(1, m), Y = ones(m, n), Z = ones(1, m), U = ones(m, n);
  OneMorphism V = ones(1, 1), W = ones(1, n);

  std::mt19937_64 rng(11);
  BlockMap f = random_block_map(rng, {X, Y}, {Z, U});
  BlockMap g = random_block_map(rng, {Z, U}, {V, W});
  BlockMap gf = compose(g, f);

  // (g o f)_{ij} = sum_k g_{kj} f_{ijk}; assignments are (left, i, j, k-ish).
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      Complex expect = 0.0;
      for (int k = 0; k < m; ++k)
        expect += g.block({0, k, j, 0})(0, 0) * f.block({0, i, j, k})(0, 0);
      CHECK(std::abs(gf.block({0, i, j, 0})(0, 0) - expect) < 1e-14);
    }
  (void)x;
}

TEST_CASE("compose: unshaded case is matrix multiplication") {
  std::mt19937_64 rng(42);
  Matrix a = linalg::random_matrix(rng, 3, 2);  // f: C^2 -> C^3
  Matrix b = linalg::random_matrix(rng, 4, 3);  // g: C^3 -> C^4
  BlockMap gf = compose(wrap_matrix(b), wrap_matrix(a));
  CHECK(linalg::operator_norm(gf.sole_block() - b * a) < 1e-13);
}

TEST_CASE("compose: interface mismatch names the offending wire") {
  std::mt19937_64 rng(5);
  BlockMap f = random_block_map(rng, {OneMorphism::simple(2)}, {OneMorphism::simple(3)});
  BlockMap g = random_block_map(rng, {OneMorphism::simple(4)}, {OneMorphism::simple(3)});
  CHECK_THROWS_WITH_AS(compose(g, f), doctest::Contains("wire 0"), std::invalid_argument);
}

TEST_CASE("tensor: unit and unshaded Kronecker product") {
  std::mt19937_64 rng(13);
  Matrix a = linalg::random_matrix(rng, 3, 2);
  Matrix b = linalg::random_matrix(rng, 2, 4);
  BlockMap t = tensor(wrap_matrix(a), wrap_matrix(b));
  // Unshaded case: the single connected-junction block is the plain Kronecker
  // product.
  CHECK(linalg::operator_norm(t.block({0, 0, 0, 0}) - linalg::kron(a, b)) < 1e-13);

  // Tensoring with the identity on the invisible wire changes nothing after
  // stripping the identity wire back off.
  BlockMap unit = BlockMap::identity({OneMorphism::identity(1)});
  BlockMap fu = strip_identity_wires(tensor(wrap_matrix(a), unit));
  CHECK(linalg::operator_norm(fu.sole_block() - a) == 0.0);
}

TEST_CASE("tensor/compose interchange law") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    OneMorphism v1 = random_one_morphism(rng, 1, 2, 2);
    OneMorphism v2 = random_one_morphism(rng, 1, 2, 2);
    OneMorphism v3 = random_one_morphism(rng, 1, 2, 2);
    OneMorphism w1 = random_one_morphism(rng, 2, 3, 2);
    OneMorphism w2 = random_one_morphism(rng, 2, 3, 2);
    OneMorphism w3 = random_one_morphism(rng, 2, 3, 2);
    BlockMap f1 = random_block_map(rng, {v1}, {v2});
    BlockMap f2 = random_block_map(rng, {v2}, {v3});
    BlockMap g1 = random_block_map(rng, {w1}, {w2});
    BlockMap g2 = random_block_map(rng, {w2}, {w3});
    BlockMap lhs = compose(tensor(f2, g2), tensor(f1, g1));
    BlockMap rhs = tensor(compose(f2, f1), compose(g2, g1));
    CHECK(distance(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("dagger: involution, scalar conjugation, antihomomorphism") {
  std::mt19937_64 rng(19);
  OneMorphism v = random_one_morphism(rng, 2, 2, 3);
  OneMorphism w = random_one_morphism(rng, 2, 2, 3);
  OneMorphism u = random_one_morphism(rng, 2, 2, 3);
  BlockMap f = random_block_map(rng, {v}, {w});
  BlockMap g = random_block_map(rng, {w}, {u});

  CHECK(distance(dagger(dagger(f)), f) == 0.0);
  CHECK(distance(dagger(compose(g, f)), compose(dagger(f), dagger(g))) < 1e-12);

  Matrix i1(1, 1);
  i1(0, 0) = Complex(0, 1);
  BlockMap s = wrap_matrix(i1);
  CHECK(dagger(s).sole_block()(0, 0) == Complex(0, -1));
}

TEST_CASE("transpose: identity, antihomomorphism, conjugate consistency") {
  std::mt19937_64 rng(23);
  OneMorphism v = random_one_morphism(rng, 2, 3, 3);
  BlockMap idv = BlockMap::identity({v});
  CHECK(distance(transpose(idv), BlockMap::identity({v.dual()})) == 0.0);

  OneMorphism w = random_one_morphism(rng, 2, 3, 3);
  OneMorphism u = random_one_morphism(rng, 2, 3, 3);
  BlockMap f = random_block_map(rng, {v}, {w});
  BlockMap g = random_block_map(rng, {w}, {u});
  CHECK(distance(transpose(compose(g, f)), compose(transpose(f), transpose(g))) < 1e-12);
  CHECK(distance(conjugate(f), transpose(dagger(f))) < 1e-13);
  CHECK(distance(conjugate(f), dagger(transpose(f))) < 1e-13);
  // conjugate is a homomorphism
  CHECK(distance(conjugate(compose(g, f)), compose(conjugate(g), conjugate(f))) < 1e-12);
}

TEST_CASE("cup: trivial dims and the unshaded Bell vector") {
  OneMorphism triv = random_one_morphism(*(new std::mt19937_64(1)), 2, 2, 1);
  BlockMap c = cup(triv);
  c.for_each_assignment([&](const std::vector<int>& a, Eigen::Index flat) {
    if (a[0] == a[1]) {
      REQUIRE(c.block_flat(flat).size() == 1);
      CHECK(c.block_flat(flat)(0, 0) == Complex(1, 0));
    }
  });

  BlockMap q = cup(OneMorphism::simple(2));
  Vector expect(4);
  expect << 1, 0, 0, 1;
  CHECK(linalg::operator_norm(q.block({0, 0, 0}) - expect) == 0.0);
}

TEST_CASE("snake equations on random shaded wires") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> mn(1, 3);
    int m = mn(rng), n = mn(rng);
    OneMorphism v = random_one_morphism(rng, m, n, 3, true);

    // (eps_V (x) 1_V) o (1_V (x) eta_V) = 1_V
    BlockMap lhs = compose(tensor(cap(v), BlockMap::identity({v})),
                           tensor(BlockMap::identity({v}), cup(v)));
    BlockMap snake1 = strip_identity_wires(lhs);
    CHECK(distance(snake1, BlockMap::identity({v})) < 1e-12);

    // (1_V* (x) eps_V... the dual-side snake via daggers:
    // (eta_V^dag (x) 1_V*) o (1_V* (x) eps_V^dag) = 1_V*
    BlockMap lhs2 = compose(tensor(dagger(cup(v)), BlockMap::identity({v.dual()})),
                            tensor(BlockMap::identity({v.dual()}), dagger(cap(v))));
    CHECK(distance(strip_identity_wires(lhs2), BlockMap::identity({v.dual()})) < 1e-12);
  }
}

TEST_CASE("sliding law: a box composed with a cap slides to its transpose") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<int> mn(1, 3);
    int m = mn(rng), n = mn(rng);
    OneMorphism v = random_one_morphism(rng, m, n, 3);
    OneMorphism w = random_one_morphism(rng, m, n, 3);
    BlockMap f = random_block_map(rng, {v}, {w});

    // eps_W o (f (x) 1_W*) = eps_V o (1_V (x) f^T)
    BlockMap lhs = compose(cap(w), tensor(f, BlockMap::identity({w.dual()})));
    BlockMap rhs = compose(cap(v), tensor(BlockMap::identity({v}), transpose(f)));
    CHECK(distance(lhs, rhs) < 1e-12);

    // and on cups: (1_W* (x) f) o eta_V... = (f^T (x) 1_V) o eta_W
    BlockMap lhs2 = compose(tensor(BlockMap::identity({v.dual()}), f), cup(v));
    BlockMap rhs2 = compose(tensor(transpose(f), BlockMap::identity({w})), cup(w));
    CHECK(distance(lhs2, rhs2) < 1e-12);
  }
}

TEST_CASE("dagger-composites are positive semidefinite blockwise") {
  std::mt19937_64 rng(37);
  OneMorphism v = random_one_morphism(rng, 2, 3, 3);
  OneMorphism w = random_one_morphism(rng, 2, 3, 3);
  BlockMap f = random_block_map(rng, {v}, {w});
  BlockMap p = compose(dagger(f), f);
  p.for_each_assignment([&](const std::vector<int>&, Eigen::Index flat) {
    CHECK(linalg::min_hermitian_eigenvalue(p.block_flat(flat)) > -1e-12);
  });
}

TEST_CASE("left dimension: identity, splitting components, cup composite") {
  CHECK(left_dimension(OneMorphism::identity(3)).values.isApprox(Vector::Ones(3)));

  OneMorphism x = OneMorphism::splitting({2, 3, 1});
  EndoScalarFamily d = left_dimension(x);
  CHECK(d.values(0) == Complex(2, 0));
  CHECK(d.values(1) == Complex(3, 0));
  CHECK(d.values(2) == Complex(1, 0));

  // d_X = eta_X^dag o eta_X, computed with explicit cups.
  std::mt19937_64 rng(41);
  OneMorphism v = random_one_morphism(rng, 3, 2, 3);
  BlockMap viaCup = compose(dagger(cup(v)), cup(v));
  BlockMap disc = disc_to_blockmap(left_dimension(v));
  CHECK(distance(viaCup, disc) < 1e-12);

  Eigen::MatrixXi z(2, 2);
  z << 1, 0, 2, 0;
  CHECK_THROWS_AS(left_dimension(OneMorphism(z)), std::domain_error);
}

TEST_CASE("scalar families commute and convert to discs") {
  EndoScalarFamily a(Vector::LinSpaced(3, 1.0, 3.0).cast<Complex>());
  EndoScalarFamily b(Vector::LinSpaced(3, 2.0, 4.0).cast<Complex>());
  CHECK(a.pointwise_product(b).values.isApprox(b.pointwise_product(a).values));
  BlockMap da = disc_to_blockmap(a);
  BlockMap db = disc_to_blockmap(b);
  CHECK(distance(compose(da, db), compose(db, da)) == 0.0);
}

TEST_CASE("unshaded specialization reproduces ordinary matrix algebra") {
  std::mt19937_64 rng(43);
  Matrix a = linalg::random_matrix(rng, 3, 3);
  Matrix b = linalg::random_matrix(rng, 3, 3);
  CHECK(linalg::operator_norm(compose(wrap_matrix(a), wrap_matrix(b)).sole_block() - a * b) <
        1e-13);
  CHECK(linalg::operator_norm(dagger(wrap_matrix(a)).sole_block() - a.adjoint()) == 0.0);
  CHECK(linalg::operator_norm(transpose(wrap_matrix(a)).sole_block() - a.transpose()) == 0.0);
}
