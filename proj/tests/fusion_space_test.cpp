// Copyright 2026 The AnyonForge Authors
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

#include <gtest/gtest.h>

#include "anyonforge/braid.hpp"

using namespace anyonforge;

namespace {

std::vector<Charge> halves(std::size_t n) { return std::vector<Charge>(n, Charge(1)); }

// Walks of n steps of +-1 on 0..k from 0 to `total`: independent count of
// left-comb trees on n spin-1/2 leaves.
std::size_t bounded_walks(int k, int n, int total) {
  std::vector<std::size_t> ways(static_cast<std::size_t>(k + 1), 0);
  ways[1] = 1;  // after the first leaf
  for (int step = 1; step < n; ++step) {
    std::vector<std::size_t> next(ways.size(), 0);
    for (int h = 0; h <= k; ++h) {
      const std::size_t w = ways[static_cast<std::size_t>(h)];
      if (!w) continue;
      // 1/2 x h/2 reaches (h+1)/2 iff h+1 <= k (truncation).
      if (h + 1 <= k) next[static_cast<std::size_t>(h + 1)] += w;
      if (h >= 1) next[static_cast<std::size_t>(h - 1)] += w;
    }
    ways = next;
  }
  return ways[static_cast<std::size_t>(total)];
}

GroupedState grouped(std::vector<int> charges, std::vector<std::vector<int>> internals,
                     std::vector<int> coarse) {
  GroupedState s;
  s.block_charges = charges_from_twice_spins(charges);
  for (const auto& b : internals) s.block_internals.push_back(charges_from_twice_spins(b));
  s.coarse_internals = charges_from_twice_spins(coarse);
  return s;
}

}  // namespace

TEST(enumerate_basis, dimension_examples) {
  EXPECT_EQ(enumerate_basis(AnyonModel(3), halves(6), Charge(0)).dim(), 5u);
  EXPECT_EQ(enumerate_basis(AnyonModel(2), halves(6), Charge(0)).dim(), 4u);
  for (int k = 2; k <= 8; ++k) {
    EXPECT_EQ(enumerate_basis(AnyonModel(k), halves(2), Charge(0)).dim(), 1u);
  }
  // Inadmissible total.
  EXPECT_EQ(enumerate_basis(AnyonModel(3), halves(3), Charge(0)).dim(), 0u);
}

TEST(enumerate_basis, matches_bounded_walk_count) {
  for (int k = 2; k <= 8; ++k) {
    AnyonModel m(k);
    for (int n = 1; n <= 10; ++n) {
      for (int total = 0; total <= k; ++total) {
        EXPECT_EQ(enumerate_basis(m, halves(static_cast<std::size_t>(n)), Charge(total)).dim(),
                  bounded_walks(k, n, total))
            << "k=" << k << " n=" << n << " total=" << total;
      }
    }
  }
  // Untruncated: Catalan numbers.
  AnyonModel big(20);
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_basis(big, halves(2 * n), Charge(0)).dim(), catalan[n]);
  }
}

TEST(enumerate_basis, canonical_order_and_admissibility) {
  AnyonModel m(5);
  const std::vector<Charge> leaves = charges_from_twice_spins({1, 2, 1, 2, 1});
  const FusionBasis b = enumerate_basis(m, leaves, Charge(1));
  ASSERT_GT(b.dim(), 1u);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const FusionTree& t = b.trees()[i];
    EXPECT_EQ(t.internals.front(), leaves.front());
    EXPECT_EQ(t.total(), Charge(1));
    for (std::size_t j = 1; j < leaves.size(); ++j) {
      EXPECT_TRUE(m.admissible(t.internals[j - 1], leaves[j], t.internals[j]));
    }
    if (i) EXPECT_LT(b.trees()[i - 1].internals, t.internals);
    EXPECT_EQ(b.index_of(t.internals), i);
  }
}

TEST(braid_generator, definite_channel_is_r_symbol) {
  for (int k = 2; k <= 6; ++k) {
    AnyonModel m(k);
    for (Charge a : m.charges()) {
      for (Charge b : m.charges()) {
        for (Charge c : m.fuse(a, b)) {
          const FusionBasis basis = enumerate_basis(m, {a, b}, c);
          const BasisMap s = braid_generator(m, basis, 1);
          ASSERT_EQ(s.matrix.rows(), 1);
          EXPECT_NEAR(std::abs(s.matrix(0, 0) - m.r_symbol(a, b, c)), 0.0, 1e-14);
          EXPECT_EQ(s.target.leaves(), (std::vector<Charge>{b, a}));
        }
      }
    }
  }
}

TEST(braid_generator, yang_baxter_three_charge_one_strands) {
  AnyonModel m(3);
  const Arrangement start =
      Arrangement::initial(charges_from_twice_spins({2, 2, 2}), Grouping::singletons(3));
  const Evaluation l = evaluate(m, start, Charge(2), {3, {{1, 1}, {2, 1}, {1, 1}}});
  const Evaluation r = evaluate(m, start, Charge(2), {3, {{2, 1}, {1, 1}, {2, 1}}});
  EXPECT_LT(max_abs_diff(l.map.matrix, r.map.matrix), 1e-10);
}

TEST(braid_generator, relations_small_systems) {
  for (int k : {2, 3, 4}) {
    EXPECT_LT(max_braid_relation_residual(AnyonModel(k), 5, {Charge(1), Charge(2)}), 1e-9);
  }
}

TEST(braid_generator, fibonacci_tenth_power) {
  AnyonModel m(3);
  const Charge one(2);
  // Two strands: both total-charge sectors pick up the same phase.
  const Complex p0 = std::pow(m.r_symbol(one, one, Charge(0)), 10);
  const Complex p1 = std::pow(m.r_symbol(one, one, one), 10);
  EXPECT_NEAR(std::abs(p0 / p1 - 1.0), 0.0, 1e-9);
  // Three strands, total 1 (dimension 2): sigma_1^10 is a phase times identity.
  const FusionBasis b = enumerate_basis(m, {one, one, one}, one);
  ASSERT_EQ(b.dim(), 2u);
  const Matrix s = braid_generator(m, b, 1).matrix;
  Matrix p = Matrix::Identity(2, 2);
  for (int i = 0; i < 10; ++i) p = s * p;
  EXPECT_LT(max_abs_diff_up_to_phase(p, Matrix::Identity(2, 2)), 1e-9);
  EXPECT_LT(unitarity_residual(s), 1e-10);
}

TEST(braid_generator, errors) {
  AnyonModel m(3);
  const FusionBasis b = enumerate_basis(m, halves(4), Charge(0));
  EXPECT_THROW(braid_generator(m, b, 0), std::out_of_range);
  EXPECT_THROW(braid_generator(m, b, 4), std::out_of_range);
  EXPECT_THROW(braid_generator(m, b, 1, 2), std::invalid_argument);
}

TEST(braid_generator, inverse_undoes_exchange) {
  AnyonModel m(5);
  const FusionBasis b = enumerate_basis(m, charges_from_twice_spins({1, 2, 3, 1}), Charge(1));
  for (int pos = 1; pos <= 3; ++pos) {
    const BasisMap fwd = braid_generator(m, b, pos, 1);
    const BasisMap back = braid_generator(m, fwd.target, pos, -1);
    EXPECT_EQ(back.target.leaves(), b.leaves());
    const auto d = static_cast<Eigen::Index>(b.dim());
    EXPECT_LT(max_abs_diff(back.matrix * fwd.matrix, Matrix::Identity(d, d)), 1e-12);
  }
}

TEST(regroup, singletons_is_identity) {
  AnyonModel m(4);
  const FusionBasis b = enumerate_basis(m, halves(6), Charge(0));
  const GroupedBasis g = regroup(m, b, Grouping::singletons(6));
  const auto d = static_cast<Eigen::Index>(b.dim());
  EXPECT_LT(max_abs_diff(g.to_fine, Matrix::Identity(d, d)), 1e-14);
}

TEST(regroup, two_qubit_sector_dims) {
  AnyonModel m(3);
  const GroupedBasis g =
      regroup(m, enumerate_basis(m, halves(6), Charge(0)), Grouping::from_sizes({1, 2, 2, 1}));
  const auto dims = g.sector_dims();
  EXPECT_EQ(dims.at(charges_from_twice_spins({1, 0, 0, 1})), 1u);
  EXPECT_EQ(dims.at(charges_from_twice_spins({1, 0, 2, 1})), 1u);
  EXPECT_EQ(dims.at(charges_from_twice_spins({1, 2, 0, 1})), 1u);
  EXPECT_EQ(dims.at(charges_from_twice_spins({1, 2, 2, 1})), 2u);
  std::size_t total = 0;
  for (const auto& [c, d] : dims) total += d;
  EXPECT_EQ(total, g.fine.dim());
}

TEST(regroup, unitary_and_inner_products) {
  for (int k : {2, 3, 5, 8}) {
    AnyonModel m(k);
    const FusionBasis b = enumerate_basis(m, charges_from_twice_spins({1, 1, 2, 1, 1, 2, 1}), Charge(1));
    for (const auto& sizes : std::vector<std::vector<std::size_t>>{
             {1, 2, 2, 1, 1}, {3, 4}, {2, 2, 3}, {1, 1, 1, 1, 1, 1, 1}, {7}}) {
      const GroupedBasis g = regroup(m, b, Grouping::from_sizes(sizes));
      ASSERT_EQ(g.dim(), b.dim());
      const auto d = static_cast<Eigen::Index>(b.dim());
      EXPECT_LT(max_abs_diff(g.to_fine.adjoint() * g.to_fine, Matrix::Identity(d, d)), 1e-12);
      EXPECT_LT(max_abs_diff(g.to_fine * g.to_fine.adjoint(), Matrix::Identity(d, d)), 1e-12);
    }
  }
}

TEST(regroup, pinned_block_charges_give_isometry) {
  AnyonModel m(3);
  const FusionBasis b = enumerate_basis(m, halves(6), Charge(0));
  Grouping g = Grouping::from_sizes({1, 2, 2, 1});
  g.block_charges[1] = Charge(2);
  const GroupedBasis gb = regroup(m, b, g);
  EXPECT_EQ(gb.dim(), 3u);
  EXPECT_LT(max_abs_diff(gb.to_fine.adjoint() * gb.to_fine, Matrix::Identity(3, 3)), 1e-12);
}

TEST(composite_braid_generator, singletons_equal_elementary) {
  AnyonModel m(4);
  const FusionBasis b = enumerate_basis(m, charges_from_twice_spins({1, 2, 1, 3, 1}), Charge(2));
  for (std::size_t blk = 0; blk < 4; ++blk) {
    for (int e : {1, -1}) {
      const BasisMap c = composite_braid_generator(m, b, Grouping::singletons(5), blk, e);
      const BasisMap s = braid_generator(m, b, static_cast<int>(blk) + 1, e);
      EXPECT_EQ(c.matrix, s.matrix);
      EXPECT_EQ(c.target.leaves(), s.target.leaves());
    }
  }
}

TEST(composite_braid_generator, vacuum_block_is_identity) {
  AnyonModel m(3);
  const FusionBasis b = enumerate_basis(m, halves(4), Charge(0));
  const Grouping g = Grouping::from_sizes({1, 2, 1});
  const BasisMap u = composite_braid_generator(m, b, g, 0, 1);
  const Vector in = expand_grouped_state(m, b, g, grouped({1, 0, 1}, {{1}, {1, 0}, {1}}, {1, 1, 0}));
  const Vector out = expand_grouped_state(m, u.target, g.exchanged(0),
                                          grouped({0, 1, 1}, {{1, 0}, {1}, {1}}, {0, 1, 0}));
  EXPECT_LT((u.matrix * in - out).norm(), 1e-12);
}

TEST(composite_braid_generator, charged_block_matches_coarse_exchange) {
  AnyonModel m(3);
  for (int total : {1, 3}) {
    const FusionBasis b = enumerate_basis(m, halves(3), Charge(total));
    const Grouping g = Grouping::from_sizes({1, 2});
    const BasisMap u = composite_braid_generator(m, b, g, 0, 1);
    const Vector in = expand_grouped_state(m, b, g, grouped({1, 2}, {{1}, {1, 2}}, {1, total}));
    const Vector out = expand_grouped_state(m, u.target, g.exchanged(0),
                                            grouped({2, 1}, {{1, 2}, {1}}, {2, total}));
    const Complex r = m.r_symbol(Charge(1), Charge(2), Charge(total));
    EXPECT_LT((u.matrix * in - r * out).norm(), 1e-10) << "total=" << total;
  }
}

TEST(composite_braid_generator, errors) {
  AnyonModel m(3);
  const FusionBasis b = enumerate_basis(m, halves(4), Charge(0));
  EXPECT_THROW(composite_braid_generator(m, b, Grouping::from_sizes({2, 2}), 1), std::out_of_range);
  EXPECT_THROW(composite_braid_generator(m, b, Grouping::from_sizes({2, 1}), 0),
               std::invalid_argument);
}
