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

#include <random>

#include "anyonforge/braid.hpp"

using namespace anyonforge;

namespace {

BraidWord random_word(std::mt19937& rng, int strands, std::size_t length) {
  std::uniform_int_distribution<int> pos(1, strands - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  BraidWord w{strands, {}};
  for (std::size_t i = 0; i < length; ++i) w.letters.push_back({pos(rng), sign(rng) ? 1 : -1});
  return w;
}

Arrangement mixed_arrangement() {
  return Arrangement::initial(charges_from_twice_spins({1, 2, 2, 1, 3, 2}),
                              Grouping::from_sizes({1, 2, 1, 2}));
}

}  // namespace

TEST(braid_word, free_reduction_and_inverse) {
  BraidWord w{4, {{1, 1}, {2, -1}, {3, 1}}};
  EXPECT_TRUE(w.freely_reduced());
  EXPECT_EQ(w.inverse().letters, (std::vector<BraidLetter>{{3, -1}, {2, 1}, {1, -1}}));
  EXPECT_FALSE(w.concatenated(w.inverse()).freely_reduced());
  EXPECT_THROW(w.concatenated(BraidWord{5, {}}), std::invalid_argument);
}

TEST(braid_word, validate) {
  EXPECT_THROW((BraidWord{3, {{3, 1}}}.validate()), std::out_of_range);
  EXPECT_THROW((BraidWord{3, {{0, 1}}}.validate()), std::out_of_range);
  EXPECT_THROW((BraidWord{3, {{1, 2}}}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((BraidWord{3, {{2, -1}}}.validate()));
}

TEST(evaluate, empty_word_is_identity) {
  AnyonModel m(4);
  const Arrangement a = mixed_arrangement();
  const Evaluation e = evaluate(m, a, Charge(1), {4, {}});
  const auto d = static_cast<Eigen::Index>(e.map.source.dim());
  ASSERT_GT(d, 0);
  EXPECT_EQ(e.map.matrix, Matrix::Identity(d, d));
  EXPECT_TRUE(e.final_arrangement.same_order(a));
}

TEST(evaluate, word_times_inverse_is_identity) {
  AnyonModel m(5);
  const Arrangement a = mixed_arrangement();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const BraidWord w = random_word(rng, 4, 8);
    const Matrix u = evaluate_closed(m, a, Charge(1), w.concatenated(w.inverse()));
    EXPECT_LT(max_abs_diff(u, Matrix::Identity(u.rows(), u.cols())), 1e-10);
  }
}

TEST(evaluate, homomorphism) {
  AnyonModel m(5);
  const Arrangement a = mixed_arrangement();
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const BraidWord w1 = random_word(rng, 4, 5), w2 = random_word(rng, 4, 6);
    const Evaluation e1 = evaluate(m, a, Charge(1), w1);
    const Evaluation e2 = evaluate(m, e1.final_arrangement, Charge(1), w2);
    const Evaluation e12 = evaluate(m, a, Charge(1), w1.concatenated(w2));
    EXPECT_LT(max_abs_diff(e12.map.matrix, e2.map.matrix * e1.map.matrix), 1e-10);
    EXPECT_EQ(e12.final_arrangement.block_ids, e2.final_arrangement.block_ids);
    EXPECT_EQ(e12.map.target.leaves(), e2.map.target.leaves());
    EXPECT_LT(unitarity_residual(e12.map.matrix), 1e-10 * 11);
  }
}

TEST(evaluate, fibonacci_tenth_power) {
  AnyonModel m(3);
  const Arrangement a =
      Arrangement::initial(charges_from_twice_spins({2, 2, 2}), Grouping::singletons(3));
  BraidWord w{3, std::vector<BraidLetter>(10, {1, 1})};
  const Matrix u = evaluate_closed(m, a, Charge(2), w);
  EXPECT_LT(max_abs_diff_up_to_phase(u, Matrix::Identity(u.rows(), u.cols())), 1e-9);
}

TEST(evaluate, rejects_mismatched_and_open_words) {
  AnyonModel m(3);
  const Arrangement a = mixed_arrangement();
  EXPECT_THROW(evaluate(m, a, Charge(1), {3, {}}), std::invalid_argument);
  EXPECT_THROW(evaluate(m, a, Charge(1), {4, {{4, 1}}}), std::out_of_range);
  EXPECT_THROW(evaluate_closed(m, a, Charge(1), {4, {{1, 1}}}), std::invalid_argument);
}

TEST(exchange_counts, examples) {
  const Grouping g = Grouping::from_sizes({1, 2, 2, 1});
  for (const auto& [pair, c] : exchange_counts({4, {}}, g)) {
    EXPECT_EQ(c, ExchangeCount{}) << pair.first << "," << pair.second;
  }
  const auto counts = exchange_counts({4, {{1, 1}, {1, 1}}}, g);
  EXPECT_EQ(counts.at({0, 1}).total, 2);
  EXPECT_EQ(counts.at({0, 1}).signed_count, 2);
  // a1 passes q1 then q2 and comes back the other way round.
  const auto winding = exchange_counts({4, {{1, 1}, {2, 1}, {2, -1}, {1, -1}}}, g);
  EXPECT_EQ(winding.at({0, 1}), (ExchangeCount{0, 2}));
  EXPECT_EQ(winding.at({0, 2}), (ExchangeCount{0, 2}));
  EXPECT_EQ(winding.at({1, 2}), (ExchangeCount{0, 0}));
}

TEST(expand_to_strands, agrees_with_block_evaluation) {
  AnyonModel m(4);
  const Arrangement a = mixed_arrangement();
  const Arrangement singles =
      Arrangement::initial(a.leaves, Grouping::singletons(a.leaves.size()));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const BraidWord w = random_word(rng, 4, 6);
    const BraidWord s = expand_to_strands(w, a.grouping);
    EXPECT_EQ(s.strand_count, 6);
    const Evaluation eb = evaluate(m, a, Charge(1), w);
    const Evaluation es = evaluate(m, singles, Charge(1), s);
    EXPECT_EQ(eb.map.target.leaves(), es.map.target.leaves());
    EXPECT_LT(max_abs_diff(eb.map.matrix, es.map.matrix), 1e-12);
  }
}

TEST(braid_relations, up_to_six_strands) {
  for (int k : {2, 3}) {
    EXPECT_LT(max_braid_relation_residual(AnyonModel(k), 6, {Charge(1), Charge(2)}), 1e-9);
  }
}
