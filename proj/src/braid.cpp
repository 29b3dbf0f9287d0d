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

#include "anyonforge/braid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace anyonforge {

bool BraidWord::freely_reduced() const {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i].position == letters[i - 1].position &&
        letters[i].exponent == -letters[i - 1].exponent) {
      return false;
    }
  }
  return true;
}

BraidWord BraidWord::inverse() const {
  BraidWord out{strand_count, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.letters.push_back({it->position, -it->exponent});
  }
  return out;
}

BraidWord BraidWord::concatenated(const BraidWord& next) const {
  if (strand_count != next.strand_count) {
    throw std::invalid_argument("cannot concatenate words on different strand counts");
  }
  BraidWord out = *this;
  out.letters.insert(out.letters.end(), next.letters.begin(), next.letters.end());
  return out;
}

void BraidWord::validate() const {
  for (const auto& l : letters) {
    if (l.position < 1 || l.position >= strand_count) {
      throw std::out_of_range("braid letter position " +
                              std::to_string(l.position) + " outside 1.." +
                              std::to_string(strand_count - 1));
    }
    if (l.exponent != 1 && l.exponent != -1) {
      throw std::invalid_argument("braid letter exponent must be +1 or -1");
    }
  }
}

Arrangement Arrangement::initial(std::vector<Charge> leaves, Grouping grouping) {
  grouping.validate(leaves.size());
  Arrangement a{std::move(leaves), std::move(grouping), {}};
  a.block_ids.resize(a.grouping.block_count());
  std::iota(a.block_ids.begin(), a.block_ids.end(), std::size_t{0});
  return a;
}

std::vector<Charge> Arrangement::block_leaves(std::size_t b) const {
  std::vector<Charge> out;
  for (std::size_t idx : grouping.blocks.at(b)) out.push_back(leaves[idx]);
  return out;
}

Arrangement Arrangement::exchanged(std::size_t b) const {
  Arrangement out;
  out.grouping = grouping.exchanged(b);
  out.block_ids = block_ids;
  std::swap(out.block_ids[b], out.block_ids[b + 1]);
  for (std::size_t i = 0; i < grouping.block_count(); ++i) {
    const std::size_t src = (i == b) ? b + 1 : (i == b + 1) ? b : i;
    const auto bl = block_leaves(src);
    out.leaves.insert(out.leaves.end(), bl.begin(), bl.end());
  }
  return out;
}

Evaluation evaluate(const AnyonModel& model, const Arrangement& start,
                    Charge total, const BraidWord& word) {
  if (word.strand_count != static_cast<int>(start.grouping.block_count())) {
    throw std::invalid_argument("word has " + std::to_string(word.strand_count) +
                                " strands but arrangement has " +
                                std::to_string(start.grouping.block_count()) +
                                " blocks");
  }
  word.validate();
  const FusionBasis basis = enumerate_basis(model, start.leaves, total);
  const auto d = static_cast<Eigen::Index>(basis.dim());
  Evaluation ev{BasisMap{basis, basis, Matrix::Identity(d, d)}, start};
  for (const auto& letter : word.letters) {
    const auto b = static_cast<std::size_t>(letter.position - 1);
    BasisMap step = composite_braid_generator(
        model, ev.map.target, ev.final_arrangement.grouping, b, letter.exponent);
    ev.map.matrix = step.matrix * ev.map.matrix;
    ev.map.target = std::move(step.target);
    ev.final_arrangement = ev.final_arrangement.exchanged(b);
  }
  return ev;
}

Matrix evaluate_closed(const AnyonModel& model, const Arrangement& start,
                       Charge total, const BraidWord& word) {
  Evaluation ev = evaluate(model, start, total, word);
  if (!ev.final_arrangement.same_order(start)) {
    throw std::invalid_argument("braid does not return blocks to their slots");
  }
  return ev.map.matrix;
}

std::map<std::pair<std::size_t, std::size_t>, ExchangeCount> exchange_counts(
    const BraidWord& word, const Grouping& grouping) {
  std::vector<std::size_t> order(grouping.block_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::map<std::pair<std::size_t, std::size_t>, ExchangeCount> counts;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) counts[{i, j}] = {};
  }
  for (const auto& letter : word.letters) {
    const auto b = static_cast<std::size_t>(letter.position - 1);
    if (b + 1 >= order.size()) {
      throw std::out_of_range("exchange_counts: letter outside grouping");
    }
    const auto key = std::minmax(order[b], order[b + 1]);
    auto& c = counts[{key.first, key.second}];
    c.signed_count += letter.exponent;
    c.total += 1;
    std::swap(order[b], order[b + 1]);
  }
  return counts;
}

BraidWord expand_to_strands(const BraidWord& word, const Grouping& grouping) {
  word.validate();
  std::size_t n_leaves = 0;
  for (const auto& b : grouping.blocks) n_leaves += b.size();
  BraidWord out{static_cast<int>(n_leaves), {}};
  Grouping current = grouping;
  for (const auto& letter : word.letters) {
    const auto b = static_cast<std::size_t>(letter.position - 1);
    for (auto [pos, e] : composite_exchange_letters(current, b, letter.exponent)) {
      out.letters.push_back({pos, e});
    }
    current = current.exchanged(b);
  }
  return out;
}

namespace {

double relation_residual(const AnyonModel& model, const Arrangement& start,
                         Charge total, const BraidWord& lhs, const BraidWord& rhs) {
  const Evaluation l = evaluate(model, start, total, lhs);
  const Evaluation r = evaluate(model, start, total, rhs);
  return max_abs_diff(l.map.matrix, r.map.matrix);
}

}  // namespace

double max_braid_relation_residual(const AnyonModel& model, int max_strands,
                                   const std::vector<Charge>& leaf_charges) {
  double worst = 0.0;
  for (int n = 2; n <= max_strands; ++n) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<Charge> leaves;
      for (std::size_t d : digits) leaves.push_back(leaf_charges[d]);
      const Arrangement start =
          Arrangement::initial(leaves, Grouping::singletons(leaves.size()));
      for (Charge total : model.charges()) {
        if (enumerate_basis(model, leaves, total).dim() == 0) continue;
        for (int i = 1; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            BraidWord lhs{n, {}}, rhs{n, {}};
            if (j == i + 1) {
              lhs.letters = {{i, 1}, {j, 1}, {i, 1}};
              rhs.letters = {{j, 1}, {i, 1}, {j, 1}};
            } else {
              lhs.letters = {{i, 1}, {j, 1}};
              rhs.letters = {{j, 1}, {i, 1}};
            }
            worst = std::max(worst, relation_residual(model, start, total, lhs, rhs));
          }
        }
      }
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == leaf_charges.size()) {
        digits[pos++] = 0;
      }
      if (pos == digits.size()) break;
    }
  }
  return worst;
}

}  // namespace anyonforge
