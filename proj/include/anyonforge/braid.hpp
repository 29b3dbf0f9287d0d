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

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "anyonforge/fusion_space.hpp"

namespace anyonforge {

struct BraidLetter {
  int position = 1;  // exchanges (block) positions position and position+1
  int exponent = 1;  // +1 counterclockwise, -1 clockwise

  auto operator<=>(const BraidLetter&) const = default;
};

/// Word in the generators of the braid group on `strand_count` strands.
/// When evaluated against a grouping, a strand is a whole block.
struct BraidWord {
  int strand_count = 0;
  std::vector<BraidLetter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  /// No letter is immediately followed by its inverse.
  bool freely_reduced() const;
  /// Reversed word with negated exponents.
  BraidWord inverse() const;
  BraidWord concatenated(const BraidWord& next) const;
  /// Throws std::out_of_range for positions outside [1, strand_count - 1]
  /// and std::invalid_argument for exponents other than +-1.
  void validate() const;

  bool operator==(const BraidWord&) const = default;
};

/// Blocks of leaves in their current left-to-right order. block_ids holds the
/// original index of each block so that moved blocks keep their identity.
struct Arrangement {
  std::vector<Charge> leaves;
  Grouping grouping;
  std::vector<std::size_t> block_ids;

  static Arrangement initial(std::vector<Charge> leaves, Grouping grouping);
  /// Arrangement after exchanging blocks at 0-based positions b and b+1.
  Arrangement exchanged(std::size_t b) const;
  std::vector<Charge> block_leaves(std::size_t b) const;
  bool same_order(const Arrangement& other) const {
    return block_ids == other.block_ids;
  }
};

struct Evaluation {
  BasisMap map;
  Arrangement final_arrangement;
};

/// Ordered product of composite generators, first letter applied first.
Evaluation evaluate(const AnyonModel& model, const Arrangement& start,
                    Charge total, const BraidWord& word);

/// Square matrix of a word that returns every block to its starting slot.
/// Throws std::invalid_argument if the word permutes blocks.
Matrix evaluate_closed(const AnyonModel& model, const Arrangement& start,
                       Charge total, const BraidWord& word);

struct ExchangeCount {
  int signed_count = 0;
  int total = 0;

  bool operator==(const ExchangeCount&) const = default;
};

/// Exchanges between each pair of original blocks, keyed (min id, max id).
std::map<std::pair<std::size_t, std::size_t>, ExchangeCount> exchange_counts(
    const BraidWord& word, const Grouping& grouping);

/// Rewrites a block-level word as elementary strand exchanges.
BraidWord expand_to_strands(const BraidWord& word, const Grouping& grouping);

/// Largest residual of sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i
/// sigma_{i+1} and sigma_i sigma_j = sigma_j sigma_i (|i-j| >= 2), over every
/// leaf tuple of 2..max_strands strands drawn from leaf_charges and every
/// admissible total charge.
double max_braid_relation_residual(const AnyonModel& model, int max_strands,
                                   const std::vector<Charge>& leaf_charges);

}  // namespace anyonforge
