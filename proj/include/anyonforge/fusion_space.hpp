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

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "anyonforge/anyon_model.hpp"
#include "anyonforge/linalg.hpp"

namespace anyonforge {

/// Left-comb fusion tree: internals[0] = leaves[0] and internals[i] is the
/// charge after absorbing leaves[i]. The last internal is the total charge.
struct FusionTree {
  std::vector<Charge> leaves;
  std::vector<Charge> internals;

  Charge total() const { return internals.back(); }
  bool operator==(const FusionTree&) const = default;
};

/// All admissible left-comb trees for fixed leaves and total, ordered
/// lexicographically by internal charges.
class FusionBasis {
 public:
  FusionBasis() = default;
  FusionBasis(std::vector<Charge> leaves, Charge total,
              std::vector<FusionTree> trees);

  const std::vector<Charge>& leaves() const { return leaves_; }
  Charge total() const { return total_; }
  const std::vector<FusionTree>& trees() const { return trees_; }
  std::size_t dim() const { return trees_.size(); }

  std::optional<std::size_t> index_of(const std::vector<Charge>& internals) const;

 private:
  std::vector<Charge> leaves_;
  Charge total_;
  std::vector<FusionTree> trees_;
  std::map<std::vector<Charge>, std::size_t> index_;
};

FusionBasis enumerate_basis(const AnyonModel& model,
                            const std::vector<Charge>& leaves, Charge total);

/// A linear map between two fusion bases; matrix is target.dim x source.dim.
struct BasisMap {
  FusionBasis source;
  FusionBasis target;
  Matrix matrix;
};

/// Elementary exchange sigma_i^{exponent} of strands i and i+1 (1-based).
/// The target basis has those two leaves swapped.
BasisMap braid_generator(const AnyonModel& model, const FusionBasis& basis,
                         int position, int exponent = 1);

/// Contiguous partition of leaf positions into blocks (composite anyons),
/// optionally pinning each block to a definite total charge.
struct Grouping {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::optional<Charge>> block_charges;

  static Grouping singletons(std::size_t n_leaves);
  static Grouping from_sizes(const std::vector<std::size_t>& sizes);

  std::size_t block_count() const { return blocks.size(); }
  std::vector<std::size_t> block_sizes() const;
  /// Throws std::invalid_argument unless blocks are contiguous, disjoint
  /// and cover 0..n_leaves-1 in order.
  void validate(std::size_t n_leaves) const;
  /// Same partition with blocks i and i+1 swapped.
  Grouping exchanged(std::size_t block) const;
};

/// Basis state labelled by block charges, each block's own left-comb
/// internals, and the left-comb internals of the tree over block charges.
struct GroupedState {
  std::vector<Charge> block_charges;
  std::vector<std::vector<Charge>> block_internals;
  std::vector<Charge> coarse_internals;

  bool operator==(const GroupedState&) const = default;
};

/// Output of regroup. Column j of to_fine is states[j] expanded in the fine
/// left-comb basis. Without pinned block charges to_fine is square unitary.
struct GroupedBasis {
  FusionBasis fine;
  Grouping grouping;
  std::vector<GroupedState> states;
  Matrix to_fine;

  std::size_t dim() const { return states.size(); }
  /// Indices of the states whose block charges match.
  std::vector<std::size_t> sector(const std::vector<Charge>& block_charges) const;
  /// Distinct block-charge tuples with their dimensions, ordered.
  std::map<std::vector<Charge>, std::size_t> sector_dims() const;
  std::optional<std::size_t> index_of(const GroupedState& state) const;
};

GroupedBasis regroup(const AnyonModel& model, const FusionBasis& basis,
                     const Grouping& grouping);

/// Expands one grouped state into the fine basis on the grouping's leaves.
Vector expand_grouped_state(const AnyonModel& model, const FusionBasis& fine,
                            const Grouping& grouping, const GroupedState& state);

/// Elementary strand exchanges (1-based position, exponent) that carry block
/// `block` past block `block + 1` as a whole, first letter applied first.
std::vector<std::pair<int, int>> composite_exchange_letters(
    const Grouping& grouping, std::size_t block, int exponent);

/// Exchange of whole blocks `block` and `block + 1` (0-based). Built from
/// elementary exchanges, so intra-block order is preserved.
BasisMap composite_braid_generator(const AnyonModel& model,
                                   const FusionBasis& basis,
                                   const Grouping& grouping, std::size_t block,
                                   int exponent = 1);

}  // namespace anyonforge
