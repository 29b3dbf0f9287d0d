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

#include "anyonforge/fusion_space.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace anyonforge {

FusionBasis::FusionBasis(std::vector<Charge> leaves, Charge total,
                         std::vector<FusionTree> trees)
    : leaves_(std::move(leaves)), total_(total), trees_(std::move(trees)) {
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    index_.emplace(trees_[i].internals, i);
  }
}

std::optional<std::size_t> FusionBasis::index_of(
    const std::vector<Charge>& internals) const {
  auto it = index_.find(internals);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FusionBasis enumerate_basis(const AnyonModel& model,
                            const std::vector<Charge>& leaves, Charge total) {
  if (leaves.empty()) throw std::invalid_argument("enumerate_basis: no leaves");
  for (Charge c : leaves) model.require_valid(c);
  model.require_valid(total);

  std::vector<FusionTree> trees;
  std::vector<Charge> path{leaves[0]};
  // Depth-first over ascending fusion channels yields lexicographic order.
  std::function<void()> extend = [&]() {
    if (path.size() == leaves.size()) {
      if (path.back() == total) trees.push_back({leaves, path});
      return;
    }
    for (Charge c : model.fuse(path.back(), leaves[path.size()])) {
      path.push_back(c);
      extend();
      path.pop_back();
    }
  };
  extend();
  return FusionBasis(leaves, total, std::move(trees));
}

namespace {

BasisMap positive_exchange(const AnyonModel& model, const FusionBasis& basis,
                           int position) {
  const std::size_t p = static_cast<std::size_t>(position - 1);
  std::vector<Charge> swapped = basis.leaves();
  std::swap(swapped[p], swapped[p + 1]);
  BasisMap out{basis, enumerate_basis(model, swapped, basis.total()),
               Matrix()};
  out.matrix = Matrix::Zero(static_cast<Eigen::Index>(out.target.dim()),
                            static_cast<Eigen::Index>(basis.dim()));
  const Charge a = basis.leaves()[p];
  const Charge b = basis.leaves()[p + 1];

  for (std::size_t col = 0; col < basis.dim(); ++col) {
    const auto& in = basis.trees()[col].internals;
    const Charge x = (p == 0) ? Charge(0) : in[p - 1];
    const Charge y = in[p];
    const Charge z = in[p + 1];
    // |(x a)_y b; z> = sum_c F^{xab}_z[y,c] |x (ab)_c; z>
    //   -> R^{ab}_c |x (ba)_c; z> = sum_y' conj(F^{xba}_z[y',c]) |(x b)_y' a>
    for (Charge y2 : model.fuse(x, b)) {
      if (!model.admissible(y2, a, z)) continue;
      std::vector<Charge> out_internals = in;
      out_internals[p] = y2;
      auto row = out.target.index_of(out_internals);
      if (!row) continue;
      Complex amp = 0.0;
      for (Charge c : model.fuse(a, b)) {
        if (!model.admissible(x, c, z)) continue;
        amp += model.f_entry(x, a, b, z, y, c) * model.r_symbol(a, b, c) *
               std::conj(model.f_entry(x, b, a, z, y2, c));
      }
      out.matrix(static_cast<Eigen::Index>(*row),
                 static_cast<Eigen::Index>(col)) = amp;
    }
  }
  return out;
}

}  // namespace

BasisMap braid_generator(const AnyonModel& model, const FusionBasis& basis,
                         int position, int exponent) {
  const int n = static_cast<int>(basis.leaves().size());
  if (position < 1 || position >= n) {
    throw std::out_of_range("braid_generator: position " +
                            std::to_string(position) + " outside 1.." +
                            std::to_string(n - 1));
  }
  if (exponent != 1 && exponent != -1) {
    throw std::invalid_argument("braid_generator: exponent must be +1 or -1");
  }
  if (exponent == 1) return positive_exchange(model, basis, position);

  // sigma^{-1} on L is the adjoint of sigma acting on the swapped leaves.
  std::vector<Charge> swapped = basis.leaves();
  std::swap(swapped[position - 1], swapped[position]);
  BasisMap forward = positive_exchange(
      model, enumerate_basis(model, swapped, basis.total()), position);
  return BasisMap{basis, std::move(forward.source), forward.matrix.adjoint()};
}

Grouping Grouping::singletons(std::size_t n_leaves) {
  Grouping g;
  for (std::size_t i = 0; i < n_leaves; ++i) g.blocks.push_back({i});
  g.block_charges.assign(n_leaves, std::nullopt);
  return g;
}

Grouping Grouping::from_sizes(const std::vector<std::size_t>& sizes) {
  Grouping g;
  std::size_t next = 0;
  for (std::size_t s : sizes) {
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < s; ++i) block.push_back(next++);
    g.blocks.push_back(std::move(block));
  }
  g.block_charges.assign(sizes.size(), std::nullopt);
  return g;
}

std::vector<std::size_t> Grouping::block_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) out.push_back(b.size());
  return out;
}

void Grouping::validate(std::size_t n_leaves) const {
  std::size_t next = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("grouping: empty block");
    for (std::size_t idx : block) {
      if (idx != next) {
        throw std::invalid_argument(
            "grouping: blocks must be contiguous and cover leaves in order");
      }
      ++next;
    }
  }
  if (next != n_leaves) {
    throw std::invalid_argument("grouping covers " + std::to_string(next) +
                                " of " + std::to_string(n_leaves) + " leaves");
  }
  if (!block_charges.empty() && block_charges.size() != blocks.size()) {
    throw std::invalid_argument("grouping: block_charges size mismatch");
  }
}

Grouping Grouping::exchanged(std::size_t block) const {
  if (block + 1 >= blocks.size()) {
    throw std::out_of_range("grouping: no block after " + std::to_string(block));
  }
  auto sizes = block_sizes();
  std::swap(sizes[block], sizes[block + 1]);
  Grouping out = from_sizes(sizes);
  if (!block_charges.empty()) {
    out.block_charges = block_charges;
    std::swap(out.block_charges[block], out.block_charges[block + 1]);
  }
  return out;
}

std::vector<std::size_t> GroupedBasis::sector(
    const std::vector<Charge>& block_charges) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].block_charges == block_charges) out.push_back(i);
  }
  return out;
}

std::map<std::vector<Charge>, std::size_t> GroupedBasis::sector_dims() const {
  std::map<std::vector<Charge>, std::size_t> out;
  for (const auto& s : states) ++out[s.block_charges];
  return out;
}

std::optional<std::size_t> GroupedBasis::index_of(
    const GroupedState& state) const {
  auto it = std::find(states.begin(), states.end(), state);
  if (it == states.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states.begin());
}

namespace {

using Partial = std::map<std::vector<Charge>, Complex>;

// State of (X (l_0 ... l_j)_{beta_j})_Y in left-comb form, where `prefix`
// holds the left-comb expansion of the X part.
Partial attach_block(const AnyonModel& model, const Partial& prefix, Charge x,
                     const std::vector<Charge>& leaves,
                     const std::vector<Charge>& internals, std::size_t j,
                     Charge y) {
  Partial out;
  if (j == 0) {
    if (!model.admissible(x, leaves[0], y)) return out;
    for (const auto& [seq, amp] : prefix) {
      auto next = seq;
      next.push_back(y);
      out[next] += amp;
    }
    return out;
  }
  // |X (B l_j)_{beta_j}; Y> = sum_e conj(F^{X beta_{j-1} l_j}_Y[e, beta_j])
  //                           |(X B)_e l_j; Y>
  for (Charge e : model.fuse(x, internals[j - 1])) {
    const Complex coef = std::conj(
        model.f_entry(x, internals[j - 1], leaves[j], y, e, internals[j]));
    if (coef == 0.0) continue;
    const Partial sub =
        attach_block(model, prefix, x, leaves, internals, j - 1, e);
    for (const auto& [seq, amp] : sub) {
      auto next = seq;
      next.push_back(y);
      out[next] += coef * amp;
    }
  }
  return out;
}

}  // namespace

Vector expand_grouped_state(const AnyonModel& model, const FusionBasis& fine,
                            const Grouping& grouping,
                            const GroupedState& state) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(fine.dim()));
  const auto& leaves = fine.leaves();
  auto block_leaves = [&](std::size_t b) {
    std::vector<Charge> out;
    for (std::size_t idx : grouping.blocks[b]) out.push_back(leaves[idx]);
    return out;
  };

  Partial partial;
  partial[state.block_internals[0]] = 1.0;
  Charge x = state.coarse_internals[0];
  for (std::size_t b = 1; b < grouping.blocks.size(); ++b) {
    const auto bl = block_leaves(b);
    const Charge y = state.coarse_internals[b];
    partial = attach_block(model, partial, x, bl, state.block_internals[b],
                           bl.size() - 1, y);
    x = y;
  }
  for (const auto& [seq, amp] : partial) {
    if (amp == 0.0) continue;
    auto idx = fine.index_of(seq);
    if (!idx) throw std::logic_error("regroup produced an inadmissible tree");
    v(static_cast<Eigen::Index>(*idx)) += amp;
  }
  return v;
}

GroupedBasis regroup(const AnyonModel& model, const FusionBasis& basis,
                     const Grouping& grouping) {
  grouping.validate(basis.leaves().size());
  const std::size_t n_blocks = grouping.blocks.size();

  // Per block: left-comb trees of its own leaves, keyed by block charge.
  std::vector<std::map<Charge, std::vector<std::vector<Charge>>>> block_trees(
      n_blocks);
  for (std::size_t b = 0; b < n_blocks; ++b) {
    std::vector<Charge> bl;
    for (std::size_t idx : grouping.blocks[b]) bl.push_back(basis.leaves()[idx]);
    for (Charge t : model.charges()) {
      if (!grouping.block_charges.empty() && grouping.block_charges[b] &&
          *grouping.block_charges[b] != t) {
        continue;
      }
      const FusionBasis sub = enumerate_basis(model, bl, t);
      for (const auto& tree : sub.trees()) {
        block_trees[b][t].push_back(tree.internals);
      }
    }
  }

  GroupedBasis out;
  out.fine = basis;
  out.grouping = grouping;

  std::vector<Charge> charges(n_blocks);
  std::function<void(std::size_t)> pick_charges = [&](std::size_t b) {
    if (b == n_blocks) {
      const FusionBasis coarse = enumerate_basis(model, charges, basis.total());
      if (coarse.dim() == 0) return;
      std::vector<std::vector<Charge>> internals(n_blocks);
      std::function<void(std::size_t)> pick_internals = [&](std::size_t i) {
        if (i == n_blocks) {
          for (const auto& tree : coarse.trees()) {
            out.states.push_back({charges, internals, tree.internals});
          }
          return;
        }
        for (const auto& seq : block_trees[i].at(charges[i])) {
          internals[i] = seq;
          pick_internals(i + 1);
        }
      };
      pick_internals(0);
      return;
    }
    for (const auto& [t, trees] : block_trees[b]) {
      charges[b] = t;
      pick_charges(b + 1);
    }
  };
  pick_charges(0);

  out.to_fine = Matrix::Zero(static_cast<Eigen::Index>(basis.dim()),
                             static_cast<Eigen::Index>(out.states.size()));
  for (std::size_t j = 0; j < out.states.size(); ++j) {
    out.to_fine.col(static_cast<Eigen::Index>(j)) =
        expand_grouped_state(model, basis, grouping, out.states[j]);
  }
  return out;
}

std::vector<std::pair<int, int>> composite_exchange_letters(
    const Grouping& grouping, std::size_t block, int exponent) {
  if (block + 1 >= grouping.blocks.size()) {
    throw std::out_of_range("composite exchange: block " +
                            std::to_string(block) + " has no right neighbour");
  }
  if (exponent != 1 && exponent != -1) {
    throw std::invalid_argument("composite exchange: exponent must be +1 or -1");
  }
  if (exponent == -1) {
    auto forward = composite_exchange_letters(grouping.exchanged(block), block, 1);
    std::reverse(forward.begin(), forward.end());
    for (auto& letter : forward) letter.second = -1;
    return forward;
  }
  const int start = static_cast<int>(grouping.blocks[block].front());
  const int m = static_cast<int>(grouping.blocks[block].size());
  const int n = static_cast<int>(grouping.blocks[block + 1].size());
  std::vector<std::pair<int, int>> letters;
  // Each strand of the right block, leftmost first, crosses the whole left
  // block moving leftwards.
  for (int j = 0; j < n; ++j) {
    const int from = start + m + j;  // 0-based current index of the strand
    for (int t = from; t > start + j; --t) letters.emplace_back(t, 1);
  }
  return letters;
}

BasisMap composite_braid_generator(const AnyonModel& model,
                                   const FusionBasis& basis,
                                   const Grouping& grouping, std::size_t block,
                                   int exponent) {
  grouping.validate(basis.leaves().size());
  const auto letters = composite_exchange_letters(grouping, block, exponent);
  BasisMap out{basis, basis,
               Matrix::Identity(static_cast<Eigen::Index>(basis.dim()),
                                static_cast<Eigen::Index>(basis.dim()))};
  for (auto [position, e] : letters) {
    BasisMap step = braid_generator(model, out.target, position, e);
    out.matrix = step.matrix * out.matrix;
    out.target = std::move(step.target);
  }
  return out;
}

}  // namespace anyonforge
