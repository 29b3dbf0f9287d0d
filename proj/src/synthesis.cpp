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

#include "anyonforge/synthesis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

namespace anyonforge {

namespace {

constexpr Charge kVacuum{0};
constexpr Charge kOne{2};

Vector state_vector(const CodeSpace& code, std::size_t idx) {
  return code.basis.to_fine.col(static_cast<Eigen::Index>(idx));
}

SynthesisTarget base_target(const AnyonModel& model, std::string id,
                            const CodeSpace& code, const Grouping& grouping,
                            std::size_t mobile, std::size_t first,
                            std::size_t last) {
  SynthesisTarget t;
  t.id = std::move(id);
  t.level = model.level();
  t.arrangement = Arrangement::initial(code.basis.fine.leaves(), grouping);
  t.total = code.basis.fine.total();
  t.mobile_block = mobile;
  t.window_first = first;
  t.window_last = last;
  t.code = code;
  return t;
}

SynthesisTarget make_pair_charge_target(const AnyonModel& model,
                                        std::string id, Charge joined) {
  const QubitCharges charges = default_charges(model);
  if (!model.admissible(kOne, kOne, joined) ||
      !model.admissible(charges.a, joined, charges.a)) {
    throw TargetError("SU(2)_" + std::to_string(model.level()) +
                      " has no channel where two charge-1 qubits join to " +
                      to_string(joined) + " next to a = " +
                      to_string(charges.a));
  }
  const CodeSpace code = multi_qubit_code(model, 3, charges);
  SynthesisTarget t =
      base_target(model, std::move(id), code, code.basis.grouping, 0, 0, 2);
  t.kind = SynthesisTarget::Kind::kSectorMap;
  const Charge a = charges.a;

  for (const auto& [bits, idx] : code.computational) {
    SectorConstraint c;
    c.label = "q=" + bits;
    c.input = state_vector(code, idx);
    c.policy = PhasePolicy::kMustCancelWithPartner;
    if (bits.rfind("11", 0) != 0) {
      c.kind = SectorConstraint::Kind::kRecord;
      c.output = c.input;
      t.sectors.push_back(std::move(c));
      continue;
    }
    // |a (q1 q2)_p; a> = sum_x conj(F^{a 1 1}_a[x, p]) |(a q1)_x q2; a>
    c.kind = SectorConstraint::Kind::kMap;
    c.output = Vector::Zero(c.input.size());
    const GroupedState& base = code.basis.states[idx];
    for (Charge x : model.fuse(a, kOne)) {
      const Complex coef = std::conj(model.f_entry(a, kOne, kOne, a, x, joined));
      if (coef == 0.0) continue;
      GroupedState s = base;
      s.coarse_internals[1] = x;
      auto j = code.basis.index_of(s);
      if (!j) continue;
      c.output += coef * state_vector(code, *j);
    }
    const double norm = c.output.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
      throw TargetError("joined-charge state is not normalized");
    }
    t.sectors.push_back(std::move(c));
  }
  return t;
}

}  // namespace

const char* to_string(PhasePolicy policy) {
  switch (policy) {
    case PhasePolicy::kMustBeOne:
      return "must_be_one";
    case PhasePolicy::kExact:
      return "exact";
    case PhasePolicy::kFree:
      return "free";
    case PhasePolicy::kMustCancelWithPartner:
      return "must_cancel_with_partner";
  }
  return "unknown";
}

SynthesisTarget make_target_P(const AnyonModel& model) {
  return make_target_P(model, default_charges(model));
}

SynthesisTarget make_target_P(const AnyonModel& model, QubitCharges charges) {
  const CodeSpace code = multi_qubit_code(model, 2, charges);
  SynthesisTarget t = base_target(model, "P", code, code.basis.grouping, 0, 0, 2);
  t.kind = SynthesisTarget::Kind::kSectorMap;

  std::size_t idx11 = 0;
  for (const auto& [bits, idx] : code.computational) {
    SectorConstraint c;
    c.label = "q=" + bits;
    c.input = state_vector(code, idx);
    c.output = c.input;
    if (bits == "11") {
      idx11 = idx;
      c.kind = SectorConstraint::Kind::kValue;
      c.policy = PhasePolicy::kExact;
      c.value = -1.0;
    } else {
      c.kind = SectorConstraint::Kind::kPhaseOne;
      c.policy = PhasePolicy::kMustBeOne;
    }
    t.sectors.push_back(std::move(c));
  }
  for (std::size_t j :
       code.basis.sector(code.basis.states[idx11].block_charges)) {
    if (j == idx11) continue;
    SectorConstraint c;
    c.label = "q=11/nc" + std::to_string(j);
    c.kind = SectorConstraint::Kind::kRecord;
    c.policy = PhasePolicy::kFree;
    c.input = state_vector(code, j);
    c.output = c.input;
    t.sectors.push_back(std::move(c));
  }
  return t;
}

SynthesisTarget make_target_B1(const AnyonModel& model) {
  return make_pair_charge_target(model, "B1", kOne);
}

SynthesisTarget make_target_B3(const AnyonModel& model) {
  return make_pair_charge_target(model, "B3", kVacuum);
}

SynthesisTarget make_target_E(const AnyonModel& model) {
  return make_target_E(model, default_charges(model));
}

SynthesisTarget make_target_E(const AnyonModel& model, QubitCharges charges) {
  const CodeSpace product = product_code(model, charges);
  const CodeSpace merged = merged_code(model, charges);
  SynthesisTarget t = base_target(model, "E", product,
                                  Grouping::from_sizes({3, 1, 1, 3}), 1, 1, 3);
  t.kind = SynthesisTarget::Kind::kExactUnitary;
  t.exact = ExactBlock{product.computational_vectors(), Matrix::Identity(4, 4),
                       merged.computational_vectors()};
  for (std::size_t i = 0; i < product.computational.size(); ++i) {
    SectorConstraint c;
    c.label = "q=" + product.computational[i].first;
    c.kind = SectorConstraint::Kind::kRecord;
    c.policy = PhasePolicy::kFree;
    c.input = state_vector(product, product.computational[i].second);
    c.output = state_vector(merged, merged.computational[i].second);
    t.sectors.push_back(std::move(c));
  }
  return t;
}

SynthesisTarget make_target_single_qubit(const AnyonModel& model,
                                         std::string id, const Matrix& gate) {
  return make_target_single_qubit(model, std::move(id), gate,
                                  default_charges(model));
}

SynthesisTarget make_target_single_qubit(const AnyonModel& model,
                                         std::string id, const Matrix& gate,
                                         QubitCharges charges) {
  if (gate.rows() != 2 || gate.cols() != 2) {
    throw TargetError("single-qubit target must be 2x2");
  }
  if (unitarity_residual(gate) > 1e-12) {
    throw TargetError("single-qubit target is not unitary");
  }
  const CodeSpace code =
      single_qubit_code(model, SingleQubitScheme::kFourAnyon, charges);
  SynthesisTarget t = base_target(model, std::move(id), code,
                                  Grouping::singletons(4), 0, 0, 2);
  t.kind = SynthesisTarget::Kind::kExactUnitary;
  t.exact = ExactBlock{code.computational_vectors(), gate, Matrix()};
  return t;
}

SynthesisTarget make_target(const AnyonModel& model, const std::string& id) {
  if (id == "P") return make_target_P(model);
  if (id == "B1") return make_target_B1(model);
  if (id == "B3") return make_target_B3(model);
  if (id == "E") return make_target_E(model);
  if (id == "identity") {
    return make_target_single_qubit(model, id, Matrix::Identity(2, 2));
  }
  if (id == "NOT") {
    Matrix x = Matrix::Zero(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    return make_target_single_qubit(model, id, x);
  }
  throw TargetError("unknown target id '" + id + "'");
}

void SearchConfig::validate() const {
  if (max_length < 0) throw std::invalid_argument("max_length must be >= 0");
  if (!(tolerance > 0.0) || !(phase_tolerance > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
}

namespace {

double constraint_term(const SectorConstraint& c, Complex amp) {
  switch (c.kind) {
    case SectorConstraint::Kind::kPhaseOne:
      return std::abs(amp - 1.0);
    case SectorConstraint::Kind::kValue:
      return std::sqrt(std::max(0.0, 1.0 - (std::conj(c.value) * amp).real()));
    case SectorConstraint::Kind::kMap:
      return std::sqrt(std::max(0.0, 1.0 - std::abs(amp)));
    case SectorConstraint::Kind::kRecord:
      return 0.0;
  }
  return 0.0;
}

// Score of a closed operator given as its action on the scored inputs, which
// are laid out as [scored constraint inputs..., exact basis columns...].
double score_columns(const SynthesisTarget& target,
                     const std::vector<std::size_t>& scored, const Matrix& v) {
  double score = 0.0;
  Eigen::Index col = 0;
  for (std::size_t i : scored) {
    const auto& c = target.sectors[i];
    const Complex amp = c.output.dot(v.col(col++));
    score = std::max(score, constraint_term(c, amp));
  }
  if (target.exact) {
    const Eigen::Index n = target.exact->basis.cols();
    const Matrix logical = target.exact->output().adjoint() * v.middleCols(col, n);
    score = std::max(score, distance(logical, target.exact->target));
  }
  return score;
}

std::vector<std::size_t> scored_constraints(const SynthesisTarget& target) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < target.sectors.size(); ++i) {
    if (target.sectors[i].kind != SectorConstraint::Kind::kRecord) {
      out.push_back(i);
    }
  }
  return out;
}

Matrix input_columns(const SynthesisTarget& target,
                     const std::vector<std::size_t>& scored) {
  Eigen::Index n = static_cast<Eigen::Index>(scored.size());
  if (target.exact) n += target.exact->basis.cols();
  const Eigen::Index rows =
      scored.empty() ? (target.exact ? target.exact->basis.rows() : 0)
                     : target.sectors[scored.front()].input.size();
  Matrix v(rows, n);
  Eigen::Index col = 0;
  for (std::size_t i : scored) v.col(col++) = target.sectors[i].input;
  if (target.exact) {
    v.middleCols(col, target.exact->basis.cols()) = target.exact->basis;
  }
  return v;
}

}  // namespace

ScoreReport score_braid(const AnyonModel& model, const SynthesisTarget& target,
                        const BraidWord& braid) {
  const Matrix u = evaluate_closed(model, target.arrangement, target.total, braid);
  ScoreReport report;
  const auto scored = scored_constraints(target);
  report.distance = score_columns(target, scored, u * input_columns(target, scored));
  if (target.exact && target.exact->output_basis.size() != 0) {
    const Matrix& out = target.exact->output_basis;
    const Eigen::Index d = out.rows();
    report.leakage = operator_norm((Matrix::Identity(d, d) - out * out.adjoint()) *
                                   u * target.exact->basis);
  } else {
    report.leakage =
        leakage(target.code.to_code_basis(u), target.code).leakage_norm;
  }
  for (const auto& c : target.sectors) {
    report.sector_phases[c.label] = c.output.dot(u * c.input);
  }
  report.exchange_counts = exchange_counts(braid, target.arrangement.grouping);
  return report;
}

MoveTable build_move_table(const SynthesisTarget& target, bool weave_only) {
  const std::size_t n_blocks = target.arrangement.grouping.block_count();
  if (target.window_last >= n_blocks || target.window_first > target.window_last) {
    throw std::invalid_argument("search window outside the block range");
  }
  if (target.mobile_block < target.window_first ||
      target.mobile_block > target.window_last) {
    throw std::invalid_argument("mobile block outside the search window");
  }
  MoveTable table;
  table.states.push_back(target.arrangement.block_ids);
  std::map<std::vector<std::size_t>, std::size_t> seen{{table.states[0], 0}};
  for (std::size_t s = 0; s < table.states.size(); ++s) {
    std::vector<MoveTable::Move> moves;
    for (std::size_t slot = target.window_first; slot < target.window_last;
         ++slot) {
      const auto order = table.states[s];
      if (weave_only && order[slot] != target.mobile_block &&
          order[slot + 1] != target.mobile_block) {
        continue;
      }
      auto next = order;
      std::swap(next[slot], next[slot + 1]);
      auto [it, inserted] = seen.emplace(next, table.states.size());
      if (inserted) table.states.push_back(next);
      for (int e : {-1, 1}) {
        moves.push_back({{static_cast<int>(slot) + 1, e}, it->second});
      }
    }
    table.moves.push_back(std::move(moves));
  }
  return table;
}

namespace {

// Mobile block winds once around the block in `slot` and comes back.
BraidWord winding_word(const SynthesisTarget& target, std::size_t slot) {
  BraidWord w{target.strand_count(), {}};
  const int s0 = static_cast<int>(target.mobile_block);
  const int j = static_cast<int>(slot);
  if (j > s0) {
    for (int p = s0 + 1; p <= j - 1; ++p) w.letters.push_back({p, 1});
    w.letters.push_back({j, 1});
    w.letters.push_back({j, 1});
    for (int p = j - 1; p >= s0 + 1; --p) w.letters.push_back({p, -1});
  } else {
    for (int p = s0; p >= j + 2; --p) w.letters.push_back({p, 1});
    w.letters.push_back({j + 1, 1});
    w.letters.push_back({j + 1, 1});
    for (int p = j + 2; p <= s0; ++p) w.letters.push_back({p, -1});
  }
  return w;
}

}  // namespace

std::vector<CountFilter> derive_count_filters(const AnyonModel& model,
                                              const SynthesisTarget& target,
                                              double phase_tolerance) {
  std::vector<CountFilter> filters;
  for (const auto& c : target.sectors) {
    if (c.kind != SectorConstraint::Kind::kPhaseOne) continue;
    std::vector<std::pair<std::size_t, Complex>> nontrivial;
    bool abelian = true;
    for (std::size_t slot = target.window_first; slot <= target.window_last;
         ++slot) {
      if (slot == target.mobile_block) continue;
      const Matrix u = evaluate_closed(model, target.arrangement, target.total,
                                       winding_word(target, slot));
      const Complex w = c.output.dot(u * c.input);
      if (std::abs(std::abs(w) - 1.0) > 1e-9) abelian = false;
      if (std::abs(w - 1.0) > 1e-9) nontrivial.emplace_back(slot, w);
    }
    if (!abelian || nontrivial.size() != 1) continue;
    const Complex w = nontrivial.front().second;
    int order = 0;
    Complex power = 1.0;
    for (int m = 1; m <= 64; ++m) {
      power *= w;
      if (std::abs(power - 1.0) < 1e-9) {
        order = m;
        break;
      }
    }
    if (order == 0) continue;
    // Only sound if no other winding power can pass the phase check.
    if (phase_tolerance >= 2.0 * std::sin(std::numbers::pi / order)) continue;
    const std::size_t other = target.arrangement.block_ids[nontrivial.front().first];
    const auto key = std::minmax(target.mobile_block, other);
    filters.push_back({{key.first, key.second}, 2 * order});
  }
  return filters;
}

bool passes_count_filters(const std::vector<CountFilter>& filters,
                          const BraidWord& word, const Grouping& grouping) {
  if (filters.empty()) return true;
  const auto counts = exchange_counts(word, grouping);
  for (const auto& f : filters) {
    auto it = counts.find(f.blocks);
    const int n = it == counts.end() ? 0 : it->second.signed_count;
    if (n % f.modulus != 0) return false;
  }
  return true;
}

namespace {

struct Candidate {
  double score = INFINITY;
  std::vector<BraidLetter> letters;
  bool valid = false;
};

// Scores closer than this are the same operator up to rounding; comparing
// bucketed scores keeps the order strict-weak, so the winner does not depend
// on how the prefixes were split among workers.
constexpr double kScoreQuantum = 1e-11;

long long score_bucket(double score) {
  return std::llround(std::min(score, 1e6) / kScoreQuantum);
}

// Total order used to pick the result; see search() in the header.
bool better(const Candidate& x, const Candidate& y, double tol) {
  if (x.valid != y.valid) return x.valid;
  const bool mx = x.score <= tol, my = y.score <= tol;
  if (mx != my) return mx;
  const long long bx = score_bucket(x.score), by = score_bucket(y.score);
  if (mx) {
    if (x.letters.size() != y.letters.size()) {
      return x.letters.size() < y.letters.size();
    }
    if (bx != by) return bx < by;
  } else {
    if (bx != by) return bx < by;
    if (x.letters.size() != y.letters.size()) {
      return x.letters.size() < y.letters.size();
    }
  }
  return x.letters < y.letters;
}

struct Node {
  std::vector<BraidLetter> letters;
  std::size_t state = 0;
  Matrix v;
  std::vector<int> counts;
};

class Enumerator {
 public:
  Enumerator(const AnyonModel& model, const SynthesisTarget& target,
             const SearchConfig& config)
      : target_(target), config_(config) {
    table_ = build_move_table(target, config.weave_only);
    // Arrangements for each state, reached by BFS order of the table.
    arrangements_.resize(table_.states.size());
    std::vector<bool> known(table_.states.size(), false);
    arrangements_[0] = target.arrangement;
    known[0] = true;
    for (std::size_t s = 0; s < table_.states.size(); ++s) {
      for (const auto& m : table_.moves[s]) {
        if (!known[m.next_state]) {
          arrangements_[m.next_state] = arrangements_[s].exchanged(
              static_cast<std::size_t>(m.letter.position - 1));
          known[m.next_state] = true;
        }
      }
    }
    transitions_.resize(table_.states.size());
    pair_index_.resize(table_.states.size());
    if (config.prefilter) {
      filters_ = derive_count_filters(model, target, config.phase_tolerance);
    }
    for (std::size_t s = 0; s < table_.states.size(); ++s) {
      const FusionBasis basis =
          enumerate_basis(model, arrangements_[s].leaves, target.total);
      for (const auto& m : table_.moves[s]) {
        const auto slot = static_cast<std::size_t>(m.letter.position - 1);
        transitions_[s].push_back(
            composite_braid_generator(model, basis, arrangements_[s].grouping,
                                      slot, m.letter.exponent)
                .matrix);
        const auto& order = table_.states[s];
        const auto key = std::minmax(order[slot], order[slot + 1]);
        int idx = -1;
        for (std::size_t f = 0; f < filters_.size(); ++f) {
          if (filters_[f].blocks == std::pair{key.first, key.second}) {
            idx = static_cast<int>(f);
          }
        }
        pair_index_[s].push_back(idx);
      }
    }
    scored_ = scored_constraints(target);
    root_.v = input_columns(target, scored_);
    root_.counts.assign(filters_.size(), 0);
  }

  const Node& root() const { return root_; }

  // Children of a node in letter order, honouring free reduction.
  template <typename Fn>
  void for_each_child(const Node& node, Fn&& fn) const {
    const auto& moves = table_.moves[node.state];
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const auto& m = moves[i];
      if (config_.dedup && !node.letters.empty()) {
        const auto& last = node.letters.back();
        if (last.position == m.letter.position &&
            last.exponent == -m.letter.exponent) {
          continue;
        }
      }
      Node child;
      child.letters = node.letters;
      child.letters.push_back(m.letter);
      child.state = m.next_state;
      child.v = transitions_[node.state][i] * node.v;
      child.counts = node.counts;
      // Every filter on this block pair sees the exchange.
      if (pair_index_[node.state][i] >= 0) {
        const auto& order = table_.states[node.state];
        const auto slot = static_cast<std::size_t>(m.letter.position - 1);
        const auto key = std::minmax(order[slot], order[slot + 1]);
        for (std::size_t f = 0; f < filters_.size(); ++f) {
          if (filters_[f].blocks == std::pair{key.first, key.second}) {
            child.counts[f] += m.letter.exponent;
          }
        }
      }
      fn(child);
    }
  }

  void consider(const Node& node, Candidate& best) const {
    if (node.state != 0) return;
    for (std::size_t f = 0; f < filters_.size(); ++f) {
      if (node.counts[f] % filters_[f].modulus != 0) return;
    }
    Candidate c{score_columns(target_, scored_, node.v), node.letters, true};
    if (better(c, best, config_.tolerance)) best = std::move(c);
  }

  // Visits every word of exactly `length` letters below `node`.
  void descend(const Node& node, std::size_t length, Candidate& best,
               std::uint64_t& nodes) const {
    if (node.letters.size() == length) {
      ++nodes;
      consider(node, best);
      return;
    }
    for_each_child(node, [&](const Node& child) {
      descend(child, length, best, nodes);
    });
  }

  void collect(const Node& node, std::size_t depth, std::vector<Node>& out) const {
    if (node.letters.size() == depth) {
      out.push_back(node);
      return;
    }
    for_each_child(node, [&](const Node& child) { collect(child, depth, out); });
  }

 private:
  const SynthesisTarget& target_;
  const SearchConfig& config_;
  MoveTable table_;
  std::vector<Arrangement> arrangements_;
  std::vector<std::vector<Matrix>> transitions_;
  std::vector<std::vector<int>> pair_index_;
  std::vector<CountFilter> filters_;
  std::vector<std::size_t> scored_;
  Node root_;
};

}  // namespace

SynthesisResult search(const AnyonModel& model, const SynthesisTarget& target,
                       const SearchConfig& config) {
  config.validate();
  if (target.level != model.level()) {
    throw TargetError("target built for a different level");
  }
  const Enumerator enumerator(model, target, config);
  constexpr std::size_t kSplitDepth = 3;

  SynthesisResult result;
  result.target_id = target.id;
  Candidate best;

  for (int length = 0; length <= config.max_length; ++length) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto len = static_cast<std::size_t>(length);
    std::vector<Node> prefixes;
    enumerator.collect(enumerator.root(), std::min(len, kSplitDepth), prefixes);

    const auto n_workers = static_cast<std::size_t>(config.workers);
    std::vector<Candidate> worker_best(n_workers);
    std::vector<std::uint64_t> worker_nodes(n_workers, 0);
    auto run = [&](std::size_t w) {
      for (std::size_t i = w; i < prefixes.size(); i += n_workers) {
        enumerator.descend(prefixes[i], len, worker_best[w], worker_nodes[w]);
      }
    };
    if (n_workers == 1) {
      run(0);
    } else {
      std::vector<std::jthread> threads;
      for (std::size_t w = 0; w < n_workers; ++w) threads.emplace_back(run, w);
    }

    std::uint64_t nodes = 0;
    for (std::size_t w = 0; w < n_workers; ++w) {
      nodes += worker_nodes[w];
      if (better(worker_best[w], best, config.tolerance)) best = worker_best[w];
    }
    result.nodes_explored += nodes;
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    result.curve.push_back({length, best.score, nodes, seconds});
    if (best.valid && best.score <= config.tolerance) break;
  }

  result.braid = BraidWord{target.strand_count(), best.letters};
  const ScoreReport report = score_braid(model, target, result.braid);
  result.distance = report.distance;
  result.leakage = report.leakage;
  result.sector_phases = report.sector_phases;
  result.exchange_counts = report.exchange_counts;
  result.converged = result.distance <= config.tolerance;
  return result;
}

}  // namespace anyonforge
