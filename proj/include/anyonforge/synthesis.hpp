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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "anyonforge/braid.hpp"
#include "anyonforge/encodings.hpp"

namespace anyonforge {

class TargetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PhasePolicy { kMustBeOne, kExact, kFree, kMustCancelWithPartner };

const char* to_string(PhasePolicy policy);

/// One requirement on how a closed braid U acts on a fine-basis input state.
///
///   kPhaseOne:  |<out|U|in> - 1| must vanish.
///   kValue:     <out|U|in> must equal `value`; scored as
///               sqrt(1 - Re(conj(value) <out|U|in>)).
///   kMap:       U|in> must land on out up to a phase; scored as
///               sqrt(1 - |<out|U|in>|).
///   kRecord:    <out|U|in> is reported but not scored.
struct SectorConstraint {
  enum class Kind { kPhaseOne, kValue, kMap, kRecord };

  std::string label;
  Kind kind = Kind::kRecord;
  PhasePolicy policy = PhasePolicy::kFree;
  Vector input;
  Vector output;
  Complex value{1.0, 0.0};
};

/// Logical unitary from span(basis) to span(output_basis), compared up to
/// global phase. An empty output_basis means the same as basis.
struct ExactBlock {
  Matrix basis;
  Matrix target;
  Matrix output_basis;

  const Matrix& output() const {
    return output_basis.size() == 0 ? basis : output_basis;
  }
};

struct SynthesisTarget {
  enum class Kind { kExactUnitary, kSectorMap };

  Kind kind = Kind::kSectorMap;
  std::string id;
  int level = 0;
  Arrangement arrangement;
  Charge total{0};
  /// Block that moves under weave discipline.
  std::size_t mobile_block = 0;
  /// Inclusive range of block slots that braid letters may touch.
  std::size_t window_first = 0;
  std::size_t window_last = 0;
  std::vector<SectorConstraint> sectors;
  std::optional<ExactBlock> exact;
  /// Code used for leakage reporting; same leaves as the arrangement.
  CodeSpace code;

  /// Number of blocks, i.e. the strand count of braid words on this target.
  int strand_count() const {
    return static_cast<int>(arrangement.grouping.block_count());
  }
};

/// Controlled-phase core: phase -1 on the computational |11> state, free
/// phase on the non-computational partner, phase 1 on the other sectors.
SynthesisTarget make_target_P(const AnyonModel& model);
SynthesisTarget make_target_P(const AnyonModel& model, QubitCharges charges);

/// Sends |11q3> into the sector where the joined (q1 q2) block has charge 1
/// (B1) or 0 (B3), on the three-qubit register.
SynthesisTarget make_target_B1(const AnyonModel& model);
SynthesisTarget make_target_B3(const AnyonModel& model);

/// Pairing exchange turning two four-anyon qubits into the merged two-qubit
/// register, as a logical identity between the two codes. The mobile block
/// is a_4; the outer triples are composites.
SynthesisTarget make_target_E(const AnyonModel& model);
SynthesisTarget make_target_E(const AnyonModel& model, QubitCharges charges);

/// Single-qubit gate on the four-anyon code, up to global phase.
SynthesisTarget make_target_single_qubit(const AnyonModel& model,
                                         std::string id, const Matrix& gate);
SynthesisTarget make_target_single_qubit(const AnyonModel& model,
                                         std::string id, const Matrix& gate,
                                         QubitCharges charges);

/// Builds a target from its id: "P", "B1", "B3", "E", "identity", "NOT".
SynthesisTarget make_target(const AnyonModel& model, const std::string& id);

struct SearchConfig {
  int max_length = 12;
  double tolerance = 1e-9;
  double phase_tolerance = 1e-9;
  bool weave_only = true;
  /// Enumerate only freely reduced words.
  bool dedup = true;
  /// Skip words whose exchange counts already rule out unit phases.
  bool prefilter = true;
  int workers = 1;

  void validate() const;
};

struct DepthStats {
  int length = 0;
  double best_distance = 0.0;
  std::uint64_t nodes_explored = 0;
  double seconds = 0.0;
};

struct ScoreReport {
  double distance = 0.0;
  double leakage = 0.0;
  std::map<std::string, Complex> sector_phases;
  std::map<std::pair<std::size_t, std::size_t>, ExchangeCount> exchange_counts;
};

struct SynthesisResult {
  std::string target_id;
  BraidWord braid;
  double distance = 0.0;
  double leakage = 0.0;
  std::map<std::string, Complex> sector_phases;
  std::map<std::pair<std::size_t, std::size_t>, ExchangeCount> exchange_counts;
  bool converged = false;
  std::uint64_t nodes_explored = 0;
  std::vector<DepthStats> curve;
};

/// Scores a closed braid against a target from scratch. Throws
/// std::invalid_argument if the braid leaves blocks permuted.
ScoreReport score_braid(const AnyonModel& model, const SynthesisTarget& target,
                        const BraidWord& braid);

/// Iterative-deepening enumeration of braid words up to config.max_length.
/// Words that meet the tolerance win by length, then letter order; otherwise
/// the lowest score wins, then length, then letter order. Scores are compared
/// in buckets of 1e-11 so that rounding noise cannot favour a longer word for
/// the same operator. The result does not depend on config.workers.
SynthesisResult search(const AnyonModel& model, const SynthesisTarget& target,
                       const SearchConfig& config);

/// Allowed moves of the enumeration, exposed for testing.
struct MoveTable {
  struct Move {
    BraidLetter letter;
    std::size_t next_state;
  };
  /// Block order (original ids) of each reachable arrangement; state 0 is
  /// the starting arrangement.
  std::vector<std::vector<std::size_t>> states;
  std::vector<std::vector<Move>> moves;
};

MoveTable build_move_table(const SynthesisTarget& target, bool weave_only);

/// Exchange-count prefilter: a word can only have unit phase on every
/// kPhaseOne sector if each listed signed count is a multiple of modulus.
struct CountFilter {
  std::pair<std::size_t, std::size_t> blocks;
  int modulus = 0;
};

std::vector<CountFilter> derive_count_filters(const AnyonModel& model,
                                              const SynthesisTarget& target,
                                              double phase_tolerance);

bool passes_count_filters(const std::vector<CountFilter>& filters,
                          const BraidWord& word, const Grouping& grouping);

}  // namespace anyonforge
