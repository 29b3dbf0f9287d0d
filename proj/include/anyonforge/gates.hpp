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

#include <map>
#include <string>
#include <vector>

#include "anyonforge/synthesis.hpp"

namespace anyonforge {

/// A synthesized braid used as a building block of a logical gate. The word
/// is block-level on the component's own target arrangement.
struct Component {
  std::string id;
  BraidWord braid;
  double distance = 0.0;

  static Component from_result(const SynthesisResult& result) {
    return {result.target_id, result.braid, result.distance};
  }
};

struct ComponentDistance {
  std::string id;
  double distance = 0.0;
};

/// Half-open range of strand-level letters that came from one component.
struct BraidSegment {
  std::string label;
  std::size_t first = 0;
  std::size_t length = 0;
};

struct GateReport {
  std::string gate;
  int level = 0;
  /// Computational-subspace block, bit-string order.
  Matrix logical_matrix;
  Matrix target;
  double distance_to_target = 0.0;
  double leakage = 0.0;
  std::vector<ComponentDistance> component_budget;
  /// Number of elementary strand exchanges in the assembled braid.
  int braid_length_total = 0;
  /// distance_to_target <= sum of component distances + 1e-9.
  bool bound_ok = false;

  std::vector<Charge> leaves;
  BraidWord braid;  // strand level
  std::vector<BraidSegment> segments;

  /// Largest |L_ii - 1| over inputs the target leaves alone, and the norm of
  /// the off-diagonal part of L.
  double trivial_phase_deviation = 0.0;
  double off_diagonal_norm = 0.0;

  double budget_total() const;
};

constexpr double kCompositionSlack = 1e-9;

/// CZ from a P braid on the two-qubit dense register.
GateReport assemble_controlled_phase(const AnyonModel& model,
                                     const Component& p);

/// B1; P on (p1, q3); B1^-1; B3; P^-1; B3^-1 on the three-qubit register.
/// The P word is reused verbatim on the grouping [a1][q1 q2][q3][a8].
GateReport assemble_ccz(const AnyonModel& model, const Component& b1,
                        const Component& p, const Component& b3,
                        Complex phase = -1.0);

/// Only B1; P; B1^-1. Leaves a controlled phase on every input with p1 = 1,
/// so the trivial-sector check must fail.
GateReport assemble_ccz_first_half(const AnyonModel& model, const Component& b1,
                                   const Component& p, Complex phase = -1.0);

enum class ConversionDirection { kMerge, kSplit };

/// Merge: two four-anyon qubits into the dense register through E.
/// Split: the reverse, through E^-1. Target is the logical identity.
GateReport convert_registers(const AnyonModel& model,
                             ConversionDirection direction, const Component& e);

/// Logical matrix of split after merge, and its distance to identity.
struct RoundTrip {
  Matrix logical_matrix;
  double distance = 0.0;
};

RoundTrip merge_then_split(const AnyonModel& model, const Component& e);

}  // namespace anyonforge
