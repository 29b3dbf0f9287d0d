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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "anyonforge/fusion_space.hpp"

namespace anyonforge {

class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Charges of the outer (a) and paired (b) anyons of a code.
struct QubitCharges {
  Charge a{1};
  Charge b{1};
};

/// a = b = 1/2, except SU(2)_8 which uses a = 1/2, b = 1.
QubitCharges default_charges(const AnyonModel& model);

enum class SingleQubitScheme { kFourAnyon, kThreeAnyon };

/// Qubit code inside a fusion space. Tree indices refer to basis.states,
/// i.e. to the grouped basis where each (b, b) pair is one block.
struct CodeSpace {
  std::string scheme;
  int qubit_count = 0;
  QubitCharges charges;
  GroupedBasis basis;
  std::vector<std::pair<std::string, std::size_t>> computational;
  std::vector<std::size_t> non_computational;
  std::vector<std::string> leaf_roles;
  /// Block index (in basis.grouping) that carries each qubit.
  std::vector<std::size_t> qubit_blocks;

  std::size_t dim() const { return basis.dim(); }
  /// Fine-basis column vectors of the computational states, bit-string order.
  Matrix computational_vectors() const;
  /// Diagonal projector onto the computational states, code basis.
  Matrix computational_projector() const;
  Matrix non_computational_projector() const;
  /// Re-expresses a fine-basis operator (same leaves) in the code basis.
  Matrix to_code_basis(const Matrix& fine_operator) const;
};

CodeSpace single_qubit_code(const AnyonModel& model, SingleQubitScheme scheme,
                            QubitCharges charges);

/// Dense register: a_1, b_2 ... b_{2n+1}, a_{2n+2} with total charge 0.
CodeSpace multi_qubit_code(const AnyonModel& model, int n, QubitCharges charges);

/// Two independent four-anyon qubits side by side (8 anyons, total 0).
CodeSpace product_code(const AnyonModel& model, QubitCharges charges);

/// Two-qubit dense register whose middle carries an extra vacuum pair
/// (a_4 a_5)^0, on the same 8 leaves as product_code.
CodeSpace merged_code(const AnyonModel& model, QubitCharges charges);

struct LeakageReport {
  double leakage_norm = 0.0;
  std::string worst_input;
  /// Diagonal entry of U on each one-dimensional block-charge sector.
  std::map<std::string, Complex> sector_phases;
};

/// U must be expressed in the code basis.
LeakageReport leakage(const Matrix& u, const CodeSpace& code);

std::string sector_label(const std::vector<Charge>& block_charges);

}  // namespace anyonforge
