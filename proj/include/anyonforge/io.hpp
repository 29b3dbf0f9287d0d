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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anyonforge/gates.hpp"
#include "json.hpp"

namespace anyonforge {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row-major [[ [re, im], ... ], ...].
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json model_to_json(const AnyonModel& model);
Json basis_to_json(const FusionBasis& basis);
Json code_to_json(const CodeSpace& code);
Json result_to_json(const SynthesisResult& result);
Json report_to_json(const GateReport& report);

/// Columns: length, best_distance, nodes_explored, seconds.
std::string curve_to_csv(const std::vector<DepthStats>& curve);

/// On-disk braid. Words from synth are block-level on `grouping`; assembled
/// gates are strand-level (singleton grouping) and carry their logical
/// target and codes so they can be rescored.
struct BraidFile {
  int k = 0;
  std::vector<Charge> leaves;
  std::vector<std::vector<std::size_t>> grouping;
  BraidWord word;
  std::string target;
  double distance = 0.0;
  std::optional<double> leakage;
  /// Single-qubit gate for targets not known by id.
  std::optional<Matrix> target_matrix;
  /// Assembled gates only.
  std::string input_code;
  std::string output_code;
  std::vector<BraidSegment> segments;
};

BraidFile braid_file_from_result(const SynthesisTarget& target,
                                 const SynthesisResult& result);
BraidFile braid_file_from_report(const GateReport& report);

/// Keys in order k, leaves, grouping, word, target, distance, then extras.
Json braid_file_to_json(const BraidFile& file);
BraidFile braid_file_from_json(const Json& j);

BraidFile read_braid_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

/// Serialized JSON text with a trailing newline.
std::string dump(const Json& j);

/// Rebuilds the synthesis target a braid file refers to.
SynthesisTarget target_for_file(const AnyonModel& model, const BraidFile& file);

/// Block-level component of an assembly, checked against its target layout.
Component component_from_file(const AnyonModel& model, const BraidFile& file,
                              const std::string& expected_target);

struct Rescore {
  double distance = 0.0;
  double leakage = 0.0;
  bool matches = false;
};

/// Recomputes distance and leakage from the word alone; matches when both
/// agree with the stored values within `tolerance`.
Rescore rescore_braid_file(const AnyonModel& model, const BraidFile& file,
                           double tolerance = 1e-12);

}  // namespace anyonforge
