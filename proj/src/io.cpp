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

#include "anyonforge/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <tuple>

namespace anyonforge {

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json charges_to_json(const std::vector<Charge>& charges) {
  return Json(twice_spins(charges));
}

Json word_to_json(const BraidWord& word) {
  Json out = Json::array();
  for (const auto& l : word.letters) out.push_back({l.position, l.exponent});
  return out;
}

Json counts_to_json(
    const std::map<std::pair<std::size_t, std::size_t>, ExchangeCount>& counts) {
  Json out = Json::array();
  for (const auto& [pair, c] : counts) {
    out.push_back(Json{{"blocks", {pair.first, pair.second}},
                       {"signed", c.signed_count},
                       {"total", c.total}});
  }
  return out;
}

Json phases_to_json(const std::map<std::string, Complex>& phases) {
  Json out = Json::object();
  for (const auto& [label, z] : phases) out[label] = complex_to_json(z);
  return out;
}

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) {
    throw FormatError(std::string("missing key '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad value for '") + key + "': " + e.what());
  }
}

CodeSpace code_by_name(const AnyonModel& model, const std::string& name) {
  const QubitCharges charges = default_charges(model);
  if (name == "dense1") return multi_qubit_code(model, 1, charges);
  if (name == "dense2") return multi_qubit_code(model, 2, charges);
  if (name == "dense3") return multi_qubit_code(model, 3, charges);
  if (name == "product") return product_code(model, charges);
  if (name == "merged") return merged_code(model, charges);
  throw FormatError("unknown code '" + name + "'");
}

std::pair<std::string, std::string> codes_for_gate(const std::string& gate) {
  if (gate == "cz") return {"dense2", "dense2"};
  if (gate == "ccz" || gate == "ccz_first_half") return {"dense3", "dense3"};
  if (gate == "merge") return {"product", "merged"};
  if (gate == "split") return {"merged", "product"};
  throw FormatError("unknown gate '" + gate + "'");
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw FormatError("matrix must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw FormatError("matrix rows have different lengths");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& z = row[static_cast<std::size_t>(c)];
      if (z.is_number()) {
        m(r, c) = z.get<double>();
      } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
        m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
      } else {
        throw FormatError("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

Json model_to_json(const AnyonModel& model) {
  Json charges = Json::array();
  for (Charge c : model.charges()) {
    charges.push_back(Json{{"twice_spin", c.twice_spin()},
                           {"spin", to_string(c)},
                           {"qdim", model.qdim(c)}});
  }
  Json fusion = Json::array();
  for (Charge a : model.charges()) {
    for (Charge b : model.charges()) {
      if (b < a) continue;
      fusion.push_back(Json{{"a", a.twice_spin()},
                            {"b", b.twice_spin()},
                            {"channels", charges_to_json(model.fuse(a, b))}});
    }
  }
  return Json{{"k", model.level()},
              {"deformation_angle", model.deformation_angle()},
              {"charges", charges},
              {"fusion", fusion}};
}

Json basis_to_json(const FusionBasis& basis) {
  Json trees = Json::array();
  for (const auto& t : basis.trees()) trees.push_back(charges_to_json(t.internals));
  return Json{{"leaves", charges_to_json(basis.leaves())},
              {"total", basis.total().twice_spin()},
              {"dim", basis.dim()},
              {"trees", trees}};
}

Json code_to_json(const CodeSpace& code) {
  Json states = Json::array();
  for (const auto& s : code.basis.states) {
    Json internals = Json::array();
    for (const auto& b : s.block_internals) internals.push_back(charges_to_json(b));
    states.push_back(Json{{"block_charges", charges_to_json(s.block_charges)},
                          {"block_internals", internals},
                          {"coarse_internals", charges_to_json(s.coarse_internals)}});
  }
  Json computational = Json::object();
  for (const auto& [bits, idx] : code.computational) computational[bits] = idx;
  return Json{{"scheme", code.scheme},
              {"qubits", code.qubit_count},
              {"leaves", charges_to_json(code.basis.fine.leaves())},
              {"leaf_roles", code.leaf_roles},
              {"grouping", code.basis.grouping.blocks},
              {"qubit_blocks", code.qubit_blocks},
              {"states", states},
              {"computational", computational},
              {"non_computational", code.non_computational}};
}

Json result_to_json(const SynthesisResult& result) {
  Json curve = Json::array();
  for (const auto& d : result.curve) {
    curve.push_back(Json{{"length", d.length},
                         {"best_distance", d.best_distance},
                         {"nodes_explored", d.nodes_explored}});
  }
  return Json{{"target", result.target_id},
              {"word", word_to_json(result.braid)},
              {"distance", result.distance},
              {"leakage", result.leakage},
              {"converged", result.converged},
              {"nodes_explored", result.nodes_explored},
              {"sector_phases", phases_to_json(result.sector_phases)},
              {"exchange_counts", counts_to_json(result.exchange_counts)},
              {"curve", curve}};
}

Json report_to_json(const GateReport& report) {
  Json budget = Json::array();
  for (const auto& c : report.component_budget) {
    budget.push_back(Json{{"component", c.id}, {"distance", c.distance}});
  }
  Json segments = Json::array();
  for (const auto& s : report.segments) {
    segments.push_back(
        Json{{"label", s.label}, {"first", s.first}, {"length", s.length}});
  }
  return Json{{"gate", report.gate},
              {"k", report.level},
              {"distance_to_target", report.distance_to_target},
              {"leakage", report.leakage},
              {"component_budget", budget},
              {"budget_total", report.budget_total()},
              {"bound_ok", report.bound_ok},
              {"braid_length_total", report.braid_length_total},
              {"trivial_phase_deviation", report.trivial_phase_deviation},
              {"off_diagonal_norm", report.off_diagonal_norm},
              {"logical_matrix", matrix_to_json(report.logical_matrix)},
              {"target_matrix", matrix_to_json(report.target)},
              {"segments", segments}};
}

std::string curve_to_csv(const std::vector<DepthStats>& curve) {
  std::ostringstream os;
  os << "length,best_distance,nodes_explored,seconds\n";
  os.precision(17);
  for (const auto& d : curve) {
    os << d.length << ',' << d.best_distance << ',' << d.nodes_explored << ','
       << d.seconds << '\n';
  }
  return os.str();
}

BraidFile braid_file_from_result(const SynthesisTarget& target,
                                 const SynthesisResult& result) {
  BraidFile f;
  f.k = target.level;
  f.leaves = target.arrangement.leaves;
  f.grouping = target.arrangement.grouping.blocks;
  f.word = result.braid;
  f.target = target.id;
  f.distance = result.distance;
  f.leakage = result.leakage;
  static const std::vector<std::string> kKnown{"P", "B1", "B3", "E", "identity",
                                               "NOT"};
  if (target.exact &&
      std::find(kKnown.begin(), kKnown.end(), target.id) == kKnown.end()) {
    f.target_matrix = target.exact->target;
  }
  return f;
}

BraidFile braid_file_from_report(const GateReport& report) {
  BraidFile f;
  f.k = report.level;
  f.leaves = report.leaves;
  f.grouping = Grouping::singletons(report.leaves.size()).blocks;
  f.word = report.braid;
  f.target = report.gate;
  f.distance = report.distance_to_target;
  f.leakage = report.leakage;
  f.target_matrix = report.target;
  std::tie(f.input_code, f.output_code) = codes_for_gate(report.gate);
  f.segments = report.segments;
  return f;
}

Json braid_file_to_json(const BraidFile& file) {
  Json j{{"k", file.k},
         {"leaves", charges_to_json(file.leaves)},
         {"grouping", file.grouping},
         {"word", word_to_json(file.word)},
         {"target", file.target},
         {"distance", file.distance}};
  if (file.leakage) j["leakage"] = *file.leakage;
  if (file.target_matrix) j["target_matrix"] = matrix_to_json(*file.target_matrix);
  if (!file.input_code.empty()) {
    j["input_code"] = file.input_code;
    j["output_code"] = file.output_code;
  }
  if (!file.segments.empty()) {
    Json segments = Json::array();
    for (const auto& s : file.segments) {
      segments.push_back(
          Json{{"label", s.label}, {"first", s.first}, {"length", s.length}});
    }
    j["segments"] = segments;
  }
  return j;
}

BraidFile braid_file_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("braid file must be a JSON object");
  BraidFile f;
  f.k = get<int>(j, "k");
  f.leaves = charges_from_twice_spins(get<std::vector<int>>(j, "leaves"));
  f.grouping = get<std::vector<std::vector<std::size_t>>>(j, "grouping");
  f.target = get<std::string>(j, "target");
  f.distance = get<double>(j, "distance");
  const auto letters = get<std::vector<std::vector<int>>>(j, "word");
  f.word.strand_count = static_cast<int>(f.grouping.size());
  for (const auto& l : letters) {
    if (l.size() != 2) throw FormatError("word letters must be [position, exponent]");
    f.word.letters.push_back({l[0], l[1]});
  }
  if (j.contains("leakage")) f.leakage = get<double>(j, "leakage");
  if (j.contains("target_matrix")) f.target_matrix = matrix_from_json(j["target_matrix"]);
  if (j.contains("input_code")) {
    f.input_code = get<std::string>(j, "input_code");
    f.output_code = get<std::string>(j, "output_code");
  }
  if (j.contains("segments")) {
    for (const auto& s : j["segments"]) {
      f.segments.push_back({get<std::string>(s, "label"),
                            get<std::size_t>(s, "first"),
                            get<std::size_t>(s, "length")});
    }
  }
  try {
    f.word.validate();
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  return f;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
  if (!out) throw FormatError("failed writing '" + path + "'");
}

BraidFile read_braid_file(const std::string& path) {
  try {
    return braid_file_from_json(Json::parse(read_text_file(path)));
  } catch (const Json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SynthesisTarget target_for_file(const AnyonModel& model, const BraidFile& file) {
  if (file.k != model.level()) throw FormatError("braid file is for another level");
  SynthesisTarget target =
      file.target_matrix
          ? make_target_single_qubit(model, file.target, *file.target_matrix)
          : make_target(model, file.target);
  if (target.arrangement.leaves != file.leaves ||
      target.arrangement.grouping.blocks != file.grouping) {
    throw FormatError("braid file layout does not match target " + file.target);
  }
  return target;
}

Component component_from_file(const AnyonModel& model, const BraidFile& file,
                              const std::string& expected_target) {
  if (file.target != expected_target) {
    throw FormatError("expected a " + expected_target + " braid, got " +
                      file.target);
  }
  target_for_file(model, file);
  return {file.target, file.word, file.distance};
}

Rescore rescore_braid_file(const AnyonModel& model, const BraidFile& file,
                           double tolerance) {
  Rescore r;
  if (!file.input_code.empty()) {
    if (!file.target_matrix) throw FormatError("assembled braid lacks target_matrix");
    const CodeSpace in = code_by_name(model, file.input_code);
    const CodeSpace out = code_by_name(model, file.output_code);
    if (in.basis.fine.leaves() != file.leaves) {
      throw FormatError("assembled braid leaves do not match its code");
    }
    Grouping grouping;
    grouping.blocks = file.grouping;
    grouping.block_charges.assign(file.grouping.size(), std::nullopt);
    const Matrix u = evaluate_closed(
        model, Arrangement::initial(file.leaves, grouping), Charge(0), file.word);
    const Matrix ci = in.computational_vectors();
    const Matrix co = out.computational_vectors();
    r.distance = distance(co.adjoint() * u * ci, *file.target_matrix);
    const Eigen::Index d = co.rows();
    r.leakage = std::min(
        1.0, operator_norm((Matrix::Identity(d, d) - co * co.adjoint()) * u * ci));
  } else {
    const SynthesisTarget target = target_for_file(model, file);
    const ScoreReport s = score_braid(model, target, file.word);
    r.distance = s.distance;
    r.leakage = s.leakage;
  }
  r.matches = std::abs(r.distance - file.distance) <= tolerance &&
              (!file.leakage || std::abs(r.leakage - *file.leakage) <= tolerance);
  return r;
}

}  // namespace anyonforge
