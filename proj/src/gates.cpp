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

#include "anyonforge/gates.hpp"

#include <algorithm>
#include <cmath>

namespace anyonforge {

double GateReport::budget_total() const {
  double total = 0.0;
  for (const auto& c : component_budget) total += c.distance;
  return total;
}

namespace {

struct Piece {
  std::string label;
  Grouping grouping;
  BraidWord word;
  double distance = 0.0;
};

// Applies the pieces in order on one fixed set of leaves. Every piece must be
// closed on its own grouping, so all of them act on the same fine basis.
Matrix run_pieces(const AnyonModel& model, const std::vector<Charge>& leaves,
                  const std::vector<Piece>& pieces, GateReport& report) {
  const FusionBasis basis = enumerate_basis(model, leaves, Charge(0));
  const auto d = static_cast<Eigen::Index>(basis.dim());
  Matrix u = Matrix::Identity(d, d);
  report.leaves = leaves;
  report.braid = BraidWord{static_cast<int>(leaves.size()), {}};
  for (const auto& piece : pieces) {
    const Arrangement start = Arrangement::initial(leaves, piece.grouping);
    u = evaluate_closed(model, start, Charge(0), piece.word) * u;
    const BraidWord strands = expand_to_strands(piece.word, piece.grouping);
    report.segments.push_back(
        {piece.label, report.braid.letters.size(), strands.letters.size()});
    report.braid = report.braid.concatenated(strands);
    report.component_budget.push_back({piece.label, piece.distance});
  }
  report.braid_length_total = static_cast<int>(report.braid.size());
  return u;
}

void finish(GateReport& report, const Matrix& u, const Matrix& in,
            const Matrix& out) {
  report.logical_matrix = out.adjoint() * u * in;
  report.distance_to_target = distance(report.logical_matrix, report.target);
  const Eigen::Index d = out.rows();
  report.leakage = std::min(
      1.0, operator_norm((Matrix::Identity(d, d) - out * out.adjoint()) * u * in));
  const Matrix& l = report.logical_matrix;
  Matrix off = l;
  off.diagonal().setZero();
  report.off_diagonal_norm = operator_norm(off);
  report.trivial_phase_deviation = 0.0;
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    if (std::abs(report.target(i, i) - 1.0) > 1e-15) continue;
    report.trivial_phase_deviation =
        std::max(report.trivial_phase_deviation, std::abs(l(i, i) - 1.0));
  }
  report.bound_ok =
      report.distance_to_target <= report.budget_total() + kCompositionSlack;
}

Matrix phase_on_last(Eigen::Index dim, Complex phase) {
  Matrix t = Matrix::Identity(dim, dim);
  t(dim - 1, dim - 1) = phase;
  return t;
}

Component inverted(const Component& c) {
  return {c.id + "^-1", c.braid.inverse(), c.distance};
}

std::vector<Piece> ccz_pieces(const Component& b1, const Component& p,
                              const Component* b3) {
  const Grouping dense = Grouping::from_sizes({1, 2, 2, 2, 1});
  const Grouping joined = Grouping::from_sizes({1, 4, 2, 1});
  std::vector<Piece> pieces{
      {"B1", dense, b1.braid, b1.distance},
      {"P", joined, p.braid, p.distance},
      {"B1^-1", dense, b1.braid.inverse(), b1.distance},
  };
  if (b3) {
    pieces.push_back({"B3", dense, b3->braid, b3->distance});
    pieces.push_back({"P^-1", joined, p.braid.inverse(), p.distance});
    pieces.push_back({"B3^-1", dense, b3->braid.inverse(), b3->distance});
  }
  return pieces;
}

GateReport ccz_report(const AnyonModel& model, std::vector<Piece> pieces,
                      std::string gate, Complex phase) {
  const CodeSpace code = multi_qubit_code(model, 3, default_charges(model));
  GateReport report;
  report.gate = std::move(gate);
  report.level = model.level();
  report.target = phase_on_last(8, phase);
  const Matrix u = run_pieces(model, code.basis.fine.leaves(), pieces, report);
  const Matrix c = code.computational_vectors();
  finish(report, u, c, c);
  return report;
}

}  // namespace

GateReport assemble_controlled_phase(const AnyonModel& model,
                                     const Component& p) {
  const CodeSpace code = multi_qubit_code(model, 2, default_charges(model));
  GateReport report;
  report.gate = "cz";
  report.level = model.level();
  report.target = phase_on_last(4, -1.0);
  const Matrix u = run_pieces(
      model, code.basis.fine.leaves(),
      {{"P", Grouping::from_sizes({1, 2, 2, 1}), p.braid, p.distance}}, report);
  const Matrix c = code.computational_vectors();
  finish(report, u, c, c);
  return report;
}

GateReport assemble_ccz(const AnyonModel& model, const Component& b1,
                        const Component& p, const Component& b3,
                        Complex phase) {
  return ccz_report(model, ccz_pieces(b1, p, &b3), "ccz", phase);
}

GateReport assemble_ccz_first_half(const AnyonModel& model, const Component& b1,
                                   const Component& p, Complex phase) {
  return ccz_report(model, ccz_pieces(b1, p, nullptr), "ccz_first_half", phase);
}

GateReport convert_registers(const AnyonModel& model,
                             ConversionDirection direction,
                             const Component& e) {
  const QubitCharges charges = default_charges(model);
  const CodeSpace product = product_code(model, charges);
  const CodeSpace merged = merged_code(model, charges);
  const Matrix p = product.computational_vectors();
  const Matrix m = merged.computational_vectors();
  const bool merge = direction == ConversionDirection::kMerge;
  const Component used = merge ? e : inverted(e);

  GateReport report;
  report.gate = merge ? "merge" : "split";
  report.level = model.level();
  report.target = Matrix::Identity(4, 4);
  const Matrix u = run_pieces(
      model, product.basis.fine.leaves(),
      {{merge ? "E" : "E^-1", Grouping::from_sizes({3, 1, 1, 3}), used.braid,
        used.distance}},
      report);
  if (merge) {
    finish(report, u, p, m);
  } else {
    finish(report, u, m, p);
  }
  return report;
}

RoundTrip merge_then_split(const AnyonModel& model, const Component& e) {
  const GateReport m = convert_registers(model, ConversionDirection::kMerge, e);
  const GateReport s = convert_registers(model, ConversionDirection::kSplit, e);
  RoundTrip out;
  out.logical_matrix = s.logical_matrix * m.logical_matrix;
  out.distance = distance(out.logical_matrix, Matrix::Identity(4, 4));
  return out;
}

}  // namespace anyonforge
