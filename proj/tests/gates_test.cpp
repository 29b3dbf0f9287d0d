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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "anyonforge/gates.hpp"
#include "anyonforge/io.hpp"

using namespace anyonforge;

namespace {

struct Components {
  AnyonModel model{3};
  Component p, b1, b3, e;
};

// Searched once; length 12 keeps the suite fast while giving nonzero errors.
const Components& k3_components() {
  static const Components c = [] {
    Components out;
    SearchConfig cfg;
    cfg.max_length = 12;
    auto run = [&](const char* id) {
      return Component::from_result(search(out.model, make_target(out.model, id), cfg));
    };
    out.p = run("P");
    out.b1 = run("B1");
    out.b3 = run("B3");
    out.e = run("E");
    return out;
  }();
  return c;
}

Component empty_component(const AnyonModel& model, const char* id, double d) {
  return {id, BraidWord{make_target(model, id).strand_count(), {}}, d};
}

}  // namespace

TEST(controlled_phase, empty_braid_is_identity) {
  AnyonModel m(3);
  const GateReport r = assemble_controlled_phase(m, empty_component(m, "P", 0.0));
  EXPECT_EQ(r.gate, "cz");
  EXPECT_NEAR(r.distance_to_target, std::sqrt(0.5), 1e-12);
  EXPECT_LT(max_abs_diff(r.logical_matrix, Matrix::Identity(4, 4)), 1e-12);
  EXPECT_EQ(r.braid_length_total, 0);
  // A claimed distance of 0 cannot cover the real error.
  EXPECT_FALSE(r.bound_ok);
}

TEST(controlled_phase, composition_bound) {
  const Components& c = k3_components();
  const GateReport r = assemble_controlled_phase(c.model, c.p);
  EXPECT_LE(r.distance_to_target, c.p.distance + kCompositionSlack);
  EXPECT_TRUE(r.bound_ok);
  EXPECT_NEAR(r.budget_total(), c.p.distance, 0.0);
  Matrix cz = Matrix::Identity(4, 4);
  cz(3, 3) = -1.0;
  EXPECT_EQ(r.target, cz);
}

TEST(ccz, composition_bound_and_phase_pattern) {
  const Components& c = k3_components();
  const GateReport r = assemble_ccz(c.model, c.b1, c.p, c.b3);
  ASSERT_EQ(r.logical_matrix.rows(), 8);
  EXPECT_NEAR(r.budget_total(), 2 * c.b1.distance + 2 * c.p.distance + 2 * c.b3.distance,
              1e-12);
  EXPECT_LE(r.distance_to_target, r.budget_total() + kCompositionSlack);
  EXPECT_TRUE(r.bound_ok);
  // Phases only on |111> up to the budget; each trivial entry individually.
  EXPECT_LE(r.trivial_phase_deviation, 2 * r.budget_total() + kCompositionSlack);
  EXPECT_LT(r.off_diagonal_norm, 1e-9);
  EXPECT_EQ(r.segments.size(), 6u);
  std::size_t total = 0;
  for (const auto& s : r.segments) total += s.length;
  EXPECT_EQ(total, r.braid.size());
  EXPECT_EQ(static_cast<std::size_t>(r.braid_length_total), r.braid.size());
}

TEST(ccz, pieces_are_inverse_pairs) {
  const Components& c = k3_components();
  const GateReport r = assemble_ccz(c.model, c.b1, c.p, c.b3);
  auto piece = [&](std::size_t i) {
    const auto& s = r.segments[i];
    return BraidWord{r.braid.strand_count,
                     {r.braid.letters.begin() + static_cast<std::ptrdiff_t>(s.first),
                      r.braid.letters.begin() + static_cast<std::ptrdiff_t>(s.first + s.length)}};
  };
  EXPECT_EQ(piece(2), piece(0).inverse());
  EXPECT_EQ(piece(5), piece(3).inverse());
  EXPECT_EQ(piece(4), piece(1).inverse());
}

TEST(ccz, first_half_fails_trivial_sector_check) {
  const Components& c = k3_components();
  const GateReport full = assemble_ccz(c.model, c.b1, c.p, c.b3);
  const GateReport half = assemble_ccz_first_half(c.model, c.b1, c.p);
  // The uncancelled controlled phase sits on |110>, far outside the budget.
  EXPECT_GT(half.trivial_phase_deviation, half.budget_total() + 0.1);
  EXPECT_GT(half.trivial_phase_deviation, full.trivial_phase_deviation + 0.1);
  EXPECT_EQ(half.segments.size(), 3u);
}

TEST(ccz, custom_phase_target) {
  const Components& c = k3_components();
  const Complex phase = std::polar(1.0, std::numbers::pi / 4);
  const GateReport r = assemble_ccz(c.model, c.b1, c.p, c.b3, phase);
  EXPECT_EQ(r.target(7, 7), phase);
  EXPECT_EQ(r.target(6, 6), Complex(1.0));
}

TEST(conversion, merge_maps_product_to_dense) {
  const Components& c = k3_components();
  const GateReport merge = convert_registers(c.model, ConversionDirection::kMerge, c.e);
  const GateReport split = convert_registers(c.model, ConversionDirection::kSplit, c.e);
  EXPECT_EQ(merge.gate, "merge");
  EXPECT_EQ(split.gate, "split");
  EXPECT_NEAR(merge.distance_to_target, c.e.distance, 1e-12);
  EXPECT_NEAR(split.distance_to_target, c.e.distance, 1e-12);
  EXPECT_TRUE(merge.bound_ok);
  EXPECT_TRUE(split.bound_ok);
  EXPECT_EQ(merge.logical_matrix.rows(), 4);
  EXPECT_LT(max_abs_diff(split.logical_matrix, merge.logical_matrix.adjoint()), 1e-12);
}

TEST(conversion, round_trip_within_twice_e) {
  const Components& c = k3_components();
  const RoundTrip rt = merge_then_split(c.model, c.e);
  EXPECT_LE(rt.distance, 2 * c.e.distance + kCompositionSlack);
  EXPECT_EQ(rt.logical_matrix.rows(), 4);
}

TEST(conversion, k2_empty_exchange) {
  AnyonModel m(2);
  SearchConfig cfg;
  cfg.max_length = 8;
  const SynthesisResult e = search(m, make_target_E(m), cfg);
  const Component comp = Component::from_result(e);
  EXPECT_LE(merge_then_split(m, comp).distance, 2 * e.distance + kCompositionSlack);
}

TEST(reports, rescore_from_braid_file) {
  const Components& c = k3_components();
  for (const GateReport& r :
       {assemble_controlled_phase(c.model, c.p), assemble_ccz(c.model, c.b1, c.p, c.b3),
        convert_registers(c.model, ConversionDirection::kMerge, c.e),
        convert_registers(c.model, ConversionDirection::kSplit, c.e)}) {
    const BraidFile f = braid_file_from_report(r);
    const BraidFile back = braid_file_from_json(Json::parse(dump(braid_file_to_json(f))));
    const Rescore s = rescore_braid_file(c.model, back);
    EXPECT_TRUE(s.matches) << r.gate;
    EXPECT_NEAR(s.distance, r.distance_to_target, 1e-12) << r.gate;
  }
}

TEST(reports, wrong_component_is_rejected) {
  const Components& c = k3_components();
  EXPECT_THROW(assemble_controlled_phase(c.model, c.b1), std::invalid_argument);
  EXPECT_THROW(assemble_ccz(c.model, c.p, c.p, c.b3), std::invalid_argument);
}
