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

#include <filesystem>

#include "anyonforge/io.hpp"

using namespace anyonforge;

namespace {

SynthesisResult short_search(const AnyonModel& m, const SynthesisTarget& t, int workers = 1) {
  SearchConfig c;
  c.max_length = 8;
  c.workers = workers;
  return search(m, t, c);
}

}  // namespace

TEST(matrix_json, round_trip) {
  Matrix m(2, 3);
  m << Complex(1, 2), 0.5, Complex(-0.25, 1e-17), 3, Complex(0, -1), 0.1;
  EXPECT_EQ(matrix_from_json(Json::parse(matrix_to_json(m).dump())), m);
  // Plain numbers are read as reals.
  EXPECT_EQ(matrix_from_json(Json::parse("[[1, 0], [0, 1]]")), Matrix::Identity(2, 2));
}

TEST(matrix_json, malformed) {
  EXPECT_THROW(matrix_from_json(Json::parse("[]")), FormatError);
  EXPECT_THROW(matrix_from_json(Json::parse("[[1, 2], [3]]")), FormatError);
  EXPECT_THROW(matrix_from_json(Json::parse("[[\"x\"]]")), FormatError);
  EXPECT_THROW(matrix_from_json(Json::parse("{\"a\": 1}")), FormatError);
}

TEST(braid_file, key_order) {
  AnyonModel m(3);
  const SynthesisTarget t = make_target(m, "NOT");
  const Json j = braid_file_to_json(braid_file_from_result(t, short_search(m, t)));
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  ASSERT_GE(keys.size(), 6u);
  EXPECT_EQ((std::vector<std::string>(keys.begin(), keys.begin() + 6)),
            (std::vector<std::string>{"k", "leaves", "grouping", "word", "target", "distance"}));
}

TEST(braid_file, round_trip_is_byte_identical) {
  AnyonModel m(3);
  for (const char* id : {"P", "E", "NOT"}) {
    const SynthesisTarget t = make_target(m, id);
    const BraidFile f = braid_file_from_result(t, short_search(m, t));
    const std::string text = dump(braid_file_to_json(f));
    const BraidFile back = braid_file_from_json(Json::parse(text));
    EXPECT_EQ(dump(braid_file_to_json(back)), text) << id;
    EXPECT_EQ(back.word, f.word);
    EXPECT_EQ(back.distance, f.distance);
    EXPECT_TRUE(rescore_braid_file(m, back).matches) << id;
  }
}

TEST(braid_file, custom_single_qubit_target_keeps_matrix) {
  AnyonModel m(3);
  Matrix z = Matrix::Identity(2, 2);
  z(1, 1) = -1.0;
  const SynthesisTarget t = make_target_single_qubit(m, "Z", z);
  const BraidFile f = braid_file_from_result(t, short_search(m, t));
  ASSERT_TRUE(f.target_matrix.has_value());
  const BraidFile back = braid_file_from_json(Json::parse(dump(braid_file_to_json(f))));
  EXPECT_TRUE(rescore_braid_file(m, back).matches);
}

TEST(braid_file, file_round_trip) {
  namespace fs = std::filesystem;
  AnyonModel m(3);
  const SynthesisTarget t = make_target(m, "P");
  const BraidFile f = braid_file_from_result(t, short_search(m, t));
  const fs::path path = fs::temp_directory_path() / "anyonforge_io_test.json";
  write_text_file(path.string(), dump(braid_file_to_json(f)));
  const BraidFile back = read_braid_file(path.string());
  EXPECT_EQ(back.word, f.word);
  fs::remove(path);
  EXPECT_THROW(read_braid_file(path.string()), FormatError);
}

TEST(braid_file, malformed) {
  EXPECT_THROW(braid_file_from_json(Json::parse("[]")), FormatError);
  EXPECT_THROW(braid_file_from_json(Json::parse(R"({"k": 3})")), FormatError);
  const Json base = Json::parse(
      R"({"k": 3, "leaves": [1, 2, 2, 1], "grouping": [[0], [1], [2], [3]],
          "word": [[1, 1]], "target": "NOT", "distance": 0.5})");
  EXPECT_NO_THROW(braid_file_from_json(base));
  Json bad = base;
  bad["word"] = Json::parse("[[1, 2]]");
  EXPECT_THROW(braid_file_from_json(bad), FormatError);
  bad = base;
  bad["word"] = Json::parse("[[7, 1]]");
  EXPECT_THROW(braid_file_from_json(bad), FormatError);
  bad = base;
  bad["word"] = Json::parse("[[1]]");
  EXPECT_THROW(braid_file_from_json(bad), FormatError);
  bad = base;
  bad["distance"] = "far";
  EXPECT_THROW(braid_file_from_json(bad), FormatError);
}

TEST(braid_file, layout_and_level_checks) {
  AnyonModel m(3);
  const SynthesisTarget t = make_target(m, "P");
  BraidFile f = braid_file_from_result(t, short_search(m, t));
  EXPECT_THROW(component_from_file(m, f, "B1"), FormatError);
  EXPECT_NO_THROW(component_from_file(m, f, "P"));
  EXPECT_THROW(target_for_file(AnyonModel(4), f), FormatError);
  f.grouping = Grouping::singletons(f.leaves.size()).blocks;
  EXPECT_THROW(target_for_file(m, f), FormatError);
}

TEST(braid_file, tampered_distance_fails_rescore) {
  AnyonModel m(3);
  const SynthesisTarget t = make_target(m, "NOT");
  BraidFile f = braid_file_from_result(t, short_search(m, t));
  f.distance += 1e-6;
  EXPECT_FALSE(rescore_braid_file(m, f).matches);
}

TEST(result_json, identical_across_workers) {
  AnyonModel m(3);
  const SynthesisTarget t = make_target(m, "P");
  EXPECT_EQ(dump(result_to_json(short_search(m, t, 1))),
            dump(result_to_json(short_search(m, t, 3))));
}

TEST(curve_csv, header_and_rows) {
  AnyonModel m(3);
  const SynthesisResult r = short_search(m, make_target(m, "NOT"));
  const std::string csv = curve_to_csv(r.curve);
  EXPECT_EQ(csv.rfind("length,best_distance,nodes_explored,seconds\n", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')),
            r.curve.size() + 1);
}

TEST(model_json, lists_every_charge) {
  const Json j = model_to_json(AnyonModel(3));
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["charges"].size(), 4u);
}
