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

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anyonforge/io.hpp"

namespace af = anyonforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitNotConverged = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

af::AnyonModel make_model(int k) {
  if (k < 2) throw UsageError("--k must be >= 2 (got " + std::to_string(k) + ")");
  return af::AnyonModel(k);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    af::write_text_file(path, text);
  }
}

std::vector<int> parse_ints(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated list of integers, got '" +
                       list + "'");
    }
  }
  return out;
}

// --- model -----------------------------------------------------------------

struct ModelArgs {
  int k = 0;
  std::string format = "text";
};

int run_model(const ModelArgs& args) {
  const af::AnyonModel model = make_model(args.k);
  if (args.format == "json") {
    std::cout << af::dump(af::model_to_json(model));
    return kExitOk;
  }
  std::cout << "SU(2)_" << model.level() << ": " << model.charge_count()
            << " charges, deformation angle " << std::setprecision(12)
            << model.deformation_angle() << "\n";
  for (af::Charge c : model.charges()) {
    std::cout << "  qdim(" << af::to_string(c) << ") = " << model.qdim(c) << "\n";
  }
  std::cout << "fusion:\n";
  for (af::Charge a : model.charges()) {
    for (af::Charge b : model.charges()) {
      if (b < a) continue;
      std::cout << "  " << af::to_string(a) << " x " << af::to_string(b) << " = ";
      const auto channels = model.fuse(a, b);
      for (std::size_t i = 0; i < channels.size(); ++i) {
        std::cout << (i ? " + " : "") << af::to_string(channels[i]);
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
  int k = 0;
  int max_strands = 4;
  bool corrupt_f = false;
};

int run_check(const CheckArgs& args) {
  af::AnyonModel model = make_model(args.k);
  if (args.corrupt_f) {
    const af::Charge h(1);
    model = model.with_perturbed_f(h, h, h, h, af::Charge(0), af::Charge(0), 0.01);
  }
  const double tol = af::kIdentityTolerance;
  struct Line {
    const char* name;
    double residual;
  };
  const Line lines[] = {
      {"pentagon", af::verify_pentagon(model)},
      {"hexagon", af::verify_hexagon(model)},
      {"f_unitarity", af::max_f_unitarity_residual(model)},
      {"r_modulus", af::max_r_modulus_residual(model)},
      {"braid_relations",
       af::max_braid_relation_residual(model, args.max_strands,
                                       {af::Charge(1), af::Charge(2)})},
  };
  bool ok = true;
  for (const auto& l : lines) {
    const bool pass = l.residual < tol;
    ok = ok && pass;
    std::cout << std::left << std::setw(16) << l.name << std::scientific
              << std::setprecision(3) << l.residual << "  "
              << (pass ? "ok" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitVerify;
}

// --- basis -----------------------------------------------------------------

struct BasisArgs {
  int k = 0;
  std::string leaves;
  int total = 0;
  std::string code;
  std::string out;
};

int run_basis(const BasisArgs& args) {
  const af::AnyonModel model = make_model(args.k);
  if (!args.code.empty()) {
    const af::QubitCharges charges = af::default_charges(model);
    af::CodeSpace code;
    if (args.code == "dense1") {
      code = af::single_qubit_code(model, af::SingleQubitScheme::kFourAnyon, charges);
    } else if (args.code == "dense2") {
      code = af::multi_qubit_code(model, 2, charges);
    } else if (args.code == "dense3") {
      code = af::multi_qubit_code(model, 3, charges);
    } else if (args.code == "product") {
      code = af::product_code(model, charges);
    } else if (args.code == "merged") {
      code = af::merged_code(model, charges);
    } else {
      throw UsageError("unknown --code '" + args.code + "'");
    }
    emit(af::dump(af::code_to_json(code)), args.out);
    return kExitOk;
  }
  if (args.leaves.empty()) throw UsageError("basis needs --leaves or --code");
  const auto leaves = af::charges_from_twice_spins(parse_ints(args.leaves));
  for (af::Charge c : leaves) {
    if (!model.valid(c)) throw UsageError("leaf charge outside 0..k");
  }
  if (!model.valid(af::Charge(args.total))) throw UsageError("--total outside 0..k");
  const af::FusionBasis basis =
      af::enumerate_basis(model, leaves, af::Charge(args.total));
  emit(af::dump(af::basis_to_json(basis)), args.out);
  return kExitOk;
}

// --- synth -----------------------------------------------------------------

struct SynthArgs {
  int k = 0;
  std::string target;
  std::string target_file;
  af::SearchConfig config;
  std::string out;
  std::string curve;
  std::string format = "json";
};

int run_synth(const SynthArgs& args) {
  const af::AnyonModel model = make_model(args.k);
  if (args.target.empty() == args.target_file.empty()) {
    throw UsageError("synth needs exactly one of --target or --target-file");
  }
  af::SynthesisTarget target;
  if (!args.target_file.empty()) {
    const af::Json j = af::Json::parse(af::read_text_file(args.target_file));
    const std::string id = j.value("id", std::string("custom"));
    target = af::make_target_single_qubit(model, id,
                                          af::matrix_from_json(j.at("matrix")));
  } else {
    target = af::make_target(model, args.target);
  }
  const af::SynthesisResult result = af::search(model, target, args.config);
  const af::BraidFile file = af::braid_file_from_result(target, result);
  const std::string braid_json = af::dump(af::braid_file_to_json(file));
  const std::string csv = af::curve_to_csv(result.curve);

  if (!args.out.empty()) af::write_text_file(args.out, braid_json);
  if (!args.curve.empty()) af::write_text_file(args.curve, csv);
  if (args.format == "json") {
    std::cout << af::dump(af::result_to_json(result));
  } else if (args.format == "csv") {
    std::cout << csv;
  } else {
    std::cout << "target " << result.target_id << ": length "
              << result.braid.size() << ", distance " << std::setprecision(17)
              << result.distance << ", leakage " << result.leakage << ", "
              << (result.converged ? "converged" : "not converged") << " ("
              << result.nodes_explored << " nodes)\n";
  }
  return result.converged ? kExitOk : kExitNotConverged;
}

// --- assemble --------------------------------------------------------------

struct AssembleArgs {
  int k = 0;
  std::string gate;
  std::string p, b1, b3, e;
  double phase_angle = -1.0;  // CCZ phase as a multiple of pi
  std::string out;
  std::string braid_out;
};

int run_assemble(const AssembleArgs& args) {
  const af::AnyonModel model = make_model(args.k);
  auto load = [&](const std::string& path, const char* flag, const char* id) {
    if (path.empty()) throw UsageError(std::string("missing ") + flag);
    return af::component_from_file(model, af::read_braid_file(path), id);
  };
  af::GateReport report;
  if (args.gate == "cz") {
    report = af::assemble_controlled_phase(model, load(args.p, "--p", "P"));
  } else if (args.gate == "ccz") {
    const af::Complex phase = std::polar(1.0, args.phase_angle * M_PI);
    report = af::assemble_ccz(model, load(args.b1, "--b1", "B1"),
                              load(args.p, "--p", "P"),
                              load(args.b3, "--b3", "B3"), phase);
  } else if (args.gate == "merge" || args.gate == "split") {
    report = af::convert_registers(model,
                                   args.gate == "merge"
                                       ? af::ConversionDirection::kMerge
                                       : af::ConversionDirection::kSplit,
                                   load(args.e, "--e", "E"));
  } else {
    throw UsageError("--gate must be cz, ccz, merge or split");
  }
  emit(af::dump(af::report_to_json(report)), args.out);
  if (!args.braid_out.empty()) {
    af::write_text_file(args.braid_out, af::dump(af::braid_file_to_json(
                                            af::braid_file_from_report(report))));
  }
  return report.bound_ok ? kExitOk : kExitVerify;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  double tol = 1e-12;
};

int run_verify(const VerifyArgs& args) {
  const af::BraidFile file = af::read_braid_file(args.file);
  const af::AnyonModel model = make_model(file.k);
  const af::Rescore r = af::rescore_braid_file(model, file, args.tol);
  std::cout << std::setprecision(17) << "target " << file.target
            << ": stored distance " << file.distance << ", recomputed "
            << r.distance;
  if (file.leakage) {
    std::cout << "; stored leakage " << *file.leakage << ", recomputed "
              << r.leakage;
  }
  std::cout << "\n" << (r.matches ? "ok" : "MISMATCH") << "\n";
  return r.matches ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(2)_k anyon simulator and braid synthesizer", "anyonforge"};
  app.require_subcommand(1);

  ModelArgs model_args;
  auto* model_cmd = app.add_subcommand("model", "Charges, fusion table, qdims");
  model_cmd->add_option("--k", model_args.k, "Level k >= 2")->required();
  model_cmd->add_option("--format", model_args.format)
      ->check(CLI::IsMember({"json", "text"}));

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Pentagon, hexagon, braid relations");
  check_cmd->add_option("--k", check_args.k, "Level k >= 2")->required();
  check_cmd->add_option("--max-strands", check_args.max_strands)
      ->check(CLI::Range(2, 6));
  check_cmd->add_flag("--debug-corrupt-f", check_args.corrupt_f,
                      "Perturb one F entry (negative control)");

  BasisArgs basis_args;
  auto* basis_cmd = app.add_subcommand("basis", "Fusion basis or code space as JSON");
  basis_cmd->add_option("--k", basis_args.k, "Level k >= 2")->required();
  basis_cmd->add_option("--leaves", basis_args.leaves,
                        "Comma-separated twice-spin leaf charges");
  basis_cmd->add_option("--total", basis_args.total, "Twice-spin total charge");
  basis_cmd->add_option("--code", basis_args.code,
                        "dense1, dense2, dense3, product or merged");
  basis_cmd->add_option("--out", basis_args.out, "Output path (default stdout)");

  SynthArgs synth_args;
  auto* synth_cmd = app.add_subcommand("synth", "Search for a braid");
  synth_cmd->add_option("--k", synth_args.k, "Level k >= 2")->required();
  synth_cmd->add_option("--target", synth_args.target,
                        "P, B1, B3, E, identity or NOT");
  synth_cmd->add_option("--target-file", synth_args.target_file,
                        "JSON {\"id\": ..., \"matrix\": 2x2} single-qubit gate");
  synth_cmd->add_option("--max-length", synth_args.config.max_length)
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--tol", synth_args.config.tolerance)
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--phase-tol", synth_args.config.phase_tolerance)
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--weave-only", synth_args.config.weave_only)
      ->default_str("true");
  synth_cmd->add_option("--workers", synth_args.config.workers)
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--out", synth_args.out, "Braid file path");
  synth_cmd->add_option("--curve", synth_args.curve, "CSV curve path");
  synth_cmd->add_option("--format", synth_args.format, "stdout format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  AssembleArgs assemble_args;
  auto* assemble_cmd = app.add_subcommand("assemble", "Compose logical gates");
  assemble_cmd->add_option("--k", assemble_args.k, "Level k >= 2")->required();
  assemble_cmd->add_option("--gate", assemble_args.gate, "cz, ccz, merge or split")
      ->required();
  assemble_cmd->add_option("--p", assemble_args.p, "P braid file");
  assemble_cmd->add_option("--b1", assemble_args.b1, "B1 braid file");
  assemble_cmd->add_option("--b3", assemble_args.b3, "B3 braid file");
  assemble_cmd->add_option("--e", assemble_args.e, "E braid file");
  assemble_cmd->add_option("--phase", assemble_args.phase_angle,
                           "CCZ phase as a multiple of pi (default -1)");
  assemble_cmd->add_option("--out", assemble_args.out, "Report path");
  assemble_cmd->add_option("--braid-out", assemble_args.braid_out,
                           "Assembled braid file path");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Recompute a braid file's numbers");
  verify_cmd->add_option("file", verify_args.file)->required();
  verify_cmd->add_option("--tol", verify_args.tol)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*model_cmd) return run_model(model_args);
    if (*check_cmd) return run_check(check_args);
    if (*basis_cmd) return run_basis(basis_args);
    if (*synth_cmd) return run_synth(synth_args);
    if (*assemble_cmd) return run_assemble(assemble_args);
    if (*verify_cmd) return run_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const af::TargetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const af::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
