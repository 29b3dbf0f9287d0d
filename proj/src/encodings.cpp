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

#include "anyonforge/encodings.hpp"

#include <algorithm>
#include <set>

namespace anyonforge {

namespace {

constexpr Charge kVacuum{0};
constexpr Charge kOne{2};

std::string bits_of(std::size_t value, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Charge bit_charge(char bit) { return bit == '1' ? kOne : kVacuum; }

void check_charges(const AnyonModel& model, QubitCharges charges) {
  model.require_valid(charges.a);
  model.require_valid(charges.b);
  const auto channels = model.fuse(charges.b, charges.b);
  const bool has_zero =
      std::find(channels.begin(), channels.end(), kVacuum) != channels.end();
  const bool has_one =
      std::find(channels.begin(), channels.end(), kOne) != channels.end();
  if (!has_zero || !has_one) {
    throw EncodingError("b = " + to_string(charges.b) +
                        " does not fuse with itself into both 0 and 1");
  }
  if (!model.admissible(charges.a, kOne, charges.a)) {
    throw EncodingError("a = " + to_string(charges.a) +
                        " cannot absorb a charge-1 pair and stay a");
  }
}

// Classifies every grouped state: listed ones are computational, the rest are
// not. Throws if a listed state is missing from the basis.
CodeSpace classify(GroupedBasis basis, std::string scheme, int qubits,
                   QubitCharges charges,
                   const std::vector<std::pair<std::string, GroupedState>>& comp,
                   std::vector<std::string> roles,
                   std::vector<std::size_t> qubit_blocks) {
  CodeSpace code;
  code.scheme = std::move(scheme);
  code.qubit_count = qubits;
  code.charges = charges;
  code.leaf_roles = std::move(roles);
  code.qubit_blocks = std::move(qubit_blocks);
  std::set<std::size_t> used;
  for (const auto& [bits, state] : comp) {
    auto idx = basis.index_of(state);
    if (!idx) {
      throw EncodingError("computational state |" + bits +
                          "> is not admissible for these charges");
    }
    code.computational.emplace_back(bits, *idx);
    used.insert(*idx);
  }
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    if (!used.count(i)) code.non_computational.push_back(i);
  }
  code.basis = std::move(basis);
  return code;
}

std::vector<Charge> pair_internals(Charge first, Charge total) {
  return {first, total};
}

}  // namespace

QubitCharges default_charges(const AnyonModel& model) {
  if (model.level() == 8) return {Charge(1), Charge(2)};
  return {Charge(1), Charge(1)};
}

Matrix CodeSpace::computational_vectors() const {
  Matrix out(basis.to_fine.rows(), static_cast<Eigen::Index>(computational.size()));
  for (std::size_t j = 0; j < computational.size(); ++j) {
    out.col(static_cast<Eigen::Index>(j)) =
        basis.to_fine.col(static_cast<Eigen::Index>(computational[j].second));
  }
  return out;
}

Matrix CodeSpace::computational_projector() const {
  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(dim()),
                          static_cast<Eigen::Index>(dim()));
  for (const auto& [bits, idx] : computational) {
    p(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)) = 1.0;
  }
  return p;
}

Matrix CodeSpace::non_computational_projector() const {
  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(dim()),
                          static_cast<Eigen::Index>(dim()));
  for (std::size_t idx : non_computational) {
    p(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)) = 1.0;
  }
  return p;
}

Matrix CodeSpace::to_code_basis(const Matrix& fine_operator) const {
  if (fine_operator.rows() != basis.to_fine.rows() ||
      fine_operator.cols() != basis.to_fine.rows()) {
    throw std::invalid_argument("to_code_basis: dimension mismatch");
  }
  return basis.to_fine.adjoint() * fine_operator * basis.to_fine;
}

CodeSpace multi_qubit_code(const AnyonModel& model, int n, QubitCharges charges) {
  if (n < 1) throw std::invalid_argument("multi_qubit_code: n must be >= 1");
  check_charges(model, charges);
  const Charge a = charges.a, b = charges.b;

  std::vector<Charge> leaves{a};
  std::vector<std::string> roles{"a"};
  std::vector<std::size_t> sizes{1};
  std::vector<std::size_t> qubit_blocks;
  for (int i = 0; i < n; ++i) {
    leaves.insert(leaves.end(), {b, b});
    roles.insert(roles.end(), {"b", "b"});
    sizes.push_back(2);
    qubit_blocks.push_back(static_cast<std::size_t>(i) + 1);
  }
  leaves.push_back(a);
  roles.push_back("a");
  sizes.push_back(1);

  const FusionBasis fine = enumerate_basis(model, leaves, kVacuum);
  const Grouping grouping = Grouping::from_sizes(sizes);
  GroupedBasis grouped = regroup(model, fine, grouping);

  std::vector<std::pair<std::string, GroupedState>> comp;
  for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
    const std::string bits = bits_of(v, n);
    GroupedState s;
    s.block_charges.push_back(a);
    s.block_internals.push_back({a});
    for (char bit : bits) {
      s.block_charges.push_back(bit_charge(bit));
      s.block_internals.push_back(pair_internals(b, bit_charge(bit)));
    }
    s.block_charges.push_back(a);
    s.block_internals.push_back({a});
    s.coarse_internals.assign(static_cast<std::size_t>(n) + 1, a);
    s.coarse_internals.push_back(kVacuum);
    comp.emplace_back(bits, std::move(s));
  }
  return classify(std::move(grouped), "dense", n, charges, comp,
                  std::move(roles), std::move(qubit_blocks));
}

CodeSpace single_qubit_code(const AnyonModel& model, SingleQubitScheme scheme,
                            QubitCharges charges) {
  CodeSpace code = multi_qubit_code(model, 1, charges);
  code.scheme =
      scheme == SingleQubitScheme::kFourAnyon ? "four_anyon" : "three_anyon";
  return code;
}

CodeSpace product_code(const AnyonModel& model, QubitCharges charges) {
  check_charges(model, charges);
  const Charge a = charges.a, b = charges.b;
  const std::vector<Charge> leaves{a, b, b, a, a, b, b, a};
  const FusionBasis fine = enumerate_basis(model, leaves, kVacuum);
  GroupedBasis grouped =
      regroup(model, fine, Grouping::from_sizes({1, 2, 1, 1, 2, 1}));

  std::vector<std::pair<std::string, GroupedState>> comp;
  for (std::size_t v = 0; v < 4; ++v) {
    const std::string bits = bits_of(v, 2);
    GroupedState s;
    s.block_charges = {a, bit_charge(bits[0]), a, a, bit_charge(bits[1]), a};
    s.block_internals = {{a},
                         pair_internals(b, bit_charge(bits[0])),
                         {a},
                         {a},
                         pair_internals(b, bit_charge(bits[1])),
                         {a}};
    s.coarse_internals = {a, a, kVacuum, a, a, kVacuum};
    comp.emplace_back(bits, std::move(s));
  }
  return classify(std::move(grouped), "product", 2, charges, comp,
                  {"a", "b", "b", "a", "a", "b", "b", "a"}, {1, 4});
}

CodeSpace merged_code(const AnyonModel& model, QubitCharges charges) {
  check_charges(model, charges);
  const Charge a = charges.a, b = charges.b;
  const std::vector<Charge> leaves{a, b, b, a, a, b, b, a};
  const FusionBasis fine = enumerate_basis(model, leaves, kVacuum);
  GroupedBasis grouped =
      regroup(model, fine, Grouping::from_sizes({1, 2, 2, 2, 1}));

  std::vector<std::pair<std::string, GroupedState>> comp;
  for (std::size_t v = 0; v < 4; ++v) {
    const std::string bits = bits_of(v, 2);
    GroupedState s;
    s.block_charges = {a, bit_charge(bits[0]), kVacuum, bit_charge(bits[1]), a};
    s.block_internals = {{a},
                         pair_internals(b, bit_charge(bits[0])),
                         pair_internals(a, kVacuum),
                         pair_internals(b, bit_charge(bits[1])),
                         {a}};
    s.coarse_internals = {a, a, a, a, kVacuum};
    comp.emplace_back(bits, std::move(s));
  }
  return classify(std::move(grouped), "merged", 2, charges, comp,
                  {"a", "b", "b", "a", "a", "b", "b", "a"}, {1, 3});
}

std::string sector_label(const std::vector<Charge>& block_charges) {
  std::string out;
  for (std::size_t i = 0; i < block_charges.size(); ++i) {
    if (i) out += ",";
    out += to_string(block_charges[i]);
  }
  return out;
}

LeakageReport leakage(const Matrix& u, const CodeSpace& code) {
  const auto d = static_cast<Eigen::Index>(code.dim());
  if (u.rows() != d || u.cols() != d) {
    throw std::invalid_argument("leakage: operator is " +
                                std::to_string(u.rows()) + "x" +
                                std::to_string(u.cols()) + ", code basis has " +
                                std::to_string(d) + " states");
  }
  LeakageReport report;
  const Matrix off =
      code.non_computational_projector() * u * code.computational_projector();
  report.leakage_norm = std::min(1.0, operator_norm(off));

  double worst = -1.0;
  for (const auto& [bits, idx] : code.computational) {
    const double col = off.col(static_cast<Eigen::Index>(idx)).norm();
    if (col > worst) {
      worst = col;
      report.worst_input = bits;
    }
  }
  for (const auto& [charges, dim] : code.basis.sector_dims()) {
    if (dim != 1) continue;
    const auto idx = static_cast<Eigen::Index>(code.basis.sector(charges).front());
    report.sector_phases[sector_label(charges)] = u(idx, idx);
  }
  return report;
}

}  // namespace anyonforge
