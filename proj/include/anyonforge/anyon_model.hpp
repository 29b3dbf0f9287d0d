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

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "anyonforge/linalg.hpp"

namespace anyonforge {

/// Topological charge j of an SU(2)_k anyon, stored as the integer 2j.
class Charge {
 public:
  constexpr Charge() = default;
  constexpr explicit Charge(int twice_spin) : twice_spin_(twice_spin) {}

  constexpr int twice_spin() const { return twice_spin_; }
  constexpr double spin() const { return 0.5 * twice_spin_; }
  constexpr bool is_vacuum() const { return twice_spin_ == 0; }

  auto operator<=>(const Charge&) const = default;

 private:
  int twice_spin_ = 0;
};

/// Renders a charge as "0", "1/2", "1", "3/2", ...
std::string to_string(Charge c);

std::vector<Charge> charges_from_twice_spins(const std::vector<int>& twice_spins);
std::vector<int> twice_spins(const std::vector<Charge>& charges);

/// One F block [F^{abc}_d]: rows are the admissible (ab)->e channels, columns
/// the admissible (bc)->f channels, both ascending.
struct FBlock {
  std::vector<Charge> rows;
  std::vector<Charge> cols;
  Matrix matrix;

  /// Entry for channels (e, f); zero when either channel is inadmissible.
  Complex entry(Charge e, Charge f) const;
};

/// Memoized F and R symbols for one level. Built once, read-only afterwards.
class SymbolCache {
 public:
  using FKey = std::array<int, 4>;
  using RKey = std::array<int, 3>;

  const FBlock* find_f(const FKey& key) const;
  const Complex* find_r(const RKey& key) const;

  const std::map<FKey, FBlock>& f_blocks() const { return f_symbols_; }
  const std::map<RKey, Complex>& r_symbols() const { return r_symbols_; }

 private:
  friend class AnyonModel;
  std::map<FKey, FBlock> f_symbols_;
  std::map<RKey, Complex> r_symbols_;
};

class ChargeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// SU(2)_k anyon model: charges 0, 1/2, ..., k/2 with truncated fusion.
///
/// All symbols are computed at construction, so a constructed model is
/// immutable and can be shared across threads. If the environment variable
/// ANYONFORGE_CACHE_DIR is set, the symbol tables are loaded from (or saved
/// to) a versioned CBOR file in that directory.
class AnyonModel {
 public:
  explicit AnyonModel(int level);

  int level() const { return level_; }
  double deformation_angle() const;
  int charge_count() const { return level_ + 1; }
  std::vector<Charge> charges() const;

  bool valid(Charge c) const {
    return c.twice_spin() >= 0 && c.twice_spin() <= level_;
  }
  void require_valid(Charge c) const;

  /// Admissible total charges of a and b, ascending.
  std::vector<Charge> fuse(Charge a, Charge b) const;
  bool admissible(Charge a, Charge b, Charge c) const;

  /// q-integer [n] = sin(n pi/(k+2)) / sin(pi/(k+2)).
  double q_integer(int n) const;
  double qdim(Charge a) const;

  /// [F^{abc}_d]; throws ChargeError when no (e, f) channel is admissible.
  const FBlock& f_symbol(Charge a, Charge b, Charge c, Charge d) const;
  /// Single F entry, zero for inadmissible labels.
  Complex f_entry(Charge a, Charge b, Charge c, Charge d, Charge e,
                  Charge f) const;

  /// Counterclockwise exchange eigenvalue R^{ab}_c.
  Complex r_symbol(Charge a, Charge b, Charge c) const;

  const SymbolCache& cache() const { return *cache_; }

  /// Returns a copy whose F entry (e, f) of block (a, b, c, d) is shifted by
  /// delta. Only meant for negative-control checks.
  AnyonModel with_perturbed_f(Charge a, Charge b, Charge c, Charge d, Charge e,
                              Charge f, Complex delta) const;

 private:
  void build_symbols();
  bool load_cache(const std::string& path);
  void save_cache(const std::string& path) const;

  int level_;
  std::shared_ptr<const SymbolCache> cache_;
};

/// Maximum |LHS - RHS| of the pentagon equation over all admissible labels.
double verify_pentagon(const AnyonModel& model);

/// Maximum residual of both hexagon equations (R and R^{-1}) over all
/// admissible labels.
double verify_hexagon(const AnyonModel& model);

/// Largest |F F^dagger - I| entry over all stored blocks.
double max_f_unitarity_residual(const AnyonModel& model);

/// Largest ||R| - 1| over all stored R symbols.
double max_r_modulus_residual(const AnyonModel& model);

}  // namespace anyonforge
