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

#include "anyonforge/anyon_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "json.hpp"

namespace anyonforge {

namespace {

constexpr int kCacheFormatVersion = 1;

// Triangle condition on twice-spins at level k.
bool triangle(int a, int b, int c, int k) {
  return ((a + b + c) % 2 == 0) && c >= std::abs(a - b) && c <= a + b &&
         a + b + c <= 2 * k;
}

class QCalculus {
 public:
  explicit QCalculus(int k) : k_(k) {
    const int n_max = 3 * k + 8;
    factorial_.assign(n_max + 1, 1.0);
    for (int n = 1; n <= n_max; ++n) factorial_[n] = factorial_[n - 1] * qint(n);
  }

  double qint(int n) const {
    const double theta = std::numbers::pi / (k_ + 2);
    return std::sin(n * theta) / std::sin(theta);
  }

  double factorial(int n) const {
    if (n < 0 || n >= static_cast<int>(factorial_.size())) {
      throw std::logic_error("q-factorial argument out of range");
    }
    return factorial_[n];
  }

  // Delta(a, b, c) with twice-spin arguments.
  double delta(int a, int b, int c) const {
    const double num = factorial((a + b - c) / 2) * factorial((a - b + c) / 2) *
                       factorial((-a + b + c) / 2);
    const double den = factorial((a + b + c) / 2 + 1);
    return std::sqrt(num / den);
  }

  // q-deformed Racah-Wigner 6j symbol {a b e; c d f}, twice-spin arguments.
  double six_j(int a, int b, int e, int c, int d, int f) const {
    const int alpha[4] = {(a + b + e) / 2, (e + c + d) / 2, (b + c + f) / 2,
                          (a + f + d) / 2};
    const int beta[3] = {(a + b + c + d) / 2, (a + e + c + f) / 2,
                         (b + e + d + f) / 2};
    const int z_min = *std::max_element(alpha, alpha + 4);
    const int z_max = *std::min_element(beta, beta + 3);
    double sum = 0.0;
    for (int z = z_min; z <= z_max; ++z) {
      double den = 1.0;
      for (int x : alpha) den *= factorial(z - x);
      for (int y : beta) den *= factorial(y - z);
      if (den == 0.0) throw std::logic_error("vanishing 6j denominator");
      const double sign = (z % 2 == 0) ? 1.0 : -1.0;
      sum += sign * factorial(z + 1) / den;
    }
    return delta(a, b, e) * delta(e, c, d) * delta(b, c, f) * delta(a, f, d) *
           sum;
  }

 private:
  int k_;
  std::vector<double> factorial_;
};

std::string cache_file_name(int k) {
  return "su2_level_" + std::to_string(k) + ".v" +
         std::to_string(kCacheFormatVersion) + ".cbor";
}

}  // namespace

std::string to_string(Charge c) {
  const int t = c.twice_spin();
  if (t % 2 == 0) return std::to_string(t / 2);
  return std::to_string(t) + "/2";
}

std::vector<Charge> charges_from_twice_spins(const std::vector<int>& twice_spins) {
  std::vector<Charge> out;
  out.reserve(twice_spins.size());
  for (int t : twice_spins) out.emplace_back(t);
  return out;
}

std::vector<int> twice_spins(const std::vector<Charge>& charges) {
  std::vector<int> out;
  out.reserve(charges.size());
  for (Charge c : charges) out.push_back(c.twice_spin());
  return out;
}

Complex FBlock::entry(Charge e, Charge f) const {
  auto r = std::find(rows.begin(), rows.end(), e);
  auto c = std::find(cols.begin(), cols.end(), f);
  if (r == rows.end() || c == cols.end()) return 0.0;
  return matrix(r - rows.begin(), c - cols.begin());
}

const FBlock* SymbolCache::find_f(const FKey& key) const {
  auto it = f_symbols_.find(key);
  return it == f_symbols_.end() ? nullptr : &it->second;
}

const Complex* SymbolCache::find_r(const RKey& key) const {
  auto it = r_symbols_.find(key);
  return it == r_symbols_.end() ? nullptr : &it->second;
}

AnyonModel::AnyonModel(int level) : level_(level) {
  if (level < 2) {
    throw std::invalid_argument("SU(2)_k level must be >= 2, got " +
                                std::to_string(level));
  }
  const char* dir = std::getenv("ANYONFORGE_CACHE_DIR");
  if (dir != nullptr && *dir != '\0') {
    const std::string path =
        (std::filesystem::path(dir) / cache_file_name(level)).string();
    if (load_cache(path)) return;
    build_symbols();
    save_cache(path);
    return;
  }
  build_symbols();
}

double AnyonModel::deformation_angle() const {
  return std::numbers::pi / (level_ + 2);
}

std::vector<Charge> AnyonModel::charges() const {
  std::vector<Charge> out;
  for (int t = 0; t <= level_; ++t) out.emplace_back(t);
  return out;
}

void AnyonModel::require_valid(Charge c) const {
  if (!valid(c)) {
    throw ChargeError("charge " + to_string(c) + " outside SU(2)_" +
                      std::to_string(level_));
  }
}

std::vector<Charge> AnyonModel::fuse(Charge a, Charge b) const {
  require_valid(a);
  require_valid(b);
  const int m = a.twice_spin(), n = b.twice_spin();
  const int hi = std::min(m + n, 2 * level_ - (m + n));
  std::vector<Charge> out;
  for (int c = std::abs(m - n); c <= hi; c += 2) out.emplace_back(c);
  return out;
}

bool AnyonModel::admissible(Charge a, Charge b, Charge c) const {
  if (!valid(a) || !valid(b) || !valid(c)) return false;
  return triangle(a.twice_spin(), b.twice_spin(), c.twice_spin(), level_);
}

double AnyonModel::q_integer(int n) const {
  const double theta = deformation_angle();
  return std::sin(n * theta) / std::sin(theta);
}

double AnyonModel::qdim(Charge a) const {
  require_valid(a);
  return q_integer(a.twice_spin() + 1);
}

const FBlock& AnyonModel::f_symbol(Charge a, Charge b, Charge c,
                                   Charge d) const {
  for (Charge x : {a, b, c, d}) require_valid(x);
  const FBlock* block = cache_->find_f(
      {a.twice_spin(), b.twice_spin(), c.twice_spin(), d.twice_spin()});
  if (block == nullptr) {
    throw ChargeError("F^{" + to_string(a) + "," + to_string(b) + "," +
                      to_string(c) + "}_" + to_string(d) +
                      " has no admissible channel");
  }
  return *block;
}

Complex AnyonModel::f_entry(Charge a, Charge b, Charge c, Charge d, Charge e,
                            Charge f) const {
  for (Charge x : {a, b, c, d}) {
    if (!valid(x)) return 0.0;
  }
  const FBlock* block = cache_->find_f(
      {a.twice_spin(), b.twice_spin(), c.twice_spin(), d.twice_spin()});
  if (block == nullptr) return 0.0;
  return block->entry(e, f);
}

Complex AnyonModel::r_symbol(Charge a, Charge b, Charge c) const {
  const Complex* r =
      cache_->find_r({a.twice_spin(), b.twice_spin(), c.twice_spin()});
  if (r == nullptr) {
    throw ChargeError(to_string(c) + " is not a fusion channel of " +
                      to_string(a) + " x " + to_string(b));
  }
  return *r;
}

void AnyonModel::build_symbols() {
  auto cache = std::make_shared<SymbolCache>();
  const int k = level_;
  const QCalculus q(k);

  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= k; ++b) {
      for (int c = 0; c <= k; ++c) {
        if (!triangle(a, b, c, k)) continue;
        // R^{ab}_c = (-1)^{a+b-c} exp(i pi [c(c+1) - a(a+1) - b(b+1)]/(k+2)),
        // spins written as twice-spins so j(j+1) = t(t+2)/4.
        const int casimir = c * (c + 2) - a * (a + 2) - b * (b + 2);
        const double sign = (((a + b - c) / 2) % 2 == 0) ? 1.0 : -1.0;
        const double angle = std::numbers::pi * casimir / (4.0 * (k + 2));
        cache->r_symbols_[{a, b, c}] = sign * std::polar(1.0, angle);
      }
    }
  }

  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= k; ++b) {
      for (int c = 0; c <= k; ++c) {
        for (int d = 0; d <= k; ++d) {
          FBlock block;
          for (int e = 0; e <= k; ++e) {
            if (triangle(a, b, e, k) && triangle(e, c, d, k)) {
              block.rows.emplace_back(e);
            }
          }
          for (int f = 0; f <= k; ++f) {
            if (triangle(b, c, f, k) && triangle(a, f, d, k)) {
              block.cols.emplace_back(f);
            }
          }
          if (block.rows.empty() || block.cols.empty()) continue;
          const auto n_rows = static_cast<Eigen::Index>(block.rows.size());
          const auto n_cols = static_cast<Eigen::Index>(block.cols.size());
          block.matrix = Matrix::Zero(n_rows, n_cols);
          const double sign = (((a + b + c + d) / 2) % 2 == 0) ? 1.0 : -1.0;
          for (Eigen::Index i = 0; i < n_rows; ++i) {
            const int e = block.rows[i].twice_spin();
            for (Eigen::Index j = 0; j < n_cols; ++j) {
              const int f = block.cols[j].twice_spin();
              block.matrix(i, j) = sign *
                                   std::sqrt(q.qint(e + 1) * q.qint(f + 1)) *
                                   q.six_j(a, b, e, c, d, f);
            }
          }
          cache->f_symbols_.emplace(SymbolCache::FKey{a, b, c, d},
                                    std::move(block));
        }
      }
    }
  }
  cache_ = std::move(cache);
}

bool AnyonModel::load_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  try {
    const nlohmann::json doc = nlohmann::json::from_cbor(in);
    if (doc.at("format") != "anyonforge-symbols" ||
        doc.at("version") != kCacheFormatVersion || doc.at("k") != level_) {
      return false;
    }
    auto cache = std::make_shared<SymbolCache>();
    for (const auto& r : doc.at("r")) {
      cache->r_symbols_[{r[0].get<int>(), r[1].get<int>(), r[2].get<int>()}] =
          Complex(r[3].get<double>(), r[4].get<double>());
    }
    for (const auto& f : doc.at("f")) {
      FBlock block;
      block.rows = charges_from_twice_spins(f[4].get<std::vector<int>>());
      block.cols = charges_from_twice_spins(f[5].get<std::vector<int>>());
      const auto& values = f[6];
      const auto n_rows = static_cast<Eigen::Index>(block.rows.size());
      const auto n_cols = static_cast<Eigen::Index>(block.cols.size());
      if (values.size() != static_cast<std::size_t>(2 * n_rows * n_cols)) {
        return false;
      }
      block.matrix = Matrix::Zero(n_rows, n_cols);
      std::size_t pos = 0;
      for (Eigen::Index i = 0; i < n_rows; ++i) {
        for (Eigen::Index j = 0; j < n_cols; ++j, pos += 2) {
          block.matrix(i, j) =
              Complex(values[pos].get<double>(), values[pos + 1].get<double>());
        }
      }
      cache->f_symbols_.emplace(
          SymbolCache::FKey{f[0].get<int>(), f[1].get<int>(), f[2].get<int>(),
                            f[3].get<int>()},
          std::move(block));
    }
    cache_ = std::move(cache);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void AnyonModel::save_cache(const std::string& path) const {
  nlohmann::json doc;
  doc["format"] = "anyonforge-symbols";
  doc["version"] = kCacheFormatVersion;
  doc["k"] = level_;
  nlohmann::json r_list = nlohmann::json::array();
  for (const auto& [key, value] : cache_->r_symbols()) {
    r_list.push_back({key[0], key[1], key[2], value.real(), value.imag()});
  }
  nlohmann::json f_list = nlohmann::json::array();
  for (const auto& [key, block] : cache_->f_blocks()) {
    nlohmann::json values = nlohmann::json::array();
    for (Eigen::Index i = 0; i < block.matrix.rows(); ++i) {
      for (Eigen::Index j = 0; j < block.matrix.cols(); ++j) {
        values.push_back(block.matrix(i, j).real());
        values.push_back(block.matrix(i, j).imag());
      }
    }
    f_list.push_back({key[0], key[1], key[2], key[3], twice_spins(block.rows),
                      twice_spins(block.cols), values});
  }
  doc["r"] = std::move(r_list);
  doc["f"] = std::move(f_list);
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(),
                                      ec);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    const auto bytes = nlohmann::json::to_cbor(doc);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

AnyonModel AnyonModel::with_perturbed_f(Charge a, Charge b, Charge c, Charge d,
                                        Charge e, Charge f,
                                        Complex delta) const {
  const FBlock& original = f_symbol(a, b, c, d);
  auto r = std::find(original.rows.begin(), original.rows.end(), e);
  auto col = std::find(original.cols.begin(), original.cols.end(), f);
  if (r == original.rows.end() || col == original.cols.end()) {
    throw ChargeError("perturbation target is not an admissible F entry");
  }
  auto cache = std::make_shared<SymbolCache>(*cache_);
  cache->f_symbols_
      .at({a.twice_spin(), b.twice_spin(), c.twice_spin(), d.twice_spin()})
      .matrix(r - original.rows.begin(), col - original.cols.begin()) += delta;
  AnyonModel copy = *this;
  copy.cache_ = std::move(cache);
  return copy;
}

double verify_pentagon(const AnyonModel& model) {
  // [F^{fcd}_e]_{gl} [F^{abl}_e]_{fk}
  //     = sum_h [F^{abc}_g]_{fh} [F^{ahd}_e]_{gk} [F^{bcd}_k]_{hl}
  const auto charges = model.charges();
  double worst = 0.0;
  for (Charge a : charges) {
    for (Charge b : charges) {
      for (Charge c : charges) {
        for (Charge d : charges) {
          for (Charge e : charges) {
            for (Charge f : model.fuse(a, b)) {
              for (Charge g : model.fuse(f, c)) {
                if (!model.admissible(g, d, e)) continue;
                for (Charge l : model.fuse(c, d)) {
                  for (Charge k : model.fuse(b, l)) {
                    if (!model.admissible(a, k, e)) continue;
                    const Complex lhs = model.f_entry(f, c, d, e, g, l) *
                                        model.f_entry(a, b, l, e, f, k);
                    Complex rhs = 0.0;
                    for (Charge h : model.fuse(b, c)) {
                      rhs += model.f_entry(a, b, c, g, f, h) *
                             model.f_entry(a, h, d, e, g, k) *
                             model.f_entry(b, c, d, k, h, l);
                    }
                    worst = std::max(worst, std::abs(lhs - rhs));
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return worst;
}

double verify_hexagon(const AnyonModel& model) {
  // R^{ca}_e [F^{acb}_d]_{eg} R^{cb}_g
  //     = sum_f [F^{cab}_d]_{ef} R^{cf}_d [F^{abc}_d]_{fg}
  // and the same with every R replaced by its inverse.
  const auto charges = model.charges();
  double worst = 0.0;
  for (Charge a : charges) {
    for (Charge b : charges) {
      for (Charge c : charges) {
        for (Charge d : charges) {
          for (Charge e : model.fuse(c, a)) {
            if (!model.admissible(e, b, d)) continue;
            for (Charge g : model.fuse(c, b)) {
              if (!model.admissible(a, g, d)) continue;
              for (int inverse = 0; inverse < 2; ++inverse) {
                auto r = [&](Charge x, Charge y, Charge z) {
                  const Complex v = model.r_symbol(x, y, z);
                  return inverse ? 1.0 / v : v;
                };
                const Complex lhs =
                    r(c, a, e) * model.f_entry(a, c, b, d, e, g) * r(c, b, g);
                Complex rhs = 0.0;
                for (Charge f : model.fuse(a, b)) {
                  if (!model.admissible(c, f, d)) continue;
                  rhs += model.f_entry(c, a, b, d, e, f) * r(c, f, d) *
                         model.f_entry(a, b, c, d, f, g);
                }
                worst = std::max(worst, std::abs(lhs - rhs));
              }
            }
          }
        }
      }
    }
  }
  return worst;
}

double max_f_unitarity_residual(const AnyonModel& model) {
  double worst = 0.0;
  for (const auto& [key, block] : model.cache().f_blocks()) {
    worst = std::max(worst, unitarity_residual(block.matrix));
  }
  return worst;
}

double max_r_modulus_residual(const AnyonModel& model) {
  double worst = 0.0;
  for (const auto& [key, value] : model.cache().r_symbols()) {
    worst = std::max(worst, std::abs(std::abs(value) - 1.0));
  }
  return worst;
}

}  // namespace anyonforge
