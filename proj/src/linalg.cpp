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

#include "anyonforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anyonforge {

double unitarity_residual(const Matrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  if (u.rows() == 0) return 0.0;
  Matrix d = u * u.adjoint() - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

double distance(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw std::invalid_argument("distance: dimension mismatch");
  }
  if (u.rows() == 0) return 0.0;
  const double overlap =
      std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
  return std::sqrt(std::max(0.0, 1.0 - overlap));
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff_up_to_phase(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff_up_to_phase: dimension mismatch");
  }
  if (a.size() == 0) return 0.0;
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return a.cwiseAbs().maxCoeff();
  Complex ratio = a(r, c) / b(r, c);
  ratio /= std::abs(ratio);
  return (a - ratio * b).cwiseAbs().maxCoeff();
}

}  // namespace anyonforge
