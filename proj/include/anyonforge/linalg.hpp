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

#include <complex>

#include <Eigen/Dense>

namespace anyonforge {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr double kPhaseTolerance = 1e-12;

/// max |U U^dagger - I| entry.
double unitarity_residual(const Matrix& u);

/// Global-phase-invariant distance sqrt(max(0, 1 - |tr(U^dagger V)| / dim)).
/// Throws std::invalid_argument on a shape mismatch.
double distance(const Matrix& u, const Matrix& v);

/// Largest singular value.
double operator_norm(const Matrix& m);

/// max |A - B| entry.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// max |A - e^{i phi} B| entry, phi chosen from the largest entry of B.
double max_abs_diff_up_to_phase(const Matrix& a, const Matrix& b);

}  // namespace anyonforge
