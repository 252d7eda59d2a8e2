// Copyright 2026 The dicke4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force master equation on 2^Z x 2^Z density matrices, with the damping,
// pumping and dephasing sums applied site by site through Pauli operators
// (B = 1):
//
//   L P = -(1-s)/2 sum_i [s+_i s-_i P + P s+_i s-_i - 2 s-_i P s+_i]
//         - s/2     sum_i [s-_i s+_i P + P s-_i s+_i - 2 s+_i P s-_i]
//         - (2 ctilde - 1)/4 sum_i [P - s3_i P s3_i]

#ifndef DICKE4_DENSE_ORACLE_HPP_
#define DICKE4_DENSE_ORACLE_HPP_

#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "dicke4/dense_matrix.hpp"
#include "dicke4/half_integer.hpp"
#include "dicke4/lindblad_solver.hpp"

namespace dicke4 {

/// Throws std::invalid_argument when rho.z != p.z or the matrix is not
/// 2^Z x 2^Z, and OracleLimitError above the dense limit.
DenseDensityMatrix lindblad_apply(const ModelParams& p, const DenseDensityMatrix& rho);

/// The generator acting on column-major vec(rho), 4^Z x 4^Z.  All entries are real.
Eigen::SparseMatrix<double> dense_liouvillian(const ModelParams& p);

/// Largest Z propagated with the Taylor action of exp(tau L); above it the
/// adaptive integrator is used.
inline constexpr int kDenseExponentialLimit = 6;

/// exp(tau L) rho0.
DenseDensityMatrix dense_propagate(const ModelParams& p, const DenseDensityMatrix& rho0, double tau);

/// rho(tau) for each tau (ascending, >= 0).
std::vector<DenseDensityMatrix> dense_trajectory(const ModelParams& p, const DenseDensityMatrix& rho0,
                                                 std::span<const double> taus);

/// Equal superposition of the kets with Z/2 + s3 atoms in |1>, unit norm.
/// Throws std::invalid_argument unless |s3| <= Z/2 with matching parity.
Eigen::VectorXcd dicke_state_dense(int z, HalfInteger s3);

/// Sum over sites of s3_i / 2 as a diagonal dense operator.
Eigen::VectorXd collective_s3_diagonal(int z);

}  // namespace dicke4

#endif  // DICKE4_DENSE_ORACLE_HPP_
