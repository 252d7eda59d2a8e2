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

#ifndef DICKE4_DENSE_MATRIX_HPP_
#define DICKE4_DENSE_MATRIX_HPP_

#include <cstddef>

#include <Eigen/Dense>

namespace dicke4 {

// Ket ordering is |b_1 ... b_Z> with site 1 as the most significant bit and
// bit value 0 meaning |1>, so index 0 is |1...1> and index 2^Z-1 is |0...0>.

/// 2^Z x 2^Z complex operator on Z qubits.
struct DenseDensityMatrix {
  int z = 0;
  Eigen::MatrixXcd entries;

  DenseDensityMatrix() = default;
  explicit DenseDensityMatrix(int z_);
  DenseDensityMatrix(int z_, Eigen::MatrixXcd m);

  std::size_t dimension() const { return std::size_t{1} << z; }
};

/// Largest |rho - rho^dagger| entry.
double hermiticity_defect(const DenseDensityMatrix& rho);

/// Largest entry of |P rho P^T - rho| over the adjacent site transpositions P,
/// which generate the full permutation group.
double permutation_asymmetry(const DenseDensityMatrix& rho);

}  // namespace dicke4

#endif  // DICKE4_DENSE_MATRIX_HPP_
