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

#include "dicke4/dense_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace dicke4 {

DenseDensityMatrix::DenseDensityMatrix(int z_) : z(z_) {
  const auto n = static_cast<Eigen::Index>(dimension());
  entries = Eigen::MatrixXcd::Zero(n, n);
}

DenseDensityMatrix::DenseDensityMatrix(int z_, Eigen::MatrixXcd m) : z(z_), entries(std::move(m)) {
  const auto n = static_cast<Eigen::Index>(dimension());
  if (entries.rows() != n || entries.cols() != n) {
    throw std::invalid_argument("dense matrix size does not match 2^Z");
  }
}

double hermiticity_defect(const DenseDensityMatrix& rho) {
  return (rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff();
}

double permutation_asymmetry(const DenseDensityMatrix& rho) {
  const int z = rho.z;
  const auto n = static_cast<Eigen::Index>(rho.dimension());
  // Swap sites k and k+1, i.e. bits (z-1-k) and (z-2-k).
  const auto swap_sites = [z](Eigen::Index idx, int k) {
    const int hi = z - 1 - k;
    const int lo = hi - 1;
    const auto b_hi = (idx >> hi) & 1;
    const auto b_lo = (idx >> lo) & 1;
    if (b_hi == b_lo) return idx;
    return idx ^ ((Eigen::Index{1} << hi) | (Eigen::Index{1} << lo));
  };
  double worst = 0.0;
  for (int k = 0; k + 1 < z; ++k) {
    for (Eigen::Index a = 0; a < n; ++a) {
      const auto pa = swap_sites(a, k);
      for (Eigen::Index b = 0; b < n; ++b) {
        worst = std::max(worst, std::abs(rho.entries(pa, swap_sites(b, k)) - rho.entries(a, b)));
      }
    }
  }
  return worst;
}

}  // namespace dicke4
