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

// Read-outs of a propagated state and the two worked scenarios (a Bell pair
// and a three-atom GHZ state) with their analytic weights.

#ifndef DICKE4_OBSERVABLES_HPP_
#define DICKE4_OBSERVABLES_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "dicke4/dense_matrix.hpp"
#include "dicke4/lindblad_solver.hpp"
#include "dicke4/symmetric_sector.hpp"

namespace dicke4 {

enum class Observable { kTrace, kInversion, kEntropy };

/// "trace", "inversion" or "entropy".  Throws std::invalid_argument otherwise.
Observable parse_observable(const std::string& name);
std::string observable_name(Observable o);

struct ObservableSeries {
  std::vector<double> taus;
  std::map<std::string, std::vector<double>> values;

  /// Throws std::invalid_argument unless taus is strictly increasing and
  /// every column has one value per tau.
  void validate() const;
};

/// Real part of the trace.
double trace(const SymmetricVector& v);

/// <S3>: sum of coeff * q3 over the generalized Dicke states.
double atomic_inversion(const SymmetricVector& v);

enum class LogBase { kBits, kNats };

/// Von Neumann entropy from the eigenvalues of the dense reconstruction.
/// Eigenvalues in [-1e-10, 0] count as zero.  Throws NumericalError when the
/// matrix is not Hermitian to 1e-10 or an eigenvalue is below -1e-10, and
/// OracleLimitError above the dense limit.
double von_neumann_entropy(const SymmetricVector& v, LogBase base = LogBase::kBits);
double von_neumann_entropy(const DenseDensityMatrix& rho, LogBase base = LogBase::kBits);
double von_neumann_entropy(const Eigen::MatrixXcd& rho, LogBase base = LogBase::kBits);

inline constexpr double kNegativeEigenvalueTolerance = 1e-10;

/// |Psi+><Psi+| = P_{1,0,0} + P_{0,0,0} for Z = 2.
SymmetricVector bell_initial();

struct BellWeights {
  double b1;  // P_{1,1,0}
  double b2;  // P_{1,0,0}
  double b3;  // P_{1,-1,0}
  double b4;  // P_{0,0,0}
};

BellWeights bell_weights_reference(double s, double tau);

/// |GHZ><GHZ| with |GHZ> = (|111> - |000>)/sqrt(2), for Z = 3.
SymmetricVector ghz_initial();

struct GhzWeights {
  double c1;  // P_{3/2,3/2,0}
  double c2;  // P_{3/2,1/2,0}
  double c3;  // P_{3/2,-1/2,0}
  double c4;  // P_{3/2,-3/2,0}
  double c5;  // minus the weight of each of P_{0,0,3/2} and P_{0,0,-3/2}
};

/// Pure damping (s = 0).
GhzWeights ghz_weights_reference(double tau);

/// steps + 1 equally spaced points from 0 to tau_max inclusive.
std::vector<double> uniform_tau_grid(double tau_max, int steps);

/// Propagates v0 to every tau and records the requested observables.
ObservableSeries symmetric_series(const SymmetricVector& v0, const ModelParams& p,
                                  std::span<const double> taus, std::span<const Observable> which);

}  // namespace dicke4

#endif  // DICKE4_OBSERVABLES_HPP_
