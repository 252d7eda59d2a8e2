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

// Master equation in the fully symmetric sector.  With B scaled to one and
// tau = B t,
//
//   dP/dtau = [ -Z/2 + (1-s) Q- - (1-2s) Q3 + s Q+ + (1 - 2 C~)(Z/2 - Q~) ] P.
//
// The damping/pumping part is propagated by the factorized exponential
//
//   e^{-Z tau/2} e^{A Q+} e^{B Q3} e^{C Q-}   or   e^{-Z tau/2} e^{D Q-} e^{E Q3} e^{F Q+}
//
// and the dephasing part, which commutes with Q+-, Q3, is a diagonal factor.

#ifndef DICKE4_LINDBLAD_SOLVER_HPP_
#define DICKE4_LINDBLAD_SOLVER_HPP_

#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "dicke4/half_integer.hpp"
#include "dicke4/symmetric_sector.hpp"

namespace dicke4 {

struct ModelParams {
  int z = 1;
  double s = 0.0;       // pumping parameter, 0 = pure damping, 1 = full inversion
  double ctilde = 0.5;  // C/B; 1/2 switches the dephasing term off

  /// Throws std::invalid_argument unless z >= 1, 0 <= s <= 1, ctilde >= 0 (all finite).
  void validate() const;
};

struct BchCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double f_coeff = 0.0;
  double f_tau = 0.0;  // 1 - e^{-tau}
};

/// Throws std::invalid_argument for tau < 0 or s outside [0, 1], and
/// LimitDomainError when a denominator 1 - s f or 1 - (1-s) f vanishes.
BchCoefficients bch_coefficients(double s, double tau);

/// Generator over the symmetric basis; column j is L applied to basis state j.
Eigen::SparseMatrix<double> liouvillian_matrix(const ModelParams& p);

enum class BchOrdering {
  kPlusFirst,   // e^{A Q+} e^{B Q3} e^{C Q-}
  kMinusFirst,  // e^{D Q-} e^{E Q3} e^{F Q+}
  kAutomatic,   // plus-first for s <= 1/2, minus-first otherwise
};

/// exp(coefficient * X) for X = Q+ or Q-, summed exactly along the ladder.
SymmetricVector exp_ladder(Part direction, double coefficient, const SymmetricVector& v);

/// Damping and pumping only; p.ctilde is ignored (see apply_dephasing_factor).
SymmetricVector propagate_bch(const SymmetricVector& v, const ModelParams& p, double tau,
                              BchOrdering ordering = BchOrdering::kAutomatic);

/// Multiplies each coefficient by exp((1 - 2 ctilde)(Z/2 - q) tau).
SymmetricVector apply_dephasing_factor(const SymmetricVector& v, double ctilde, double tau);

/// Full solution: propagate_bch with automatic ordering and the dephasing factor.
SymmetricVector propagate(const SymmetricVector& v, const ModelParams& p, double tau);

/// Pure damping (s = 0) of a single basis state in closed form:
/// e^{-Z tau/2} sum_k binom(q+q3, k) f^k (1-f)^{q3-k} P_{q, q3-k, sigma3}.
SymmetricVector propagate_decay_closed_form(const QuantumNumbers& qn, int z, double tau);

struct SpectrumResult {
  std::vector<double> eigenvalues;             // descending, units of B
  std::vector<SymmetricVector> eigenvectors;   // aligned with eigenvalues
  SymmetricVector stationary;                  // lambda = 0, unit trace
};

/// Restriction of the generator (ctilde ignored) to the q = Z/2 block; row
/// and column k stand for q3 = Z/2 - k.
Eigen::MatrixXd dicke_block_matrix(int z, double s);

/// Eigen-decomposition of the q = Z/2 block.  Eigenvectors for lambda = 0 are
/// normalized to unit trace; the others to max |coefficient| = 1 with the
/// first non-zero coefficient positive.  Throws NumericalError if the
/// eigenvalues cannot be resolved.
SpectrumResult spectrum(const ModelParams& p);

/// Every eigenvalue of liouvillian_matrix(p) with multiplicity, descending.
/// The generator preserves q and sigma3, so this is assembled block by block.
std::vector<double> full_spectrum(const ModelParams& p);

// --- Truncated Dicke-basis model ------------------------------------------
//
// dP/dtau = -(1-s)/2 (S+S- P + P S+S- - 2 S- P S+) - s/2 (S-S+ P + P S-S+ - 2 S+ P S-)
// on |Z/2, M><Z/2, M'|, a (Z+1) x (Z+1) matrix with index k <-> M = Z/2 - k.

/// Collective S+ in the Dicke basis (S- is its transpose).
Eigen::MatrixXd dicke_raising(int z);

/// |Z/2, m><Z/2, m_prime|.  Throws std::invalid_argument on out-of-range labels.
Eigen::MatrixXcd dicke_projector(int z, HalfInteger m, HalfInteger m_prime);

/// Right-hand side of the truncated equation.
Eigen::MatrixXcd truncated_dicke_apply(int z, double s, const Eigen::MatrixXcd& p);

/// Adaptive Dormand-Prince 5(4) integration with relative tolerance 1e-10.
/// Returns the state at each requested tau (ascending, >= 0).  Throws
/// NumericalError when the integrator cannot meet its tolerance.
std::vector<Eigen::MatrixXcd> truncated_dicke_trajectory(int z, double s, const Eigen::MatrixXcd& p0,
                                                         std::span<const double> taus);

Eigen::MatrixXcd truncated_dicke_propagate(int z, double s, const Eigen::MatrixXcd& p0, double tau);

/// <S3> of a Dicke-sector density matrix.
double dicke_sector_inversion(int z, const Eigen::MatrixXcd& p);

}  // namespace dicke4

#endif  // DICKE4_LINDBLAD_SOLVER_HPP_
