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

// Fully symmetrical basis states P^(Z)_{q,q3,sigma3} = S(u^a d^b s^g c^d).
//
// S averages over the distinct arrangements of the configuration, so
// S(u^2 s) = (u u s + u s u + s u u) / 3.  With that normalization the dual
// pairing needs a factor of the multiplicity M = Z!/(a! b! g! d!):
//
//   M(q) * Tr(P_dual(q) P_q') = delta(q, q'),   dual flips the sign of sigma3.

#ifndef DICKE4_SYMMETRIC_SECTOR_HPP_
#define DICKE4_SYMMETRIC_SECTOR_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dicke4/dense_matrix.hpp"
#include "dicke4/half_integer.hpp"
#include "dicke4/su4_algebra.hpp"

namespace dicke4 {

/// Occupation counts of u, d, s and c.
struct SymmetricConfig {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  int delta = 0;

  constexpr int z() const { return alpha + beta + gamma + delta; }
  friend constexpr bool operator==(const SymmetricConfig&, const SymmetricConfig&) = default;
};

struct QuantumNumbers {
  HalfInteger q;
  HalfInteger q3;
  HalfInteger sigma3;

  friend constexpr bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
  friend constexpr auto operator<=>(const QuantumNumbers&, const QuantumNumbers&) = default;

  /// "(3/2,1/2,0)"
  std::string to_string() const;
};

/// Labels of the other five su(2) subalgebras; sigma + q = m + n = u + v = Z/2.
struct DerivedLabels {
  HalfInteger sigma, m, m3, n, n3, u, u3, v, v3;
};

DerivedLabels derived_labels(int z, const QuantumNumbers& qn);

/// Throws std::invalid_argument for negative counts or an empty configuration.
QuantumNumbers qn_from_config(const SymmetricConfig& c);

bool is_valid(int z, const QuantumNumbers& qn);

/// Throws std::invalid_argument when qn is not a label of the Z-atom basis.
SymmetricConfig config_from_qn(int z, const QuantumNumbers& qn);

/// Z! / (alpha! beta! gamma! delta!).  Throws std::overflow_error past 2^64.
std::uint64_t multiplicity(const SymmetricConfig& c);

/// sigma3 -> -sigma3.
constexpr QuantumNumbers dual_state(const QuantumNumbers& qn) { return {qn.q, qn.q3, -qn.sigma3}; }

/// Generalized Dicke states (q = Z/2, sigma3 = 0) are the only ones with non-zero trace.
constexpr bool is_trace_carrying(int z, const QuantumNumbers& qn) {
  return qn.q.twice() == z && qn.sigma3.twice() == 0;
}

/// (Z+1)(Z+2)(Z+3)/6.
constexpr std::size_t symmetric_dimension(int z) {
  const auto n = static_cast<std::size_t>(z);
  return (n + 1) * (n + 2) * (n + 3) / 6;
}

/// All labels for Z atoms ordered by q, then q3, then sigma3, each descending.
/// Throws std::invalid_argument for z < 1.
std::vector<QuantumNumbers> enumerate_basis(int z);

/// Immutable basis table with an index map.
class SymmetricBasis {
 public:
  explicit SymmetricBasis(int z);

  /// Shared, lazily built table; safe to call concurrently.
  static const SymmetricBasis& get(int z);

  int z() const { return z_; }
  std::size_t size() const { return states_.size(); }
  const QuantumNumbers& operator[](std::size_t i) const { return states_[i]; }
  std::span<const QuantumNumbers> states() const { return states_; }

  std::optional<std::size_t> index_of(const QuantumNumbers& qn) const;
  /// Throws std::invalid_argument if qn is not in the basis.
  std::size_t require_index(const QuantumNumbers& qn) const;

  /// Indices of the generalized Dicke states, q3 descending from Z/2.
  std::span<const std::size_t> trace_carrying() const { return trace_carrying_; }

 private:
  std::size_t slot(const QuantumNumbers& qn) const;

  int z_;
  std::vector<QuantumNumbers> states_;
  std::vector<std::size_t> trace_carrying_;
  std::vector<std::int32_t> lookup_;  // -1 where no state
};

/// Expansion coefficients over the basis for fixed Z.
class SymmetricVector {
 public:
  explicit SymmetricVector(int z);
  SymmetricVector(int z, Eigen::VectorXcd coeffs);

  static SymmetricVector basis_state(int z, const QuantumNumbers& qn,
                                     std::complex<double> weight = 1.0);

  int z() const { return z_; }
  const SymmetricBasis& basis() const { return *basis_; }
  std::size_t size() const { return static_cast<std::size_t>(coeffs_.size()); }

  const Eigen::VectorXcd& coeffs() const { return coeffs_; }
  Eigen::VectorXcd& coeffs() { return coeffs_; }

  std::complex<double> coefficient(const QuantumNumbers& qn) const;
  void set(const QuantumNumbers& qn, std::complex<double> value);

  /// Sum of generalized Dicke coefficients.
  std::complex<double> trace() const;

 private:
  int z_;
  const SymmetricBasis* basis_;
  Eigen::VectorXcd coeffs_;
};

struct LadderAction {
  HalfInteger coefficient;
  std::optional<QuantumNumbers> target;  // empty when the coefficient vanishes
};

/// Action of one of the 18 superoperators on a basis state.  Raising and
/// lowering operators move exactly one factor (e.g. M+ turns a c into a u)
/// with coefficient (x -+ x3); the X3 operators return (x3, same state).
LadderAction apply_ladder(Superoperator x, const QuantumNumbers& qn, int z);

/// Eigenvalue of Q~ on a fully symmetric state: q.
constexpr HalfInteger apply_qtilde(const QuantumNumbers& qn) { return qn.q; }

/// The same eigenvalue through Q~ = (Z + Q33)/4 with Q33 = 4 M3 - 2 (Q3 + Sigma3).
HalfInteger qtilde_via_q33(int z, const QuantumNumbers& qn);

/// Calls `visit` once for every distinct arrangement of the configuration.
void for_each_arrangement(const SymmetricConfig& c, const std::function<void(const Word&)>& visit);

/// S(u^a d^b s^g c^d) as an exact operator sum (weights 1/M).
OperatorSum symmetrized_sum(const SymmetricConfig& c);

/// Throws OracleLimitError above oracle_limit().
DenseDensityMatrix embed_dense(int z, const QuantumNumbers& qn);
DenseDensityMatrix embed_dense(const SymmetricVector& v);

/// coeffs[qn] = M(qn) * Tr(P_dual(qn) rho).  Throws std::invalid_argument when
/// rho is not permutation symmetric to 1e-10 and OracleLimitError above the limit.
SymmetricVector extract_coefficients(const DenseDensityMatrix& rho);

inline constexpr double kSymmetryTolerance = 1e-10;

}  // namespace dicke4

#endif  // DICKE4_SYMMETRIC_SECTOR_HPP_
