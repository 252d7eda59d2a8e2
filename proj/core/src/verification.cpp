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

#include "dicke4/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "dicke4/dense_oracle.hpp"
#include "dicke4/errors.hpp"
#include "dicke4/lindblad_solver.hpp"
#include "dicke4/observables.hpp"
#include "dicke4/su4_algebra.hpp"
#include "dicke4/symmetric_sector.hpp"

namespace dicke4 {

namespace {

CheckResult exact_check(std::string name, int failures, std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = failures == 0;
  r.detail = failures == 0 ? std::move(detail) : std::to_string(failures) + " mismatches; " + detail;
  return r;
}

CheckResult tolerance_check(std::string name, double error, double tolerance, std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.max_error = error;
  r.tolerance = tolerance;
  r.passed = std::isfinite(error) && error <= tolerance;
  r.detail = std::move(detail);
  return r;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Word random_word(int z, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  Word w(static_cast<std::size_t>(z));
  for (Factor& f : w) f = kAllFactors[static_cast<std::size_t>(pick(rng))];
  return w;
}

CheckResult check_commutators(int z, const VerifyOptions& o, std::mt19937_64& rng) {
  int failures = 0;
  for (int n = 0; n < o.words_per_z; ++n) {
    const OperatorSum t = OperatorSum::word(random_word(z, rng));
    for (Superoperator x : kAllSuperoperators) {
      for (Superoperator y : kAllSuperoperators) {
        if (commutator(x, y, t) != apply_combination(commutator_table_entry(x, y), t)) ++failures;
      }
    }
  }
  return exact_check("commutator table Z=" + std::to_string(z), failures,
                     std::to_string(o.words_per_z) + " random words x 324 pairs, exact");
}

CheckResult check_biorthogonality(int z) {
  const SymmetricBasis& basis = SymmetricBasis::get(z);
  std::vector<Eigen::MatrixXcd> dense;
  dense.reserve(basis.size());
  for (const QuantumNumbers& qn : basis.states()) dense.push_back(embed_dense(z, qn).entries);
  double err = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const QuantumNumbers dual = dual_state(basis[i]);
    const Eigen::MatrixXcd& left = dense[basis.require_index(dual)];
    const auto m = static_cast<double>(multiplicity(config_from_qn(z, dual)));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const std::complex<double> pairing = m * (left * dense[j]).trace();
      err = std::max(err, std::abs(pairing - (i == j ? 1.0 : 0.0)));
    }
  }
  return tolerance_check("biorthogonality Z=" + std::to_string(z), err, 1e-12,
                         "M * Tr(P_dual P') = delta over all label pairs");
}

CheckResult check_ladders(int z) {
  const SymmetricBasis& basis = SymmetricBasis::get(z);
  double err = 0.0;
  for (const QuantumNumbers& qn : basis.states()) {
    const OperatorSum state = symmetrized_sum(config_from_qn(z, qn));
    for (Superoperator x : kAllSuperoperators) {
      const OperatorSum image = apply_superoperator(x, state);
      const Eigen::MatrixXcd expected = image.empty() ? DenseDensityMatrix(z).entries : to_dense(image).entries;
      const LadderAction a = apply_ladder(x, qn, z);
      Eigen::MatrixXcd got = Eigen::MatrixXcd::Zero(expected.rows(), expected.cols());
      if (a.target) got = a.coefficient.to_double() * embed_dense(z, *a.target).entries;
      err = std::max(err, max_abs(got - expected));
    }
  }
  return tolerance_check("ladder actions Z=" + std::to_string(z), err, 1e-12,
                         "18 superoperators on every basis state vs dense");
}

CheckResult check_liouvillian(int z) {
  const ModelParams p{z, 0.3, 0.8};
  const Eigen::SparseMatrix<double> l = liouvillian_matrix(p);
  const SymmetricBasis& basis = SymmetricBasis::get(z);
  double err = 0.0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    SymmetricVector image(z, l.col(static_cast<Eigen::Index>(j)).toDense().cast<std::complex<double>>());
    const DenseDensityMatrix expected = lindblad_apply(p, embed_dense(z, basis[j]));
    err = std::max(err, max_abs(embed_dense(image).entries - expected.entries));
  }
  return tolerance_check("generator vs dense Z=" + std::to_string(z), err, 1e-12,
                         "s=0.3, ctilde=0.8 on every basis state");
}

SymmetricVector mixed_test_state(int z) {
  SymmetricVector v(z);
  for (Eigen::Index i = 0; i < v.coeffs().size(); ++i) v.coeffs()[i] = 1.0 / static_cast<double>(i + 1);
  return v;
}

CheckResult check_bch(int z, const VerifyOptions& o) {
  const SymmetricVector v0 = mixed_test_state(z);
  const DenseDensityMatrix rho0 = embed_dense(v0);
  double err = 0.0;
  for (double s : {0.0, 0.3, 0.9}) {
    for (double ctilde : {0.5, 0.8}) {
      const ModelParams p{z, s, ctilde};
      for (double tau : {0.5, 2.0}) {
        SymmetricVector v = propagate(v0, p, tau);
        if (o.inject_fault) v.coeffs()[0] += 1e-3;
        const DenseDensityMatrix rho = dense_propagate(p, rho0, tau);
        err = std::max(err, max_abs(embed_dense(v).entries - rho.entries));
      }
    }
  }
  return tolerance_check("propagation vs dense Z=" + std::to_string(z), err, 1e-8,
                         "s in {0,0.3,0.9}, ctilde in {0.5,0.8}, tau in {0.5,2}");
}

CheckResult check_spectrum(int z) {
  double err = 0.0;
  for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const SpectrumResult r = spectrum(ModelParams{z, s, 0.5});
    for (int k = 0; k <= z; ++k) {
      err = std::max(err, std::abs(r.eigenvalues[static_cast<std::size_t>(k)] + k));
      const std::size_t idx = SymmetricBasis::get(z).trace_carrying()[static_cast<std::size_t>(k)];
      err = std::max(err, std::abs(r.stationary.coeffs()[static_cast<Eigen::Index>(idx)] -
                                   stationary_weight(z, s, k)));
    }
  }
  return tolerance_check("spectrum Z=" + std::to_string(z), err, 1e-8,
                         "eigenvalues 0..-Z and binomial stationary state");
}

CheckResult check_bell() {
  const SymmetricVector v0 = bell_initial();
  double err = 0.0;
  for (double s : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    for (double tau : {0.0, 0.25, 1.0, 5.0}) {
      const SymmetricVector v = propagate(v0, ModelParams{2, s, 0.5}, tau);
      const BellWeights b = bell_weights_reference(s, tau);
      err = std::max({err, std::abs(v.coefficient({1, 1, 0}) - b.b1), std::abs(v.coefficient({1, 0, 0}) - b.b2),
                      std::abs(v.coefficient({1, -1, 0}) - b.b3), std::abs(v.coefficient({0, 0, 0}) - b.b4)});
    }
  }
  return tolerance_check("Bell weights", err, 1e-12, "analytic b1..b4");
}

CheckResult check_ghz() {
  const SymmetricVector v0 = ghz_initial();
  const HalfInteger h = HalfInteger::half(3);
  const HalfInteger l = HalfInteger::half(1);
  double err = 0.0;
  for (double tau : {0.0, 0.25, 1.0, 5.0}) {
    const SymmetricVector v = propagate(v0, ModelParams{3, 0.0, 0.5}, tau);
    const GhzWeights c = ghz_weights_reference(tau);
    err = std::max({err, std::abs(v.coefficient({h, h, 0}) - c.c1), std::abs(v.coefficient({h, l, 0}) - c.c2),
                    std::abs(v.coefficient({h, -l, 0}) - c.c3), std::abs(v.coefficient({h, -h, 0}) - c.c4),
                    std::abs(v.coefficient({0, 0, h}) + c.c5), std::abs(v.coefficient({0, 0, -h}) + c.c5)});
  }
  return tolerance_check("GHZ weights", err, 1e-12, "analytic c1..c5");
}

}  // namespace

double stationary_weight(int z, double s, int k) {
  double binom = 1.0;
  for (int i = 1; i <= k; ++i) binom = binom * (z - k + i) / i;
  return binom * std::pow(s, z - k) * std::pow(1.0 - s, k);
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.z_max < 1) throw std::invalid_argument("z-max must be >= 1");
  require_within_oracle_limit(options.z_max, "verify");
  std::mt19937_64 rng(options.seed);
  std::vector<CheckResult> out;
  for (int z = 1; z <= options.z_max; ++z) out.push_back(check_commutators(z, options, rng));
  for (int z = 1; z <= options.z_max; ++z) {
    out.push_back(check_biorthogonality(z));
    out.push_back(check_ladders(z));
    out.push_back(check_liouvillian(z));
    out.push_back(check_bch(z, options));
    out.push_back(check_spectrum(z));
  }
  if (options.z_max >= 2) out.push_back(check_bell());
  if (options.z_max >= 3) out.push_back(check_ghz());
  return out;
}

}  // namespace dicke4
