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

#include "dicke4/observables.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "dicke4/errors.hpp"

namespace dicke4 {

Observable parse_observable(const std::string& name) {
  if (name == "trace") return Observable::kTrace;
  if (name == "inversion") return Observable::kInversion;
  if (name == "entropy") return Observable::kEntropy;
  throw std::invalid_argument("unknown observable '" + name + "' (expected trace, inversion or entropy)");
}

std::string observable_name(Observable o) {
  switch (o) {
    case Observable::kTrace:
      return "trace";
    case Observable::kInversion:
      return "inversion";
    case Observable::kEntropy:
      return "entropy";
  }
  return "?";
}

void ObservableSeries::validate() const {
  for (std::size_t i = 1; i < taus.size(); ++i) {
    if (!(taus[i] > taus[i - 1])) throw std::invalid_argument("taus must be strictly increasing");
  }
  for (const auto& [name, column] : values) {
    if (column.size() != taus.size()) {
      throw std::invalid_argument("observable '" + name + "' has " + std::to_string(column.size()) +
                                  " values for " + std::to_string(taus.size()) + " taus");
    }
  }
}

double trace(const SymmetricVector& v) { return v.trace().real(); }

double atomic_inversion(const SymmetricVector& v) {
  const SymmetricBasis& basis = v.basis();
  double acc = 0.0;
  for (std::size_t i : basis.trace_carrying()) {
    acc += v.coeffs()[static_cast<Eigen::Index>(i)].real() * basis[i].q3.to_double();
  }
  return acc;
}

namespace {

// Index groups that rho couples, through structurally non-zero entries.
std::vector<std::vector<Eigen::Index>> coupled_blocks(const Eigen::MatrixXcd& rho) {
  const Eigen::Index n = rho.rows();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  const auto find = [&](Eigen::Index i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      auto& p = parent[static_cast<std::size_t>(i)];
      p = parent[static_cast<std::size_t>(p)];
      i = p;
    }
    return i;
  };
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r != c && rho(r, c) != 0.0) parent[static_cast<std::size_t>(find(r))] = find(c);
    }
  }
  std::map<Eigen::Index, std::vector<Eigen::Index>> groups;
  for (Eigen::Index i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<Eigen::Index>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.real(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("entropy eigensolver failed");
    return es.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("entropy eigensolver failed");
  return es.eigenvalues();
}

}  // namespace

double von_neumann_entropy(const Eigen::MatrixXcd& rho, LogBase base) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("entropy needs a square matrix");
  const double defect = rho.size() == 0 ? 0.0 : (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw NumericalError("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const Eigen::MatrixXcd h = 0.5 * (rho + rho.adjoint());
  double acc = 0.0;
  for (const auto& block : coupled_blocks(h)) {
    const auto m = static_cast<Eigen::Index>(block.size());
    Eigen::MatrixXcd sub(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index i = 0; i < m; ++i) {
        sub(i, j) = h(block[static_cast<std::size_t>(i)], block[static_cast<std::size_t>(j)]);
      }
    }
    for (double lambda : hermitian_eigenvalues(sub)) {
      if (lambda < -kNegativeEigenvalueTolerance) {
        throw NumericalError("density matrix has eigenvalue " + std::to_string(lambda));
      }
      if (lambda > 0.0) acc -= lambda * std::log(lambda);
    }
  }
  return base == LogBase::kBits ? acc / std::log(2.0) : acc;
}

double von_neumann_entropy(const DenseDensityMatrix& rho, LogBase base) {
  return von_neumann_entropy(rho.entries, base);
}

double von_neumann_entropy(const SymmetricVector& v, LogBase base) {
  return von_neumann_entropy(embed_dense(v), base);
}

SymmetricVector bell_initial() {
  SymmetricVector v(2);
  v.set({1, 0, 0}, 1.0);
  v.set({0, 0, 0}, 1.0);
  return v;
}

BellWeights bell_weights_reference(double s, double tau) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("s must lie in [0, 1]");
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  const double f = -std::expm1(-tau);
  return {s * f * (1.0 - (1.0 - s) * f), 1.0 - f * (1.0 - 2.0 * s * (1.0 - s) * f),
          (1.0 - s) * f * (1.0 - s * f), std::exp(-tau)};
}

SymmetricVector ghz_initial() {
  const HalfInteger three_halves = HalfInteger::half(3);
  SymmetricVector v(3);
  v.set({three_halves, three_halves, 0}, 0.5);
  v.set({three_halves, -three_halves, 0}, 0.5);
  v.set({0, 0, three_halves}, -0.5);
  v.set({0, 0, -three_halves}, -0.5);
  return v;
}

GhzWeights ghz_weights_reference(double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  const double f = -std::expm1(-tau);
  return {0.5 * std::exp(-3.0 * tau), 1.5 * std::exp(-2.0 * tau) * f, 1.5 * std::exp(-tau) * f * f,
          0.5 * (1.0 + f * f * f), 0.5 * std::exp(-1.5 * tau)};
}

std::vector<double> uniform_tau_grid(double tau_max, int steps) {
  if (!(tau_max > 0.0) || !std::isfinite(tau_max)) {
    throw std::invalid_argument("tau-max must be finite and > 0");
  }
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  std::vector<double> taus(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) taus[static_cast<std::size_t>(i)] = tau_max * i / steps;
  return taus;
}

ObservableSeries symmetric_series(const SymmetricVector& v0, const ModelParams& p,
                                  std::span<const double> taus, std::span<const Observable> which) {
  p.validate();
  for (Observable o : which) {
    if (o == Observable::kEntropy) require_within_oracle_limit(p.z, "entropy");
  }
  ObservableSeries out;
  out.taus.assign(taus.begin(), taus.end());
  for (Observable o : which) out.values[observable_name(o)].reserve(taus.size());
  for (double tau : taus) {
    const SymmetricVector v = propagate(v0, p, tau);
    for (Observable o : which) {
      auto& column = out.values[observable_name(o)];
      switch (o) {
        case Observable::kTrace:
          column.push_back(trace(v));
          break;
        case Observable::kInversion:
          column.push_back(atomic_inversion(v));
          break;
        case Observable::kEntropy:
          column.push_back(von_neumann_entropy(v));
          break;
      }
    }
  }
  out.validate();
  return out;
}

}  // namespace dicke4
