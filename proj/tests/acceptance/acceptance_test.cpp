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

// One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "dicke4/dense_oracle.hpp"
#include "dicke4/lindblad_solver.hpp"
#include "dicke4/observables.hpp"
#include "dicke4/su4_algebra.hpp"
#include "dicke4/symmetric_sector.hpp"
#include "pauli_oracle.hpp"

namespace {

using namespace dicke4;
using Clock = std::chrono::steady_clock;

// Pinned tolerances and budgets.
constexpr int kWordsPerZ = 100;
constexpr double kCommutatorBudgetSeconds = 30.0;
constexpr double kLadderTolerance = 1e-12;
constexpr double kBchTolerance = 1e-8;
constexpr double kBchBudgetSeconds = 60.0;
constexpr double kWeightTolerance = 1e-12;
constexpr double kEigenvalueTolerance = 1e-8;
constexpr double kStationaryTolerance = 1e-10;
constexpr double kInversionTolerance = 1e-10;
constexpr double kTruncatedTolerance = 1e-8;
constexpr double kEntropyTolerance = 1e-6;
constexpr double kPhysicalityTolerance = 1e-10;
constexpr double kPerformanceBudgetSeconds = 1.0;

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

Outcome commutator_table() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20260101);
  long mismatches = 0;
  long checked = 0;
  for (int z = 1; z <= 4; ++z) {
    for (int n = 0; n < kWordsPerZ; ++n) {
      const OperatorSum t = OperatorSum::word(testing::random_word(z, rng));
      for (Superoperator x : kAllSuperoperators) {
        for (Superoperator y : kAllSuperoperators) {
          ++checked;
          if (commutator(x, y, t) != apply_combination(commutator_table_entry(x, y), t)) ++mismatches;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  return {mismatches == 0 && elapsed < kCommutatorBudgetSeconds,
          std::to_string(checked) + " cells over " + std::to_string(kWordsPerZ) + " words/Z, " +
              std::to_string(mismatches) + " mismatches, " + fmt("%.2f s (table with %g corrected cells)", elapsed,
                                                                   commutator_table_errata().size())};
}

Outcome dimension_formula() {
  bool ok = true;
  for (int z = 1; z <= 20; ++z) {
    ok = ok && enumerate_basis(z).size() == static_cast<std::size_t>((z + 1) * (z + 2) * (z + 3) / 6);
  }
  ok = ok && enumerate_basis(5).size() == 56 && enumerate_basis(10).size() == 286 && enumerate_basis(20).size() == 1771;
  return {ok, "Z=1..20; 56, 286, 1771 at Z=5, 10, 20"};
}

Outcome ladder_vs_dense() {
  double err = 0.0;
  for (int z = 1; z <= 4; ++z) {
    for (const QuantumNumbers& qn : enumerate_basis(z)) {
      const testing::Mat state = testing::basis_matrix(z, qn);
      for (Superoperator x : kAllSuperoperators) {
        const testing::Mat expected = testing::superoperator_matrix_action(x, state, z);
        const LadderAction a = apply_ladder(x, qn, z);
        testing::Mat got = testing::Mat::Zero(expected.rows(), expected.cols());
        if (a.target) got = a.coefficient.to_double() * embed_dense(z, *a.target).entries;
        err = std::max(err, max_abs(got - expected));
      }
    }
  }
  return {err <= kLadderTolerance, fmt("18 superoperators, all basis states Z<=4, max err %.2e (tol %.0e)", err,
                                       kLadderTolerance)};
}

Outcome worked_example() {
  const HalfInteger h = HalfInteger::half(3);
  const LadderAction a = apply_ladder({Family::Q, Part::Minus}, {h, h, 0}, 3);
  const bool ok = a.target && *a.target == QuantumNumbers{h, HalfInteger::half(1), 0} && a.coefficient == 3;
  return {ok, "Q- P(3/2,3/2,0) = " + a.coefficient.to_string() + " P" +
                  (a.target ? a.target->to_string() : std::string("(none)"))};
}

Outcome bch_vs_oracle() {
  const auto start = Clock::now();
  double err = 0.0;
  int cases = 0;
  for (int z : {2, 3}) {
    SymmetricVector v0(z);
    for (Eigen::Index i = 0; i < v0.coeffs().size(); ++i) v0.coeffs()[i] = 1.0 / static_cast<double>(i + 2);
    const DenseDensityMatrix rho0 = embed_dense(v0);
    for (double s : {0.0, 0.3, 0.5, 0.9}) {
      for (double tau : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        const ModelParams p{z, s, 0.5};
        const DenseDensityMatrix got = embed_dense(propagate_bch(v0, p, tau));
        err = std::max(err, max_abs(got.entries - dense_propagate(p, rho0, tau).entries));
        ++cases;
      }
    }
  }
  const double elapsed = seconds_since(start);
  return {err <= kBchTolerance && elapsed < kBchBudgetSeconds,
          std::to_string(cases) + fmt(" cases, max err %.2e (tol %.0e), %.2f s", err, kBchTolerance, elapsed)};
}

// Published Bell weights, transcribed independently of the library.
struct Bell {
  double b1, b2, b3, b4;
};
Bell bell_published(double s, double tau) {
  const double f = 1.0 - std::exp(-tau);
  return {s * f * (1.0 - (1.0 - s) * f), 1.0 - f * (1.0 - 2.0 * s * (1.0 - s) * f), (1.0 - s) * f * (1.0 - s * f),
          1.0 - f};
}

Outcome bell_weights() {
  double err = 0.0;
  const auto coeffs = [](double s, double tau) {
    const SymmetricVector v = propagate(bell_initial(), {2, s, 0.5}, tau);
    return Bell{v.coefficient({1, 1, 0}).real(), v.coefficient({1, 0, 0}).real(), v.coefficient({1, -1, 0}).real(),
                v.coefficient({0, 0, 0}).real()};
  };
  const auto diff = [](const Bell& a, const Bell& b) {
    return std::max({std::abs(a.b1 - b.b1), std::abs(a.b2 - b.b2), std::abs(a.b3 - b.b3), std::abs(a.b4 - b.b4)});
  };
  for (double s : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
    for (double tau = 0.0; tau <= 10.0; tau += 0.25) err = std::max(err, diff(coeffs(s, tau), bell_published(s, tau)));
    // Asymptotics s^2, 2s(1-s), (1-s)^2.
    err = std::max(err, diff(coeffs(s, 40.0), Bell{s * s, 2 * s * (1 - s), (1 - s) * (1 - s), 0.0}));
  }
  for (double tau = 0.0; tau <= 10.0; tau += 0.25) {
    const double e2 = std::exp(-2.0 * tau);
    err = std::max(err, diff(coeffs(0.5, tau), Bell{0.25 * (1 - e2), 0.5 * (1 + e2), 0.25 * (1 - e2), std::exp(-tau)}));
  }
  return {err <= kWeightTolerance, fmt("b1..b4, s=1/2 closed form, asymptotics: max err %.2e (tol %.0e)", err,
                                       kWeightTolerance)};
}

Outcome ghz_weights() {
  const HalfInteger h = HalfInteger::half(3);
  const HalfInteger half = HalfInteger::half(1);
  double err = 0.0;
  for (double tau = 0.0; tau <= 12.0; tau += 0.25) {
    const double f = 1.0 - std::exp(-tau);
    const SymmetricVector v = propagate(ghz_initial(), {3, 0.0, 0.5}, tau);
    const double c5 = 0.5 * std::exp(-1.5 * tau);
    const double expected[] = {0.5 * std::exp(-3 * tau), 1.5 * std::exp(-2 * tau) * f, 1.5 * std::exp(-tau) * f * f,
                               0.5 * (1 + f * f * f), -c5, -c5};
    const QuantumNumbers labels[] = {{h, h, 0}, {h, half, 0}, {h, -half, 0}, {h, -h, 0}, {0, 0, h}, {0, 0, -h}};
    for (int i = 0; i < 6; ++i) err = std::max(err, std::abs(v.coefficient(labels[i]).real() - expected[i]));
    for (Eigen::Index i = 0; i < v.coeffs().size(); ++i) {
      const QuantumNumbers& qn = v.basis()[static_cast<std::size_t>(i)];
      if (std::find(std::begin(labels), std::end(labels), qn) == std::end(labels)) {
        err = std::max(err, std::abs(v.coeffs()[i]));
      }
    }
  }
  return {err <= kWeightTolerance, fmt("c1..c5 with -c5 on sigma3=+-3/2: max err %.2e (tol %.0e)", err,
                                       kWeightTolerance)};
}

Outcome spectrum_check() {
  double eig_err = 0.0;
  double stat_err = 0.0;
  for (int z = 1; z <= 10; ++z) {
    for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const SpectrumResult r = spectrum({z, s, 0.5});
      for (int k = 0; k <= z; ++k) eig_err = std::max(eig_err, std::abs(r.eigenvalues[static_cast<std::size_t>(k)] + k));
      for (std::size_t idx : SymmetricBasis::get(z).trace_carrying()) {
        const int m = (z + SymmetricBasis::get(z)[idx].q3.twice()) / 2;  // Z/2 + q3
        const double expected = binomial(z, m) * std::pow(s, m) * std::pow(1.0 - s, z - m);
        stat_err = std::max(stat_err, std::abs(r.stationary.coeffs()[static_cast<Eigen::Index>(idx)] - expected));
      }
    }
  }
  return {eig_err <= kEigenvalueTolerance && stat_err <= kStationaryTolerance,
          fmt("Z<=10: eigenvalue err %.2e (tol %.0e), stationary err %.2e", eig_err, kEigenvalueTolerance, stat_err) +
              fmt(" (tol %.0e)", kStationaryTolerance)};
}

Outcome inversion_formulas() {
  double err = 0.0;
  for (int z = 1; z <= 10; ++z) {
    const HalfInteger top = HalfInteger::half(z);
    const SymmetricVector excited = SymmetricVector::basis_state(z, {top, top, 0});
    for (double tau = 0.0; tau <= 10.0; tau += 0.1) {
      err = std::max(err, std::abs(atomic_inversion(propagate(excited, {z, 0.0, 0.5}, tau)) / z - (std::exp(-tau) - 0.5)));
      if (z % 2 == 0) {
        const SymmetricVector balanced = SymmetricVector::basis_state(z, {top, 0, 0});
        err = std::max(err, std::abs(atomic_inversion(propagate(balanced, {z, 0.0, 0.5}, tau)) / z -
                                     0.5 * (std::exp(-tau) - 1.0)));
      }
    }
  }
  std::vector<double> taus;
  for (double tau = 0.0; tau <= 10.0; tau += 0.1) taus.push_back(tau);
  const auto states = truncated_dicke_trajectory(2, 0.0, dicke_projector(2, 1, 1), taus);
  double truncated_err = 0.0;
  double gap = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const double t = taus[i];
    const double truncated = dicke_sector_inversion(2, states[i]) / 2;
    truncated_err = std::max(truncated_err, std::abs(truncated - ((1.0 + t) * std::exp(-2.0 * t) - 0.5)));
    gap = std::max(gap, (std::exp(-t) - 0.5) - truncated);
  }
  return {err <= kInversionTolerance && truncated_err <= kTruncatedTolerance && gap > 0.0,
          fmt("symmetric err %.2e (tol %.0e), truncated Z=2 err %.2e", err, kInversionTolerance, truncated_err) +
              fmt(" (tol %.0e), truncated decays faster by up to %.3f", kTruncatedTolerance, gap)};
}

Outcome entropy_endpoints() {
  const double bell0 = von_neumann_entropy(propagate(bell_initial(), {2, 0.5, 0.5}, 0.0));
  const double bell40 = von_neumann_entropy(propagate(bell_initial(), {2, 0.5, 0.5}, 40.0));
  const ModelParams damping{3, 0.0, 0.5};
  const double ghz0 = von_neumann_entropy(propagate(ghz_initial(), damping, 0.0));
  const double ghz40 = von_neumann_entropy(propagate(ghz_initial(), damping, 40.0));
  double peak = 0.0;
  double peak_tau = 0.0;
  for (double tau = 0.05; tau < 40.0; tau += 0.05) {
    const double e = von_neumann_entropy(propagate(ghz_initial(), damping, tau));
    if (e > peak) {
      peak = e;
      peak_tau = tau;
    }
  }
  const bool ok = std::abs(bell0) <= kEntropyTolerance && std::abs(bell40 - 2.0) <= kEntropyTolerance &&
                  std::abs(ghz0) <= kEntropyTolerance && ghz40 <= kEntropyTolerance && peak > ghz0 &&
                  peak > ghz40 && peak > kEntropyTolerance;
  return {ok, fmt("S_B(0)=%.1e S_B(40)=%.9f bits; ", bell0, bell40) +
                  fmt("S_GHZ(0)=%.1e max %.4f at tau=%.2f; ", ghz0, peak, peak_tau) + fmt("S_GHZ(40)=%.1e", ghz40)};
}

Outcome physicality() {
  struct Trajectory {
    SymmetricVector v0;
    ModelParams p;
  };
  std::vector<Trajectory> runs;
  for (double s : {0.0, 0.1, 0.5, 0.9, 1.0}) runs.push_back({bell_initial(), {2, s, 0.5}});
  for (double ctilde : {0.5, 0.9}) runs.push_back({ghz_initial(), {3, 0.0, ctilde}});
  for (int z = 1; z <= 6; ++z) {
    for (int k = 0; k <= z; ++k) {
      const HalfInteger top = HalfInteger::half(z);
      runs.push_back({SymmetricVector::basis_state(z, {top, HalfInteger::half(z - 2 * k), 0}), {z, 0.3, 0.75}});
    }
  }
  double drift = 0.0;
  double hermiticity = 0.0;
  double min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const Trajectory& t : runs) {
    const double trace0 = trace(t.v0);
    for (double tau = 0.0; tau <= 20.0; tau += 0.5) {
      const SymmetricVector v = propagate(t.v0, t.p, tau);
      const DenseDensityMatrix rho = embed_dense(v);
      drift = std::max(drift, std::abs(rho.entries.trace().real() - trace0));
      hermiticity = std::max(hermiticity, hermiticity_defect(rho));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (rho.entries + rho.entries.adjoint()),
                                                         Eigen::EigenvaluesOnly);
      min_eigenvalue = std::min(min_eigenvalue, es.eigenvalues().minCoeff());
    }
  }
  const bool ok = drift <= kPhysicalityTolerance && hermiticity <= kPhysicalityTolerance &&
                  min_eigenvalue >= -kPhysicalityTolerance;
  return {ok, std::to_string(runs.size()) + fmt(" trajectories: trace drift %.1e, Hermiticity %.1e, ", drift,
                                                 hermiticity) +
                  fmt("min eigenvalue %.1e (tol %.0e)", min_eigenvalue, kPhysicalityTolerance)};
}

Outcome performance() {
  const int z = 20;
  const HalfInteger top = HalfInteger::half(z);
  const SymmetricVector v0 = SymmetricVector::basis_state(z, {top, top, 0});
  const std::vector<double> taus = uniform_tau_grid(10.0, 199);
  const Observable which[] = {Observable::kTrace, Observable::kInversion};
  const auto start = Clock::now();
  const ObservableSeries series = symmetric_series(v0, {z, 0.3, 0.8}, taus, which);
  const double elapsed = seconds_since(start);
  const bool sane = std::abs(series.values.at("trace").back() - 1.0) < 1e-10;

  // State-count ratio 4^10 / 286, rounded to three significant figures.
  const boost::rational<long long> ratio(1LL << 20, static_cast<long long>(symmetric_dimension(10)));
  const long long nearest_ten = (ratio.numerator() + 5 * ratio.denominator()) / (10 * ratio.denominator()) * 10;
  const bool ok = elapsed < kPerformanceBudgetSeconds && sane && taus.size() == 200 && nearest_ten == 3670;
  return {ok, fmt("Z=20 (%g states), 200 tau points in %.3f s (budget %.0f s); ", static_cast<double>(v0.size()),
                  elapsed, kPerformanceBudgetSeconds) +
                  "4^10/286 = " + std::to_string(ratio.numerator()) + "/" + std::to_string(ratio.denominator()) +
                  " ~ " + std::to_string(nearest_ten) + "; dense Z=20 would need 4^20 = 1099511627776 entries"};
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"commutator table", commutator_table},   {"dimension formula", dimension_formula},
      {"ladder vs dense", ladder_vs_dense},     {"Q- worked example", worked_example},
      {"BCH vs dense oracle", bch_vs_oracle},   {"Bell weights", bell_weights},
      {"GHZ weights", ghz_weights},             {"spectrum", spectrum_check},
      {"inversion formulas", inversion_formulas}, {"entropy endpoints", entropy_endpoints},
      {"physicality", physicality},             {"performance", performance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::printf("%s  %2zu  %-20s  %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
