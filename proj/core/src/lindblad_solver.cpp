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

#include "dicke4/lindblad_solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <boost/numeric/odeint.hpp>

#include "dicke4/errors.hpp"

namespace dicke4 {

namespace {

constexpr Superoperator kQPlus{Family::Q, Part::Plus};
constexpr Superoperator kQMinus{Family::Q, Part::Minus};
constexpr Superoperator kQThree{Family::Q, Part::Three};

// Q+ and Q- ladder links of every basis state, precomputed per Z.
struct LadderTable {
  std::vector<std::int32_t> up;
  std::vector<double> up_coefficient;
  std::vector<std::int32_t> down;
  std::vector<double> down_coefficient;
  std::vector<double> q;
  std::vector<double> q3;

  explicit LadderTable(int z) {
    const SymmetricBasis& basis = SymmetricBasis::get(z);
    const std::size_t n = basis.size();
    up.assign(n, -1);
    down.assign(n, -1);
    up_coefficient.assign(n, 0.0);
    down_coefficient.assign(n, 0.0);
    q.resize(n);
    q3.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      q[i] = basis[i].q.to_double();
      q3[i] = basis[i].q3.to_double();
      if (const LadderAction a = apply_ladder(kQPlus, basis[i], z); a.target) {
        up[i] = static_cast<std::int32_t>(basis.require_index(*a.target));
        up_coefficient[i] = a.coefficient.to_double();
      }
      if (const LadderAction a = apply_ladder(kQMinus, basis[i], z); a.target) {
        down[i] = static_cast<std::int32_t>(basis.require_index(*a.target));
        down_coefficient[i] = a.coefficient.to_double();
      }
    }
  }

  static const LadderTable& get(int z) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const LadderTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& entry = cache[z];
    if (!entry) entry = std::make_unique<const LadderTable>(z);
    return *entry;
  }
};

void require_tau(double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0, got " + std::to_string(tau));
}

void require_s(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument("pumping parameter s must lie in [0, 1], got " + std::to_string(s));
  }
}

// log(1 - x) for x in [0, 1], given den = 1 - x computed without cancellation.
double log_one_minus(double x, double den) { return x < 0.5 ? std::log1p(-x) : std::log(den); }

struct Triple {
  double raise;
  double diag;
  double lower;
};

// A, B, C of e^{A Q+} e^{B Q3} e^{C Q-}.
Triple plus_first(double s, double tau) {
  const double f = -std::expm1(-tau);
  const double den = (1.0 - s) + s * std::exp(-tau);  // 1 - s f
  if (!(den > 0.0)) {
    throw LimitDomainError("plus-first factorization is singular at s=" + std::to_string(s) +
                           ", tau=" + std::to_string(tau) + " (1 - s f = 0)");
  }
  return {s * f / den, -tau - 2.0 * log_one_minus(s * f, den), (1.0 - s) * f / den};
}

// D, E, F of e^{D Q-} e^{E Q3} e^{F Q+}, returned as {F, E, D} in raise/diag/lower order.
Triple minus_first(double s, double tau) {
  const double f = -std::expm1(-tau);
  const double den = s + (1.0 - s) * std::exp(-tau);  // 1 - (1-s) f
  if (!(den > 0.0)) {
    throw LimitDomainError("minus-first factorization is singular at s=" + std::to_string(s) +
                           ", tau=" + std::to_string(tau) + " (1 - (1-s) f = 0)");
  }
  return {s * f / den, tau + 2.0 * log_one_minus((1.0 - s) * f, den), (1.0 - s) * f / den};
}

std::vector<double> sorted_descending(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// Tridiagonal generator blocks have off-diagonal pairs with non-negative
// products; when every product is positive the block is similar to a
// symmetric matrix through a diagonal scaling.
struct BlockEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // columns
};

BlockEigen solve_block(const Eigen::MatrixXd& t, bool want_vectors) {
  const Eigen::Index n = t.rows();
  bool symmetrizable = true;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (!(t(k, k + 1) * t(k + 1, k) > 0.0)) symmetrizable = false;
  }
  BlockEigen out;
  if (symmetrizable) {
    Eigen::VectorXd scale(n);  // t = D^{-1} S D
    scale(0) = 1.0;
    Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) sym(k, k) = t(k, k);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      const double b = t(k, k + 1);
      const double c = t(k + 1, k);
      sym(k, k + 1) = sym(k + 1, k) = std::sqrt(b * c);
      scale(k + 1) = scale(k) * std::sqrt(b / c);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        sym, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
    out.values = es.eigenvalues();
    if (want_vectors) out.vectors = scale.cwiseInverse().asDiagonal() * es.eigenvectors();
    return out;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(t, want_vectors);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed");
  const auto& vals = es.eigenvalues();
  if (vals.imag().cwiseAbs().maxCoeff() > 1e-8) {
    throw NumericalError("generator block has complex eigenvalues");
  }
  out.values = vals.real();
  if (want_vectors) out.vectors = es.eigenvectors().real();
  return out;
}

// Block of the generator on (q, sigma3) with rows q3 = q, q-1, ..., -q.
Eigen::MatrixXd q_block_matrix(int z, int q2, double s, double ctilde) {
  const Eigen::Index n = q2 + 1;
  const double q = 0.5 * q2;
  const double half_z = 0.5 * z;
  const double dephasing = (1.0 - 2.0 * ctilde) * (half_z - q);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double q3 = q - static_cast<double>(k);
    t(k, k) = -half_z - (1.0 - 2.0 * s) * q3 + dephasing;
    if (k > 0) t(k - 1, k) = s * (q - q3);
    if (k + 1 < n) t(k + 1, k) = (1.0 - s) * (q + q3);
  }
  return t;
}

void normalize_eigenvector(Eigen::VectorXd& x, bool stationary) {
  if (stationary) {
    const double trace = x.sum();
    if (std::abs(trace) < 1e-300) throw NumericalError("stationary eigenvector has zero trace");
    x /= trace;
    return;
  }
  Eigen::Index arg = 0;
  x.cwiseAbs().maxCoeff(&arg);
  x /= std::abs(x(arg));
  const double cutoff = 1e-12;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    if (std::abs(x(k)) > cutoff) {
      if (x(k) < 0) x = -x;
      break;
    }
  }
}

}  // namespace

void ModelParams::validate() const {
  if (z < 1) throw std::invalid_argument("number of atoms must be >= 1, got " + std::to_string(z));
  require_s(s);
  if (!(ctilde >= 0.0) || !std::isfinite(ctilde)) {
    throw std::invalid_argument("ctilde must be finite and >= 0, got " + std::to_string(ctilde));
  }
}

BchCoefficients bch_coefficients(double s, double tau) {
  require_s(s);
  require_tau(tau);
  const Triple p = plus_first(s, tau);
  const Triple m = minus_first(s, tau);
  BchCoefficients k;
  k.a = p.raise;
  k.b = p.diag;
  k.c = p.lower;
  k.d = m.lower;
  k.e = m.diag;
  k.f_coeff = m.raise;
  k.f_tau = -std::expm1(-tau);
  return k;
}

Eigen::SparseMatrix<double> liouvillian_matrix(const ModelParams& p) {
  p.validate();
  const SymmetricBasis& basis = SymmetricBasis::get(p.z);
  const double half_z = 0.5 * p.z;
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(3 * basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const QuantumNumbers& qn = basis[j];
    const auto col = static_cast<int>(j);
    const double q3 = apply_ladder(kQThree, qn, p.z).coefficient.to_double();
    const double dephasing = (1.0 - 2.0 * p.ctilde) * (half_z - apply_qtilde(qn).to_double());
    triplets.emplace_back(col, col, -half_z - (1.0 - 2.0 * p.s) * q3 + dephasing);
    if (const LadderAction a = apply_ladder(kQMinus, qn, p.z); a.target && p.s != 1.0) {
      triplets.emplace_back(static_cast<int>(basis.require_index(*a.target)), col,
                            (1.0 - p.s) * a.coefficient.to_double());
    }
    if (const LadderAction a = apply_ladder(kQPlus, qn, p.z); a.target && p.s != 0.0) {
      triplets.emplace_back(static_cast<int>(basis.require_index(*a.target)), col,
                            p.s * a.coefficient.to_double());
    }
  }
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::SparseMatrix<double> l(n, n);
  l.setFromTriplets(triplets.begin(), triplets.end());
  return l;
}

SymmetricVector exp_ladder(Part direction, double coefficient, const SymmetricVector& v) {
  if (direction == Part::Three) throw std::invalid_argument("exp_ladder needs Q+ or Q-");
  SymmetricVector out = v;
  if (coefficient == 0.0) return out;
  const LadderTable& table = LadderTable::get(v.z());
  const bool up = direction == Part::Plus;
  const auto& next = up ? table.up : table.down;
  const auto& weight = up ? table.up_coefficient : table.down_coefficient;
  const Eigen::VectorXcd& in = v.coeffs();
  Eigen::VectorXcd& acc = out.coeffs();
  for (Eigen::Index i = 0; i < in.size(); ++i) {
    if (in[i] == 0.0) continue;
    std::complex<double> term = in[i];
    auto j = static_cast<std::int32_t>(i);
    // Q^k / k! along the ladder; terminates after at most 2q steps.
    for (int k = 1; next[j] >= 0; ++k) {
      term *= coefficient * weight[j] / static_cast<double>(k);
      j = next[j];
      acc[j] += term;
    }
  }
  return out;
}

SymmetricVector propagate_bch(const SymmetricVector& v, const ModelParams& p, double tau,
                              BchOrdering ordering) {
  p.validate();
  require_tau(tau);
  if (v.z() != p.z) throw std::invalid_argument("state and parameters disagree on Z");
  if (ordering == BchOrdering::kAutomatic) {
    ordering = p.s <= 0.5 ? BchOrdering::kPlusFirst : BchOrdering::kMinusFirst;
  }
  const LadderTable& table = LadderTable::get(p.z);
  const double half_z = 0.5 * p.z;
  const bool plus = ordering == BchOrdering::kPlusFirst;
  const Triple k = plus ? plus_first(p.s, tau) : minus_first(p.s, tau);

  SymmetricVector w = plus ? exp_ladder(Part::Minus, k.lower, v) : exp_ladder(Part::Plus, k.raise, v);
  for (Eigen::Index i = 0; i < w.coeffs().size(); ++i) {
    w.coeffs()[i] *= std::exp(-half_z * tau + k.diag * table.q3[static_cast<std::size_t>(i)]);
  }
  return plus ? exp_ladder(Part::Plus, k.raise, w) : exp_ladder(Part::Minus, k.lower, w);
}

SymmetricVector apply_dephasing_factor(const SymmetricVector& v, double ctilde, double tau) {
  require_tau(tau);
  SymmetricVector out = v;
  const double rate = 1.0 - 2.0 * ctilde;
  if (rate == 0.0) return out;
  const LadderTable& table = LadderTable::get(v.z());
  const double half_z = 0.5 * v.z();
  for (Eigen::Index i = 0; i < out.coeffs().size(); ++i) {
    out.coeffs()[i] *= std::exp(rate * (half_z - table.q[static_cast<std::size_t>(i)]) * tau);
  }
  return out;
}

SymmetricVector propagate(const SymmetricVector& v, const ModelParams& p, double tau) {
  return apply_dephasing_factor(propagate_bch(v, p, tau), p.ctilde, tau);
}

SymmetricVector propagate_decay_closed_form(const QuantumNumbers& qn, int z, double tau) {
  require_tau(tau);
  const SymmetricConfig config = config_from_qn(z, qn);
  const int top = config.alpha;  // q + q3
  const double f = -std::expm1(-tau);
  const double half_z = 0.5 * z;
  const double q3 = qn.q3.to_double();
  SymmetricVector out(z);
  double binom = 1.0;
  for (int k = 0; k <= top; ++k) {
    if (k > 0) binom = binom * static_cast<double>(top - k + 1) / static_cast<double>(k);
    const double weight = binom * std::pow(f, k) * std::exp(-tau * (half_z + q3 - k));
    out.set({qn.q, qn.q3 - HalfInteger(k), qn.sigma3}, weight);
  }
  return out;
}

Eigen::MatrixXd dicke_block_matrix(int z, double s) {
  if (z < 1) throw std::invalid_argument("number of atoms must be >= 1");
  require_s(s);
  return q_block_matrix(z, z, s, 0.5);
}

SpectrumResult spectrum(const ModelParams& p) {
  p.validate();
  const int z = p.z;
  const BlockEigen be = solve_block(dicke_block_matrix(z, p.s), true);
  std::vector<Eigen::Index> order(static_cast<std::size_t>(be.values.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index a, Eigen::Index b) { return be.values(a) > be.values(b); });

  const SymmetricBasis& basis = SymmetricBasis::get(z);
  const auto dicke = basis.trace_carrying();
  SpectrumResult out{{}, {}, SymmetricVector(z)};
  bool found_stationary = false;
  for (Eigen::Index col : order) {
    const double lambda = be.values(col);
    const bool stationary = std::abs(lambda) < 1e-8;
    Eigen::VectorXd x = be.vectors.col(col);
    normalize_eigenvector(x, stationary);
    SymmetricVector vec(z);
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      vec.coeffs()[static_cast<Eigen::Index>(dicke[static_cast<std::size_t>(k)])] = x(k);
    }
    if (stationary) {
      if (found_stationary) throw NumericalError("degenerate stationary eigenvalue");
      found_stationary = true;
      out.stationary = vec;
    }
    out.eigenvalues.push_back(lambda);
    out.eigenvectors.push_back(std::move(vec));
  }
  if (!found_stationary) throw NumericalError("no stationary eigenvalue within 1e-8 of zero");
  return out;
}

std::vector<double> full_spectrum(const ModelParams& p) {
  p.validate();
  std::vector<double> out;
  out.reserve(symmetric_dimension(p.z));
  for (int q2 = p.z; q2 >= 0; --q2) {
    const BlockEigen be = solve_block(q_block_matrix(p.z, q2, p.s, p.ctilde), false);
    const int copies = p.z - q2 + 1;  // sigma3 = -sigma..sigma
    for (int c = 0; c < copies; ++c) {
      out.insert(out.end(), be.values.begin(), be.values.end());
    }
  }
  return sorted_descending(std::move(out));
}

Eigen::MatrixXd dicke_raising(int z) {
  if (z < 1) throw std::invalid_argument("number of atoms must be >= 1");
  const Eigen::Index n = z + 1;
  Eigen::MatrixXd sp = Eigen::MatrixXd::Zero(n, n);
  // S+ |S, M> = sqrt((S - M)(S + M + 1)) |S, M + 1>, and M = Z/2 - k.
  for (Eigen::Index k = 1; k < n; ++k) {
    sp(k - 1, k) = std::sqrt(static_cast<double>(k * (z - k + 1)));
  }
  return sp;
}

Eigen::MatrixXcd dicke_projector(int z, HalfInteger m, HalfInteger m_prime) {
  if (z < 1) throw std::invalid_argument("number of atoms must be >= 1");
  const auto index = [z](HalfInteger label) {
    const int twice_k = z - label.twice();  // 2 (Z/2 - M)
    if (std::abs(label.twice()) > z || twice_k % 2 != 0) {
      throw std::invalid_argument("Dicke label " + label.to_string() + " invalid for Z=" +
                                  std::to_string(z));
    }
    return static_cast<Eigen::Index>(twice_k / 2);
  };
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(z + 1, z + 1);
  p(index(m), index(m_prime)) = 1.0;
  return p;
}

Eigen::MatrixXcd truncated_dicke_apply(int z, double s, const Eigen::MatrixXcd& p) {
  require_s(s);
  const Eigen::MatrixXd sp = dicke_raising(z);
  const Eigen::MatrixXd sm = sp.transpose();
  const Eigen::MatrixXd spsm = sp * sm;
  const Eigen::MatrixXd smsp = sm * sp;
  return -0.5 * (1.0 - s) * (spsm * p + p * spsm - 2.0 * sm * p * sp) -
         0.5 * s * (smsp * p + p * smsp - 2.0 * sp * p * sm);
}

std::vector<Eigen::MatrixXcd> truncated_dicke_trajectory(int z, double s, const Eigen::MatrixXcd& p0,
                                                         std::span<const double> taus) {
  require_s(s);
  if (z < 1) throw std::invalid_argument("number of atoms must be >= 1");
  const Eigen::Index n = z + 1;
  if (p0.rows() != n || p0.cols() != n) {
    throw std::invalid_argument("initial Dicke-sector matrix must be (Z+1) x (Z+1)");
  }
  for (std::size_t i = 0; i < taus.size(); ++i) {
    require_tau(taus[i]);
    if (i > 0 && taus[i] < taus[i - 1]) throw std::invalid_argument("taus must be ascending");
  }

  using State = std::vector<double>;
  const auto nn = static_cast<std::size_t>(n * n);
  const auto pack = [nn](const Eigen::MatrixXcd& m, State& x) {
    x.resize(2 * nn);
    Eigen::Map<Eigen::MatrixXd>(x.data(), m.rows(), m.cols()) = m.real();
    Eigen::Map<Eigen::MatrixXd>(x.data() + nn, m.rows(), m.cols()) = m.imag();
  };
  const auto unpack = [n, nn](const State& x) {
    Eigen::MatrixXcd m(n, n);
    m.real() = Eigen::Map<const Eigen::MatrixXd>(x.data(), n, n);
    m.imag() = Eigen::Map<const Eigen::MatrixXd>(x.data() + nn, n, n);
    return m;
  };

  const Eigen::MatrixXd sp = dicke_raising(z);
  const Eigen::MatrixXd sm = sp.transpose();
  const Eigen::MatrixXd spsm = sp * sm;
  const Eigen::MatrixXd smsp = sm * sp;
  // The generator is real, so real and imaginary parts evolve independently.
  const auto rhs_real = [&](const Eigen::MatrixXd& p) -> Eigen::MatrixXd {
    return -0.5 * (1.0 - s) * (spsm * p + p * spsm - 2.0 * sm * p * sp) -
           0.5 * s * (smsp * p + p * smsp - 2.0 * sp * p * sm);
  };
  const auto system = [&](const State& x, State& dxdt, double /*t*/) {
    dxdt.resize(x.size());
    Eigen::Map<Eigen::MatrixXd>(dxdt.data(), n, n) =
        rhs_real(Eigen::Map<const Eigen::MatrixXd>(x.data(), n, n));
    Eigen::Map<Eigen::MatrixXd>(dxdt.data() + nn, n, n) =
        rhs_real(Eigen::Map<const Eigen::MatrixXd>(x.data() + nn, n, n));
  };

  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-13, 1e-10);
  State x;
  pack(p0, x);
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(taus.size());
  double t = 0.0;
  try {
    for (double target : taus) {
      if (target > t) {
        odeint::integrate_adaptive(stepper, system, x, t, target, std::min(1e-3, target - t));
        t = target;
      }
      out.push_back(unpack(x));
    }
  } catch (const std::runtime_error& e) {
    throw NumericalError(std::string("truncated Dicke integration failed: ") + e.what());
  }
  return out;
}

Eigen::MatrixXcd truncated_dicke_propagate(int z, double s, const Eigen::MatrixXcd& p0, double tau) {
  const double taus[] = {tau};
  return truncated_dicke_trajectory(z, s, p0, taus).front();
}

double dicke_sector_inversion(int z, const Eigen::MatrixXcd& p) {
  double acc = 0.0;
  for (Eigen::Index k = 0; k < p.rows(); ++k) acc += (0.5 * z - static_cast<double>(k)) * p(k, k).real();
  return acc;
}

}  // namespace dicke4
