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

#include "dicke4/dense_oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "dicke4/errors.hpp"

namespace dicke4 {

namespace {

// Bit 0 at a site is |1>, bit 1 is |0>.
constexpr bool excited(std::size_t index, std::size_t mask) { return (index & mask) == 0; }

// Calls emit(r', c', w) for every term of (L P)(r, c) = sum w P(r', c').
template <typename Emit>
void for_each_term(const ModelParams& p, std::size_t r, std::size_t c, Emit&& emit) {
  const double damping = 0.5 * (1.0 - p.s);
  const double pumping = 0.5 * p.s;
  const double dephasing = 0.25 * (2.0 * p.ctilde - 1.0);
  double diagonal = 0.0;
  for (int site = 0; site < p.z; ++site) {
    const std::size_t mask = std::size_t{1} << (p.z - 1 - site);
    const bool re = excited(r, mask);
    const bool ce = excited(c, mask);
    // s+ s- projects on |1>, s- s+ on |0>.
    diagonal -= damping * (static_cast<double>(re) + static_cast<double>(ce));
    diagonal -= pumping * (static_cast<double>(!re) + static_cast<double>(!ce));
    if (!re && !ce && damping != 0.0) emit(r ^ mask, c ^ mask, 2.0 * damping);
    if (re && ce && pumping != 0.0) emit(r ^ mask, c ^ mask, 2.0 * pumping);
    // P - s3 P s3 vanishes when both signs agree.
    if (re != ce) diagonal -= 2.0 * dephasing;
  }
  if (diagonal != 0.0) emit(r, c, diagonal);
}

void require_dense(const ModelParams& p, const DenseDensityMatrix& rho, const char* what) {
  p.validate();
  require_within_oracle_limit(p.z, what);
  const auto n = static_cast<Eigen::Index>(std::size_t{1} << p.z);
  if (rho.z != p.z || rho.entries.rows() != n || rho.entries.cols() != n) {
    throw std::invalid_argument(std::string(what) + ": density matrix does not match Z=" +
                                std::to_string(p.z));
  }
}

void require_tau(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw std::invalid_argument("tau must be finite and >= 0");
}

// Columns hold the real and imaginary parts of vec(rho).
Eigen::MatrixXd split(const DenseDensityMatrix& rho) {
  const Eigen::Index nn = rho.entries.size();
  Eigen::MatrixXd x(nn, 2);
  x.col(0) = Eigen::Map<const Eigen::VectorXd>(rho.entries.real().eval().data(), nn);
  x.col(1) = Eigen::Map<const Eigen::VectorXd>(rho.entries.imag().eval().data(), nn);
  return x;
}

DenseDensityMatrix join(int z, const Eigen::MatrixXd& x) {
  const auto n = static_cast<Eigen::Index>(std::size_t{1} << z);
  Eigen::MatrixXcd m(n, n);
  m.real() = Eigen::Map<const Eigen::MatrixXd>(x.col(0).data(), n, n);
  m.imag() = Eigen::Map<const Eigen::MatrixXd>(x.col(1).data(), n, n);
  return DenseDensityMatrix(z, std::move(m));
}

// exp(tau L) x by Taylor series on substeps with |h L|_1 <= 1.
Eigen::MatrixXd taylor_action(const Eigen::SparseMatrix<double>& l, double norm1, Eigen::MatrixXd x,
                              double tau) {
  if (tau == 0.0) return x;
  const int substeps = std::max(1, static_cast<int>(std::ceil(tau * norm1)));
  const double h = tau / substeps;
  for (int step = 0; step < substeps; ++step) {
    Eigen::MatrixXd term = x;
    Eigen::MatrixXd acc = x;
    const double scale = x.cwiseAbs().maxCoeff();
    for (int k = 1; k <= 80; ++k) {
      term = (h / k) * (l * term);
      acc += term;
      if (term.cwiseAbs().maxCoeff() <= 1e-17 * scale) break;
    }
    x = std::move(acc);
  }
  return x;
}

double column_norm1(const Eigen::SparseMatrix<double>& l) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < l.outerSize(); ++j) {
    double sum = 0.0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(l, j); it; ++it) sum += std::abs(it.value());
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace

DenseDensityMatrix lindblad_apply(const ModelParams& p, const DenseDensityMatrix& rho) {
  require_dense(p, rho, "lindblad_apply");
  const std::size_t n = rho.dimension();
  DenseDensityMatrix out(p.z);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      std::complex<double> acc = 0.0;
      for_each_term(p, r, c, [&](std::size_t rr, std::size_t cc, double w) {
        acc += w * rho.entries(static_cast<Eigen::Index>(rr), static_cast<Eigen::Index>(cc));
      });
      out.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return out;
}

Eigen::SparseMatrix<double> dense_liouvillian(const ModelParams& p) {
  p.validate();
  require_within_oracle_limit(p.z, "dense_liouvillian");
  const std::size_t n = std::size_t{1} << p.z;
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(n * n * static_cast<std::size_t>(p.z + 1));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      const auto row = static_cast<Eigen::Index>(r + n * c);
      for_each_term(p, r, c, [&](std::size_t rr, std::size_t cc, double w) {
        triplets.emplace_back(row, static_cast<Eigen::Index>(rr + n * cc), w);
      });
    }
  }
  const auto nn = static_cast<Eigen::Index>(n * n);
  Eigen::SparseMatrix<double> l(nn, nn);
  l.setFromTriplets(triplets.begin(), triplets.end());
  return l;
}

std::vector<DenseDensityMatrix> dense_trajectory(const ModelParams& p, const DenseDensityMatrix& rho0,
                                                 std::span<const double> taus) {
  require_dense(p, rho0, "dense_propagate");
  for (std::size_t i = 0; i < taus.size(); ++i) {
    require_tau(taus[i]);
    if (i > 0 && taus[i] < taus[i - 1]) throw std::invalid_argument("taus must be ascending");
  }
  std::vector<DenseDensityMatrix> out;
  out.reserve(taus.size());
  const Eigen::SparseMatrix<double> l = dense_liouvillian(p);
  Eigen::MatrixXd x = split(rho0);
  double t = 0.0;

  if (p.z <= kDenseExponentialLimit) {
    const double norm1 = column_norm1(l);
    for (double target : taus) {
      x = taylor_action(l, norm1, std::move(x), target - t);
      t = target;
      out.push_back(join(p.z, x));
    }
    return out;
  }

  using State = std::vector<double>;
  namespace odeint = boost::numeric::odeint;
  const auto nn = x.rows();
  State y(x.data(), x.data() + x.size());
  const auto system = [&](const State& in, State& dydt, double /*t*/) {
    dydt.resize(in.size());
    Eigen::Map<Eigen::MatrixXd>(dydt.data(), nn, 2) = l * Eigen::Map<const Eigen::MatrixXd>(in.data(), nn, 2);
  };
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-13, 1e-10);
  try {
    for (double target : taus) {
      if (target > t) {
        odeint::integrate_adaptive(stepper, system, y, t, target, std::min(1e-3, target - t));
        t = target;
      }
      out.push_back(join(p.z, Eigen::Map<const Eigen::MatrixXd>(y.data(), nn, 2)));
    }
  } catch (const std::runtime_error& e) {
    throw NumericalError(std::string("dense integration failed: ") + e.what());
  }
  return out;
}

DenseDensityMatrix dense_propagate(const ModelParams& p, const DenseDensityMatrix& rho0, double tau) {
  const double taus[] = {tau};
  return std::move(dense_trajectory(p, rho0, taus).front());
}

Eigen::VectorXcd dicke_state_dense(int z, HalfInteger s3) {
  if (z < 1) throw std::invalid_argument("number of atoms must be >= 1");
  require_within_oracle_limit(z, "dicke_state_dense");
  const int twice_excited = z + s3.twice();  // 2 (Z/2 + s3)
  if (std::abs(s3.twice()) > z || twice_excited % 2 != 0) {
    throw std::invalid_argument("S3 = " + s3.to_string() + " is not a Dicke label for Z=" + std::to_string(z));
  }
  const int ground = z - twice_excited / 2;  // number of |0> sites = popcount
  const std::size_t n = std::size_t{1} << z;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::popcount(i) == ground) {
      out(static_cast<Eigen::Index>(i)) = 1.0;
      ++count;
    }
  }
  return out / std::sqrt(static_cast<double>(count));
}

Eigen::VectorXd collective_s3_diagonal(int z) {
  const std::size_t n = std::size_t{1} << z;
  Eigen::VectorXd out(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    out(static_cast<Eigen::Index>(i)) = 0.5 * z - std::popcount(i);
  }
  return out;
}

}  // namespace dicke4
