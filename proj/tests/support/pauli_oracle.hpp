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

// Reference constructions for tests, built from explicit 2x2 matrices and
// Kronecker products rather than the library's index arithmetic.

#ifndef DICKE4_TESTS_SUPPORT_PAULI_ORACLE_HPP_
#define DICKE4_TESTS_SUPPORT_PAULI_ORACLE_HPP_

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "dicke4/su4_algebra.hpp"
#include "dicke4/symmetric_sector.hpp"

namespace dicke4::testing {

using Mat = Eigen::MatrixXcd;

// Single-site basis (|1>, |0>).
inline Mat sigma_plus() {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}
inline Mat sigma_minus() { return sigma_plus().transpose(); }
inline Mat sigma_three() {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}
inline Mat identity2() { return Mat::Identity(2, 2); }

inline Mat factor_matrix(Factor f) {
  Mat m = Mat::Zero(2, 2);
  switch (f) {
    case Factor::U:
      m(0, 0) = 1.0;
      break;
    case Factor::D:
      m(1, 1) = 1.0;
      break;
    case Factor::S:
      m(0, 1) = 1.0;
      break;
    case Factor::C:
      m(1, 0) = 1.0;
      break;
  }
  return m;
}

inline Mat kron_all(const std::vector<Mat>& parts) {
  Mat out = Mat::Identity(1, 1);
  for (const Mat& p : parts) {
    Mat next = Eigen::kroneckerProduct(out, p).eval();
    out = std::move(next);
  }
  return out;
}

inline Mat word_matrix(const Word& w) {
  std::vector<Mat> parts;
  for (Factor f : w) parts.push_back(factor_matrix(f));
  return kron_all(parts);
}

inline Mat sum_matrix(int z, const OperatorSum& t) {
  const auto n = static_cast<Eigen::Index>(1) << z;
  Mat out = Mat::Zero(n, n);
  for (const auto& [w, weight] : t.terms()) {
    out += boost::rational_cast<double>(weight) * word_matrix(w);
  }
  return out;
}

/// op acting on site i (0-based), identity elsewhere.
inline Mat on_site(int z, int site, const Mat& op) {
  std::vector<Mat> parts(static_cast<std::size_t>(z), identity2());
  parts[static_cast<std::size_t>(site)] = op;
  return kron_all(parts);
}

/// The 18 superoperators from their sandwich definitions with Pauli matrices.
inline Mat superoperator_matrix_action(Superoperator x, const Mat& p, int z) {
  const Mat sp = sigma_plus();
  const Mat sm = sigma_minus();
  const Mat s3 = sigma_three();
  const Mat up = 0.5 * (identity2() + s3);
  const Mat down = 0.5 * (identity2() - s3);
  Mat out = Mat::Zero(p.rows(), p.cols());
  const bool plus = x.part == Part::Plus;
  const Mat& raise = plus ? sp : sm;  // s+- for X+-
  const Mat& lower = plus ? sm : sp;  // s-+ for X+-
  for (int i = 0; i < z; ++i) {
    const auto site = [&](const Mat& m) { return on_site(z, i, m); };
    if (x.part == Part::Three) {
      switch (x.family) {
        case Family::Q:
          out += 0.25 * (site(s3) * p + p * site(s3));
          break;
        case Family::Sigma:
          out += 0.25 * (site(s3) * p - p * site(s3));
          break;
        case Family::M:
          out += 0.5 * site(s3) * p * site(up);
          break;
        case Family::N:
          out += 0.5 * site(s3) * p * site(down);
          break;
        case Family::U:
          out += 0.5 * site(up) * p * site(s3);
          break;
        case Family::V:
          out += 0.5 * site(down) * p * site(s3);
          break;
      }
      continue;
    }
    switch (x.family) {
      case Family::Q:
        out += site(raise) * p * site(lower);
        break;
      case Family::Sigma:
        out += site(raise) * p * site(raise);
        break;
      case Family::M:
        out += site(raise) * p * site(up);
        break;
      case Family::N:
        out += site(raise) * p * site(down);
        break;
      case Family::U:
        out += site(up) * p * site(lower);
        break;
      case Family::V:
        out += site(down) * p * site(lower);
        break;
    }
  }
  return out;
}

/// Right-hand side of the master equation (B = 1) from Pauli sandwiches.
inline Mat lindblad_matrix_action(int z, double s, double ctilde, const Mat& p) {
  Mat out = Mat::Zero(p.rows(), p.cols());
  for (int i = 0; i < z; ++i) {
    const Mat sp = on_site(z, i, sigma_plus());
    const Mat sm = on_site(z, i, sigma_minus());
    const Mat s3 = on_site(z, i, sigma_three());
    out -= 0.5 * (1.0 - s) * (sp * sm * p + p * sp * sm - 2.0 * sm * p * sp);
    out -= 0.5 * s * (sm * sp * p + p * sm * sp - 2.0 * sp * p * sm);
    out -= 0.25 * (2.0 * ctilde - 1.0) * (p - s3 * p * s3);
  }
  return out;
}

/// 4^Z x 4^Z matrix of the master equation on column-major vec(P).
inline Eigen::MatrixXd lindblad_superoperator_matrix(int z, double s, double ctilde) {
  const auto n = static_cast<Eigen::Index>(1) << z;
  Eigen::MatrixXd l(n * n, n * n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      Mat unit = Mat::Zero(n, n);
      unit(r, c) = 1.0;
      const Mat image = lindblad_matrix_action(z, s, ctilde, unit);
      l.col(r + n * c) = Eigen::Map<const Eigen::VectorXcd>(image.data(), n * n).real();
    }
  }
  return l;
}

/// Average over distinct arrangements, enumerated independently of the library.
inline Mat symmetrized_matrix(const SymmetricConfig& c) {
  Word w;
  w.insert(w.end(), static_cast<std::size_t>(c.alpha), Factor::U);
  w.insert(w.end(), static_cast<std::size_t>(c.beta), Factor::D);
  w.insert(w.end(), static_cast<std::size_t>(c.gamma), Factor::S);
  w.insert(w.end(), static_cast<std::size_t>(c.delta), Factor::C);
  std::sort(w.begin(), w.end());
  const auto n = static_cast<Eigen::Index>(1) << c.z();
  Mat acc = Mat::Zero(n, n);
  int count = 0;
  do {
    acc += word_matrix(w);
    ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return acc / static_cast<double>(count);
}

inline Mat basis_matrix(int z, const QuantumNumbers& qn) {
  const HalfInteger sigma = HalfInteger::half(z) - qn.q;
  const SymmetricConfig c{(qn.q + qn.q3).twice() / 2, (qn.q - qn.q3).twice() / 2,
                          (sigma + qn.sigma3).twice() / 2, (sigma - qn.sigma3).twice() / 2};
  return symmetrized_matrix(c);
}

inline Mat vector_matrix(const SymmetricVector& v) {
  const auto n = static_cast<Eigen::Index>(1) << v.z();
  Mat out = Mat::Zero(n, n);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::complex<double> c = v.coeffs()[static_cast<Eigen::Index>(i)];
    if (c != 0.0) out += c * basis_matrix(v.z(), v.basis()[i]);
  }
  return out;
}

inline Word random_word(int z, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  Word w(static_cast<std::size_t>(z));
  for (Factor& f : w) f = kAllFactors[static_cast<std::size_t>(pick(rng))];
  return w;
}

inline SymmetricVector random_symmetric_vector(int z, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymmetricVector v(z);
  for (Eigen::Index i = 0; i < v.coeffs().size(); ++i) v.coeffs()[i] = u(rng);
  return v;
}

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace dicke4::testing

#endif  // DICKE4_TESTS_SUPPORT_PAULI_ORACLE_HPP_
