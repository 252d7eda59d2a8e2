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

#include "dicke4/symmetric_sector.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "dicke4/errors.hpp"

namespace dicke4 {

namespace {

void require_z(int z) {
  if (z < 1) throw std::invalid_argument("number of atoms must be >= 1, got " + std::to_string(z));
}

std::uint64_t checked_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

// Which factor a raising/lowering superoperator consumes and produces.
struct Move {
  Factor from;
  Factor to;
};

Move ladder_move(Superoperator x) {
  const bool plus = x.part == Part::Plus;
  switch (x.family) {
    case Family::Q: return plus ? Move{Factor::D, Factor::U} : Move{Factor::U, Factor::D};
    case Family::Sigma: return plus ? Move{Factor::C, Factor::S} : Move{Factor::S, Factor::C};
    case Family::M: return plus ? Move{Factor::C, Factor::U} : Move{Factor::U, Factor::C};
    case Family::N: return plus ? Move{Factor::D, Factor::S} : Move{Factor::S, Factor::D};
    case Family::U: return plus ? Move{Factor::S, Factor::U} : Move{Factor::U, Factor::S};
    case Family::V: return plus ? Move{Factor::D, Factor::C} : Move{Factor::C, Factor::D};
  }
  throw std::logic_error("unreachable");
}

int& count_of(SymmetricConfig& c, Factor f) {
  switch (f) {
    case Factor::U: return c.alpha;
    case Factor::D: return c.beta;
    case Factor::S: return c.gamma;
    case Factor::C: return c.delta;
  }
  throw std::logic_error("unreachable");
}

// (x, x3) for a family.
std::pair<HalfInteger, HalfInteger> family_labels(Family f, const QuantumNumbers& qn,
                                                  const DerivedLabels& d) {
  switch (f) {
    case Family::Q: return {qn.q, qn.q3};
    case Family::Sigma: return {d.sigma, qn.sigma3};
    case Family::M: return {d.m, d.m3};
    case Family::N: return {d.n, d.n3};
    case Family::U: return {d.u, d.u3};
    case Family::V: return {d.v, d.v3};
  }
  throw std::logic_error("unreachable");
}

Eigen::Index matrix_unit_ket(const Word& w) {
  Eigen::Index ket = 0;
  for (Factor f : w) ket = (ket << 1) | ((f == Factor::D || f == Factor::C) ? 1 : 0);
  return ket;
}

Eigen::Index matrix_unit_bra(const Word& w) {
  Eigen::Index bra = 0;
  for (Factor f : w) bra = (bra << 1) | ((f == Factor::D || f == Factor::S) ? 1 : 0);
  return bra;
}

}  // namespace

std::string QuantumNumbers::to_string() const {
  return "(" + q.to_string() + "," + q3.to_string() + "," + sigma3.to_string() + ")";
}

DerivedLabels derived_labels(int z, const QuantumNumbers& qn) {
  const SymmetricConfig c = config_from_qn(z, qn);
  const auto h = [](int twice) { return HalfInteger::from_twice(twice); };
  DerivedLabels d;
  d.sigma = h(c.gamma + c.delta);
  d.m = h(c.alpha + c.delta);
  d.m3 = h(c.alpha - c.delta);
  d.n = h(c.beta + c.gamma);
  d.n3 = h(c.gamma - c.beta);
  d.u = h(c.alpha + c.gamma);
  d.u3 = h(c.alpha - c.gamma);
  d.v = h(c.beta + c.delta);
  d.v3 = h(c.delta - c.beta);
  return d;
}

QuantumNumbers qn_from_config(const SymmetricConfig& c) {
  if (c.alpha < 0 || c.beta < 0 || c.gamma < 0 || c.delta < 0) {
    throw std::invalid_argument("configuration counts must be non-negative");
  }
  require_z(c.z());
  return {HalfInteger::from_twice(c.alpha + c.beta), HalfInteger::from_twice(c.alpha - c.beta),
          HalfInteger::from_twice(c.gamma - c.delta)};
}

bool is_valid(int z, const QuantumNumbers& qn) {
  if (z < 1) return false;
  const int q2 = qn.q.twice();
  const int q32 = qn.q3.twice();
  const int s32 = qn.sigma3.twice();
  const int sigma2 = z - q2;
  if (q2 < 0 || q2 > z) return false;
  if (std::abs(q32) > q2 || (q2 - q32) % 2 != 0) return false;
  if (std::abs(s32) > sigma2 || (sigma2 - s32) % 2 != 0) return false;
  return true;
}

SymmetricConfig config_from_qn(int z, const QuantumNumbers& qn) {
  require_z(z);
  if (!is_valid(z, qn)) {
    throw std::invalid_argument("quantum numbers " + qn.to_string() + " are not valid for Z=" +
                                std::to_string(z));
  }
  const int q2 = qn.q.twice();
  const int sigma2 = z - q2;
  return {(q2 + qn.q3.twice()) / 2, (q2 - qn.q3.twice()) / 2, (sigma2 + qn.sigma3.twice()) / 2,
          (sigma2 - qn.sigma3.twice()) / 2};
}

std::uint64_t multiplicity(const SymmetricConfig& c) {
  if (c.alpha < 0 || c.beta < 0 || c.gamma < 0 || c.delta < 0) {
    throw std::invalid_argument("configuration counts must be non-negative");
  }
  const int z = c.z();
  const std::uint64_t a = checked_binomial(z, c.alpha);
  const std::uint64_t b = checked_binomial(z - c.alpha, c.beta);
  const std::uint64_t g = checked_binomial(c.gamma + c.delta, c.gamma);
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out) || __builtin_mul_overflow(out, g, &out)) {
    throw std::overflow_error("multiplicity overflow");
  }
  return out;
}

std::vector<QuantumNumbers> enumerate_basis(int z) {
  require_z(z);
  std::vector<QuantumNumbers> out;
  out.reserve(symmetric_dimension(z));
  for (int q2 = z; q2 >= 0; --q2) {
    const int sigma2 = z - q2;
    for (int q32 = q2; q32 >= -q2; q32 -= 2) {
      for (int s32 = sigma2; s32 >= -sigma2; s32 -= 2) {
        out.push_back({HalfInteger::from_twice(q2), HalfInteger::from_twice(q32),
                       HalfInteger::from_twice(s32)});
      }
    }
  }
  return out;
}

SymmetricBasis::SymmetricBasis(int z) : z_(z), states_(enumerate_basis(z)) {
  const auto width = static_cast<std::size_t>(2 * z + 1);
  lookup_.assign(static_cast<std::size_t>(z + 1) * width * width, -1);
  for (std::size_t i = 0; i < states_.size(); ++i) {
    lookup_[slot(states_[i])] = static_cast<std::int32_t>(i);
    if (is_trace_carrying(z, states_[i])) trace_carrying_.push_back(i);
  }
}

const SymmetricBasis& SymmetricBasis::get(int z) {
  require_z(z);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const SymmetricBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& entry = cache[z];
  if (!entry) entry = std::make_unique<const SymmetricBasis>(z);
  return *entry;
}

std::size_t SymmetricBasis::slot(const QuantumNumbers& qn) const {
  const auto width = static_cast<std::size_t>(2 * z_ + 1);
  return (static_cast<std::size_t>(qn.q.twice()) * width +
          static_cast<std::size_t>(qn.q3.twice() + z_)) *
             width +
         static_cast<std::size_t>(qn.sigma3.twice() + z_);
}

std::optional<std::size_t> SymmetricBasis::index_of(const QuantumNumbers& qn) const {
  if (!is_valid(z_, qn)) return std::nullopt;
  const auto idx = lookup_[slot(qn)];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::size_t SymmetricBasis::require_index(const QuantumNumbers& qn) const {
  if (auto idx = index_of(qn)) return *idx;
  throw std::invalid_argument("quantum numbers " + qn.to_string() + " are not in the Z=" +
                              std::to_string(z_) + " basis");
}

SymmetricVector::SymmetricVector(int z)
    : z_(z),
      basis_(&SymmetricBasis::get(z)),
      coeffs_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_->size()))) {}

SymmetricVector::SymmetricVector(int z, Eigen::VectorXcd coeffs)
    : z_(z), basis_(&SymmetricBasis::get(z)), coeffs_(std::move(coeffs)) {
  if (static_cast<std::size_t>(coeffs_.size()) != basis_->size()) {
    throw std::invalid_argument("coefficient vector length does not match the Z=" +
                                std::to_string(z) + " basis");
  }
}

SymmetricVector SymmetricVector::basis_state(int z, const QuantumNumbers& qn,
                                             std::complex<double> weight) {
  SymmetricVector v(z);
  v.set(qn, weight);
  return v;
}

std::complex<double> SymmetricVector::coefficient(const QuantumNumbers& qn) const {
  return coeffs_[static_cast<Eigen::Index>(basis_->require_index(qn))];
}

void SymmetricVector::set(const QuantumNumbers& qn, std::complex<double> value) {
  coeffs_[static_cast<Eigen::Index>(basis_->require_index(qn))] = value;
}

std::complex<double> SymmetricVector::trace() const {
  std::complex<double> t = 0.0;
  for (std::size_t i : basis_->trace_carrying()) t += coeffs_[static_cast<Eigen::Index>(i)];
  return t;
}

LadderAction apply_ladder(Superoperator x, const QuantumNumbers& qn, int z) {
  const DerivedLabels d = derived_labels(z, qn);
  const auto [label, label3] = family_labels(x.family, qn, d);
  if (x.part == Part::Three) {
    if (label3.twice() == 0) return {label3, std::nullopt};
    return {label3, qn};
  }
  const HalfInteger coefficient = x.part == Part::Plus ? label - label3 : label + label3;
  if (coefficient.twice() == 0) return {coefficient, std::nullopt};
  SymmetricConfig c = config_from_qn(z, qn);
  const Move mv = ladder_move(x);
  --count_of(c, mv.from);
  ++count_of(c, mv.to);
  return {coefficient, qn_from_config(c)};
}

HalfInteger qtilde_via_q33(int z, const QuantumNumbers& qn) {
  const DerivedLabels d = derived_labels(z, qn);
  // 4 Q~ = Z + 4 m3 - 2 (q3 + sigma3); in doubled units 8 Q~ = 2Z + 4 (2 m3) - 2 (2 q3 + 2 sigma3).
  const int eight_qtilde = 2 * z + 4 * d.m3.twice() - 2 * (qn.q3.twice() + qn.sigma3.twice());
  if (eight_qtilde % 4 != 0) throw std::logic_error("Q~ eigenvalue is not a half-integer");
  return HalfInteger::from_twice(eight_qtilde / 4);
}

void for_each_arrangement(const SymmetricConfig& c, const std::function<void(const Word&)>& visit) {
  Word w;
  w.reserve(static_cast<std::size_t>(c.z()));
  w.insert(w.end(), static_cast<std::size_t>(c.alpha), Factor::U);
  w.insert(w.end(), static_cast<std::size_t>(c.beta), Factor::D);
  w.insert(w.end(), static_cast<std::size_t>(c.gamma), Factor::S);
  w.insert(w.end(), static_cast<std::size_t>(c.delta), Factor::C);
  // Factor order U < D < S < C, so w starts sorted.
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

OperatorSum symmetrized_sum(const SymmetricConfig& c) {
  const Rational weight{1, static_cast<std::int64_t>(multiplicity(c))};
  OperatorSum out;
  for_each_arrangement(c, [&](const Word& w) { out.add(w, weight); });
  return out;
}

DenseDensityMatrix embed_dense(int z, const QuantumNumbers& qn) {
  return embed_dense(SymmetricVector::basis_state(z, qn));
}

DenseDensityMatrix embed_dense(const SymmetricVector& v) {
  const int z = v.z();
  require_within_oracle_limit(z, "embed_dense");
  DenseDensityMatrix out(z);
  const SymmetricBasis& basis = v.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::complex<double> coeff = v.coeffs()[static_cast<Eigen::Index>(i)];
    if (coeff == 0.0) continue;
    const SymmetricConfig c = config_from_qn(z, basis[i]);
    const std::complex<double> weight = coeff / static_cast<double>(multiplicity(c));
    for_each_arrangement(c, [&](const Word& w) {
      out.entries(matrix_unit_ket(w), matrix_unit_bra(w)) += weight;
    });
  }
  return out;
}

SymmetricVector extract_coefficients(const DenseDensityMatrix& rho) {
  const int z = rho.z;
  require_z(z);
  require_within_oracle_limit(z, "extract_coefficients");
  const double asym = permutation_asymmetry(rho);
  if (asym > kSymmetryTolerance) {
    throw std::invalid_argument("density matrix is not permutation symmetric (defect " +
                                std::to_string(asym) + ")");
  }
  SymmetricVector v(z);
  const SymmetricBasis& basis = v.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    // M * Tr(S(dual word) rho) = sum over dual arrangements |k><b| of rho(b, k).
    const SymmetricConfig dual_config = config_from_qn(z, dual_state(basis[i]));
    std::complex<double> sum = 0.0;
    for_each_arrangement(dual_config, [&](const Word& w) {
      sum += rho.entries(matrix_unit_bra(w), matrix_unit_ket(w));
    });
    v.coeffs()[static_cast<Eigen::Index>(i)] = sum;
  }
  return v;
}

}  // namespace dicke4
