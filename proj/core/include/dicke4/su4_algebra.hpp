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

// Exact algebra of the 18 SU(4) superoperators acting on tensor words over
// the single-site operator units
//
//   u = |1><1|,  d = |0><0|,  s = |1><0|,  c = |0><1|.
//
// Every superoperator is a sum over sites of a single-site map, so its action
// on a word is fixed by its action on u, d, s and c.  Weights are exact
// rationals; floating point appears only in to_dense().

#ifndef DICKE4_SU4_ALGEBRA_HPP_
#define DICKE4_SU4_ALGEBRA_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "dicke4/dense_matrix.hpp"

namespace dicke4 {

using Rational = boost::rational<std::int64_t>;

enum class Factor : std::uint8_t { U, D, S, C };

inline constexpr std::array<Factor, 4> kAllFactors = {Factor::U, Factor::D, Factor::S, Factor::C};

char factor_symbol(Factor f);
/// 1 for u and d, 0 for s and c.
int factor_trace(Factor f);
/// Hermitian adjoint: swaps s and c.
Factor factor_adjoint(Factor f);

enum class Family : std::uint8_t { Q, Sigma, M, N, U, V };
enum class Part : std::uint8_t { Plus, Minus, Three };

struct Superoperator {
  Family family;
  Part part;

  friend constexpr bool operator==(Superoperator, Superoperator) = default;
  friend constexpr auto operator<=>(Superoperator, Superoperator) = default;

  /// Row-major position 0..17 in the order Q, Sigma, M, N, U, V x (+, -, 3).
  constexpr int index() const { return 3 * static_cast<int>(family) + static_cast<int>(part); }
  std::string name() const;
};

inline constexpr std::array<Family, 6> kAllFamilies = {Family::Q, Family::Sigma, Family::M,
                                                       Family::N, Family::U,     Family::V};

inline constexpr std::array<Superoperator, 18> kAllSuperoperators = [] {
  std::array<Superoperator, 18> out{};
  int k = 0;
  for (Family f : kAllFamilies) {
    for (Part p : {Part::Plus, Part::Minus, Part::Three}) out[k++] = Superoperator{f, p};
  }
  return out;
}();

using Word = std::vector<Factor>;

std::string word_to_string(const Word& w);
/// Inverse of word_to_string; throws std::invalid_argument on unknown letters.
Word parse_word(const std::string& text);

/// Finite linear combination of words with exact weights.  Zero weights are
/// never stored, so two sums are equal iff their term maps are equal.
class OperatorSum {
 public:
  OperatorSum() = default;
  static OperatorSum word(Word w, Rational weight = Rational{1});

  void add(const Word& w, Rational weight);

  OperatorSum& operator+=(const OperatorSum& other);
  OperatorSum& operator-=(const OperatorSum& other);
  OperatorSum& operator*=(Rational k);

  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
  friend OperatorSum operator-(OperatorSum a, const OperatorSum& b) { return a -= b; }
  friend OperatorSum operator*(Rational k, OperatorSum a) { return a *= k; }
  friend bool operator==(const OperatorSum&, const OperatorSum&) = default;

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Common word length; nullopt for the empty sum.  Throws on mixed lengths.
  std::optional<int> length() const;

  std::string to_string() const;

 private:
  std::map<Word, Rational> terms_;
};

struct LinearTerm {
  Rational coefficient;
  Superoperator op;

  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

/// Linear combination of superoperators.  Empty means the zero map.
using SuperoperatorCombination = std::vector<LinearTerm>;

/// Image of a single factor (0, one factor, or +-1/2 factor).
OperatorSum single_site_action(Superoperator x, Factor f);

OperatorSum apply_superoperator(Superoperator x, const OperatorSum& t);
OperatorSum apply_combination(const SuperoperatorCombination& combo, const OperatorSum& t);

/// x(y(t)) - y(x(t)).
OperatorSum commutator(Superoperator x, Superoperator y, const OperatorSum& t);

/// X^2 = X_- X_+ + X_3^2 + X_3.
OperatorSum apply_casimir(Family family, const OperatorSum& t);

/// Sum over terms of weight times the product of factor traces.
Rational word_trace(const OperatorSum& t);

/// Dense 2^Z x 2^Z matrix, factors Kronecker-ordered with site 1 leftmost.
/// Throws std::invalid_argument on an empty or mixed-length sum and
/// OracleLimitError when Z exceeds oracle_limit().
DenseDensityMatrix to_dense(const OperatorSum& t);

/// N3 = Q3 + S3 - M3, U3 = -S3 + M3, V3 = Q3 - M3 in terms of the 15
/// independent generators; every other superoperator maps to itself.
SuperoperatorCombination independent_expansion(Superoperator x);

/// Dual conjugate under Tr{O (L P)} = Tr{(dual L) O P}.
struct DualSuperoperator {
  int sign;
  Superoperator op;
};
DualSuperoperator dual(Superoperator x);

/// Right-hand side of [x, y] from the commutator table with the errata applied.
const SuperoperatorCombination& commutator_table_entry(Superoperator x, Superoperator y);

/// The same cell of the reference table before the sign corrections.
const SuperoperatorCombination& printed_commutator_table_entry(Superoperator x, Superoperator y);

struct TableErratum {
  Superoperator row;
  Superoperator column;
};

/// Cells where the printed table disagrees with the single-site definitions.
std::span<const TableErratum> commutator_table_errata();

}  // namespace dicke4

#endif  // DICKE4_SU4_ALGEBRA_HPP_
