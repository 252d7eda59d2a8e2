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

#include "dicke4/su4_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "dicke4/errors.hpp"

namespace dicke4 {

namespace {

constexpr int factor_index(Factor f) { return static_cast<int>(f); }

// Single-site image of a factor: twice_coefficient/2 times `target`.
struct SiteImage {
  int twice_coefficient = 0;
  Factor target = Factor::U;
};

// Single-site action of each superoperator.  Rows follow kAllSuperoperators, columns u, d, s, c.
constexpr SiteImage kZero{};
constexpr SiteImage one(Factor f) { return {2, f}; }
constexpr SiteImage half(Factor f) { return {1, f}; }
constexpr SiteImage minus_half(Factor f) { return {-1, f}; }

using F = Factor;
constexpr std::array<std::array<SiteImage, 4>, 18> kTableI = {{
    // Q+, Q-, Q3
    {kZero, one(F::U), kZero, kZero},
    {one(F::D), kZero, kZero, kZero},
    {half(F::U), minus_half(F::D), kZero, kZero},
    // Sigma+, Sigma-, Sigma3
    {kZero, kZero, kZero, one(F::S)},
    {kZero, kZero, one(F::C), kZero},
    {kZero, kZero, half(F::S), minus_half(F::C)},
    // M+, M-, M3
    {kZero, kZero, kZero, one(F::U)},
    {one(F::C), kZero, kZero, kZero},
    {half(F::U), kZero, kZero, minus_half(F::C)},
    // N+, N-, N3
    {kZero, one(F::S), kZero, kZero},
    {kZero, kZero, one(F::D), kZero},
    {kZero, minus_half(F::D), half(F::S), kZero},
    // U+, U-, U3
    {kZero, kZero, one(F::U), kZero},
    {one(F::S), kZero, kZero, kZero},
    {half(F::U), kZero, minus_half(F::S), kZero},
    // V+, V-, V3
    {kZero, one(F::C), kZero, kZero},
    {kZero, kZero, kZero, one(F::D)},
    {kZero, minus_half(F::D), kZero, half(F::C)},
}};

constexpr const SiteImage& site_image(Superoperator x, Factor f) {
  return kTableI[x.index()][factor_index(f)];
}

// Reference commutator table, upper triangle, uncorrected.  "S" stands for Sigma
// and "xi" for 1/2.  Row r lists [r, c] for c = r .. V3.
constexpr std::array<std::string_view, 18> kPrintedTableRows = {
    "0, 2Q3, -Q+, 0, 0, 0, 0, -V+, -xiQ+, 0, U+, -xiQ+, 0, -N+, -xiQ+, 0, M+, -xiQ+",
    "0, Q-, 0, 0, 0, V-, 0, xiQ-, -U-, 0, xiQ-, N-, 0, xiQ-, -M-, 0, xiQ-",
    "0, 0, 0, 0, xiM+, -xiM-, 0, xiN+, -xiN-, 0, xiU+, -xiU-, 0, xiV+, -xiV-, 0",
    "0, 2S3, -S+, 0, U-, -xiS+, 0, -V-, -xiS+, -M+, 0, xiS+, N+, 0, xiS+",
    "0, S-, U+, 0, xiS-, V+, 0, xiS-, 0, M-, -xiS-, 0, -N-, -xiS-",
    "0, xiM+, -xiM-, 0, xiN+, -xiN-, 0, xiU+, -xiU-, 0, xiV+, -xiV-, 0",
    "0, 2M3, -M+, 0, 0, 0, 0, -S+, -xiM+, Q+, 0, xiM+",
    "0, M-, 0, 0, 0, S-, 0, xiM-, 0, -Q-, -xiM-",
    "0, 0, 0, 0, xiU+, -xiU-, 0, -xiV+, xiV-, 0",
    "0, 2N3, -N+, -Q+, 0, xiN+, 0, S+, -xiN+",
    "0, N-, 0, Q-, -xiN-, -S-, 0, xiN-",
    "0, -xiU+, xiU-, 0, xiV+, -xiV-, 0",
    "0, 2U3, -U+, 0, 0, 0",
    "0, U-, 0, 0, 0",
    "0, 0, 0, 0",
    "0, 2V3, -V+",
    "0, V-",
    "0",
};

struct ErratumCell {
  std::string_view row;
  std::string_view column;
  std::string_view corrected;
};

// Cells of the reference commutator table whose sign disagrees with the single-site actions.
constexpr std::array<ErratumCell, 5> kErrata = {{
    {"S-", "M+", "-U+"},
    {"S3", "U+", "-xiU+"},
    {"S3", "U-", "xiU-"},
    {"S3", "V+", "-xiV+"},
    {"S3", "V-", "xiV-"},
}};

Superoperator parse_name(std::string_view name) {
  if (name.size() != 2) throw std::invalid_argument("bad superoperator name: " + std::string(name));
  Family family;
  switch (name[0]) {
    case 'Q': family = Family::Q; break;
    case 'S': family = Family::Sigma; break;
    case 'M': family = Family::M; break;
    case 'N': family = Family::N; break;
    case 'U': family = Family::U; break;
    case 'V': family = Family::V; break;
    default: throw std::invalid_argument("bad superoperator name: " + std::string(name));
  }
  Part part;
  switch (name[1]) {
    case '+': part = Part::Plus; break;
    case '-': part = Part::Minus; break;
    case '3': part = Part::Three; break;
    default: throw std::invalid_argument("bad superoperator name: " + std::string(name));
  }
  return {family, part};
}

SuperoperatorCombination parse_cell(std::string_view cell) {
  while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
  while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
  if (cell == "0") return {};
  Rational k{1};
  if (cell.front() == '-') {
    k = -k;
    cell.remove_prefix(1);
  }
  if (cell.starts_with("xi")) {
    k /= 2;
    cell.remove_prefix(2);
  } else if (cell.front() == '2') {
    k *= 2;
    cell.remove_prefix(1);
  }
  return {LinearTerm{k, parse_name(cell)}};
}

SuperoperatorCombination negate(SuperoperatorCombination c) {
  for (auto& t : c) t.coefficient = -t.coefficient;
  return c;
}

struct CommutatorTables {
  std::array<std::array<SuperoperatorCombination, 18>, 18> printed;
  std::array<std::array<SuperoperatorCombination, 18>, 18> corrected;
  std::vector<TableErratum> errata;

  CommutatorTables() {
    for (int r = 0; r < 18; ++r) {
      std::string_view row = kPrintedTableRows[r];
      int c = r;
      while (!row.empty()) {
        auto comma = row.find(',');
        auto cell = row.substr(0, comma);
        if (c >= 18) throw std::logic_error("commutator table row too long");
        printed[r][c] = parse_cell(cell);
        if (c != r) printed[c][r] = negate(printed[r][c]);
        ++c;
        row = comma == std::string_view::npos ? std::string_view{} : row.substr(comma + 1);
      }
      if (c != 18) throw std::logic_error("commutator table row too short");
    }
    corrected = printed;
    for (const auto& e : kErrata) {
      int r = parse_name(e.row).index();
      int c = parse_name(e.column).index();
      corrected[r][c] = parse_cell(e.corrected);
      corrected[c][r] = negate(corrected[r][c]);
      errata.push_back({parse_name(e.row), parse_name(e.column)});
    }
  }
};

const CommutatorTables& tables() {
  static const CommutatorTables t;
  return t;
}

}  // namespace

char factor_symbol(Factor f) {
  static constexpr char kSymbols[] = {'u', 'd', 's', 'c'};
  return kSymbols[factor_index(f)];
}

int factor_trace(Factor f) { return (f == Factor::U || f == Factor::D) ? 1 : 0; }

Factor factor_adjoint(Factor f) {
  switch (f) {
    case Factor::S: return Factor::C;
    case Factor::C: return Factor::S;
    default: return f;
  }
}

std::string Superoperator::name() const {
  static constexpr const char* kFamilies[] = {"Q", "Sigma", "M", "N", "U", "V"};
  static constexpr char kParts[] = {'+', '-', '3'};
  return std::string(kFamilies[static_cast<int>(family)]) + kParts[static_cast<int>(part)];
}

std::string word_to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Factor f : w) out.push_back(factor_symbol(f));
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  w.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'u': w.push_back(Factor::U); break;
      case 'd': w.push_back(Factor::D); break;
      case 's': w.push_back(Factor::S); break;
      case 'c': w.push_back(Factor::C); break;
      default: throw std::invalid_argument("unknown factor '" + std::string(1, ch) + "' in " + text);
    }
  }
  return w;
}

OperatorSum OperatorSum::word(Word w, Rational weight) {
  OperatorSum t;
  t.add(w, weight);
  return t;
}

void OperatorSum::add(const Word& w, Rational weight) {
  if (weight.numerator() == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second.numerator() == 0) terms_.erase(it);
  }
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& other) {
  for (const auto& [w, k] : other.terms_) add(w, k);
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& other) {
  for (const auto& [w, k] : other.terms_) add(w, -k);
  return *this;
}

OperatorSum& OperatorSum::operator*=(Rational k) {
  if (k.numerator() == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, weight] : terms_) weight *= k;
  return *this;
}

std::optional<int> OperatorSum::length() const {
  if (terms_.empty()) return std::nullopt;
  const auto n = terms_.begin()->first.size();
  for (const auto& [w, k] : terms_) {
    if (w.size() != n) throw std::invalid_argument("operator sum mixes word lengths");
  }
  return static_cast<int>(n);
}

std::string OperatorSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, k] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << k.numerator();
    if (k.denominator() != 1) os << '/' << k.denominator();
    os << ")*" << word_to_string(w);
  }
  return os.str();
}

OperatorSum single_site_action(Superoperator x, Factor f) {
  const SiteImage& img = site_image(x, f);
  if (img.twice_coefficient == 0) return {};
  return OperatorSum::word({img.target}, Rational{img.twice_coefficient, 2});
}

OperatorSum apply_superoperator(Superoperator x, const OperatorSum& t) {
  OperatorSum out;
  for (const auto& [w, weight] : t.terms()) {
    Word image = w;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const SiteImage& img = site_image(x, w[i]);
      if (img.twice_coefficient == 0) continue;
      image[i] = img.target;
      out.add(image, weight * Rational{img.twice_coefficient, 2});
      image[i] = w[i];
    }
  }
  return out;
}

OperatorSum apply_combination(const SuperoperatorCombination& combo, const OperatorSum& t) {
  OperatorSum out;
  for (const auto& term : combo) out += term.coefficient * apply_superoperator(term.op, t);
  return out;
}

OperatorSum commutator(Superoperator x, Superoperator y, const OperatorSum& t) {
  return apply_superoperator(x, apply_superoperator(y, t)) -
         apply_superoperator(y, apply_superoperator(x, t));
}

OperatorSum apply_casimir(Family family, const OperatorSum& t) {
  const Superoperator plus{family, Part::Plus};
  const Superoperator minus{family, Part::Minus};
  const Superoperator three{family, Part::Three};
  OperatorSum x3 = apply_superoperator(three, t);
  return apply_superoperator(minus, apply_superoperator(plus, t)) + apply_superoperator(three, x3) +
         x3;
}

Rational word_trace(const OperatorSum& t) {
  Rational total{0};
  for (const auto& [w, weight] : t.terms()) {
    if (std::all_of(w.begin(), w.end(), [](Factor f) { return factor_trace(f) == 1; })) {
      total += weight;
    }
  }
  return total;
}

DenseDensityMatrix to_dense(const OperatorSum& t) {
  const auto len = t.length();
  if (!len) throw std::invalid_argument("to_dense needs a non-empty operator sum");
  const int z = *len;
  if (z < 1) throw std::invalid_argument("to_dense needs words of length >= 1");
  require_within_oracle_limit(z, "to_dense");
  DenseDensityMatrix out(z);
  for (const auto& [w, weight] : t.terms()) {
    // Each word is a single matrix unit |ket><bra|.
    std::size_t ket = 0;
    std::size_t bra = 0;
    for (Factor f : w) {
      ket <<= 1;
      bra <<= 1;
      // bit 1 encodes |0>
      if (f == Factor::D || f == Factor::C) ket |= 1;
      if (f == Factor::D || f == Factor::S) bra |= 1;
    }
    out.entries(static_cast<Eigen::Index>(ket), static_cast<Eigen::Index>(bra)) +=
        boost::rational_cast<double>(weight);
  }
  return out;
}

SuperoperatorCombination independent_expansion(Superoperator x) {
  const Superoperator q3{Family::Q, Part::Three};
  const Superoperator s3{Family::Sigma, Part::Three};
  const Superoperator m3{Family::M, Part::Three};
  if (x.part == Part::Three) {
    switch (x.family) {
      case Family::N: return {{Rational{1}, q3}, {Rational{1}, s3}, {Rational{-1}, m3}};
      case Family::U: return {{Rational{-1}, s3}, {Rational{1}, m3}};
      case Family::V: return {{Rational{1}, q3}, {Rational{-1}, m3}};
      default: break;
    }
  }
  return {{Rational{1}, x}};
}

DualSuperoperator dual(Superoperator x) {
  const auto flip = [](Part p) {
    return p == Part::Plus ? Part::Minus : (p == Part::Minus ? Part::Plus : Part::Three);
  };
  switch (x.family) {
    case Family::Q: return {1, {Family::Q, flip(x.part)}};
    // sigma_+ P sigma_+ pairs with itself under the trace.
    case Family::Sigma:
      return x.part == Part::Three ? DualSuperoperator{-1, x} : DualSuperoperator{1, x};
    case Family::M: return {1, {Family::U, flip(x.part)}};
    case Family::N: return {1, {Family::V, flip(x.part)}};
    case Family::U: return {1, {Family::M, flip(x.part)}};
    case Family::V: return {1, {Family::N, flip(x.part)}};
  }
  throw std::logic_error("unreachable");
}

const SuperoperatorCombination& commutator_table_entry(Superoperator x, Superoperator y) {
  return tables().corrected[x.index()][y.index()];
}

const SuperoperatorCombination& printed_commutator_table_entry(Superoperator x, Superoperator y) {
  return tables().printed[x.index()][y.index()];
}

std::span<const TableErratum> commutator_table_errata() { return tables().errata; }

}  // namespace dicke4
