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

// Self-check suite behind `dicke4 verify`: algebra, basis, solver and
// scenario checks cross-validated against the dense oracle.

#ifndef DICKE4_VERIFICATION_HPP_
#define DICKE4_VERIFICATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace dicke4 {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;  // 0 for exact checks
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  int z_max = 4;
  std::uint64_t seed = 20260101;
  int words_per_z = 100;
  /// Perturbs one propagated coefficient so that the suite must fail.
  bool inject_fault = false;
};

/// Throws std::invalid_argument for z_max < 1 and OracleLimitError above the dense limit.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Binomial weight binom(Z, k) s^(Z-k) (1-s)^k of the stationary state at q3 = Z/2 - k.
double stationary_weight(int z, double s, int k);

}  // namespace dicke4

#endif  // DICKE4_VERIFICATION_HPP_
