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

#ifndef DICKE4_ERRORS_HPP_
#define DICKE4_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dicke4 {

/// The requested atom number exceeds what the dense 2^Z x 2^Z path allows.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter combination sits on a singular limit of a closed-form expression.
class LimitDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numerical routine did not meet its accuracy contract.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOracleLimit = 10;

/// Largest Z accepted by dense routines.  DICKE4_ORACLE_LIMIT overrides the default of 10.
int oracle_limit();

/// Throws OracleLimitError if z > oracle_limit().
void require_within_oracle_limit(int z, const char* what);

}  // namespace dicke4

#endif  // DICKE4_ERRORS_HPP_
