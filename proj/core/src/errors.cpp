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

#include "dicke4/errors.hpp"

#include <cstdlib>
#include <string>

namespace dicke4 {

int oracle_limit() {
  if (const char* env = std::getenv("DICKE4_ORACLE_LIMIT"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const int value = std::stoi(env, &used);
      if (used == std::string(env).size() && value >= 1) return value;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("DICKE4_ORACLE_LIMIT must be a positive integer, got '") +
                                env + "'");
  }
  return kDefaultOracleLimit;
}

void require_within_oracle_limit(int z, const char* what) {
  const int limit = oracle_limit();
  if (z > limit) {
    throw OracleLimitError(std::string(what) + ": Z=" + std::to_string(z) +
                           " exceeds the dense oracle limit " + std::to_string(limit) +
                           " (set DICKE4_ORACLE_LIMIT to raise it)");
  }
}

}  // namespace dicke4
