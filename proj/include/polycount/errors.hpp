/*
   Copyright 2026 The polycount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polycount {

// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A query outside the supported envelope or the enumeration budget (exit code 3).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quantity that must be an integer was not. Always an implementation bug.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Cap on the number of polynomials any single enumeration may visit.
// Resolution order: set_enumeration_budget(), then $POLYCOUNT_BUDGET, then the default.
std::uint64_t enumeration_budget();
void set_enumeration_budget(std::uint64_t budget);  // 0 restores the env/default lookup

// Throws CapacityError when `count` exceeds the budget.
void check_budget(std::uint64_t count, const std::string& what);

}  // namespace polycount
