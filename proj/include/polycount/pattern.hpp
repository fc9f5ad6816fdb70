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

// Factorization patterns: which degrees are constrained, to what count, and
// whether factors are counted with multiplicity.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polycount {

enum class PatternMode {
  distinct,      // r_i: distinct irreducible factors of degree i
  multiplicity,  // l_i: irreducible factors of degree i counted with multiplicity
};

const char* to_string(PatternMode mode);
PatternMode parse_mode(const std::string& text);

/// Prescribed factor counts per degree. The constrained degree set T is the
/// key set of `targets`.
struct PatternSpec {
  std::map<int, int> targets;
  PatternMode mode = PatternMode::distinct;

  std::vector<int> degrees() const;
  int max_degree() const;
  /// sum over i in T of i * target(i)
  long weighted_size() const;

  bool operator==(const PatternSpec&) const = default;
};

/// Canonical pattern: (degree, count) pairs sorted by degree, one per degree of T.
using PatternKey = std::vector<std::pair<int, int>>;

PatternKey to_key(const PatternSpec& spec);
PatternSpec from_key(const PatternKey& key, PatternMode mode);

/// "i:count,i:count" -> PatternSpec. Rejects duplicates, degrees < 1, negative counts.
PatternSpec parse_pattern(const std::string& text, PatternMode mode);
std::string format_pattern(const PatternKey& key);

/// Rejects an empty T and any degree outside [1, m].
void check_pattern_degrees(const PatternSpec& spec, int m);

/// Every target vector over `degrees` with sum i * c_i <= m, in lexicographic order.
std::vector<PatternKey> patterns_within(const std::vector<int>& degrees, int m);

}  // namespace polycount
