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

// Ground truth by exhaustive enumeration: list every monic polynomial with the
// requested leading coefficients, factor it, and tally.

#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "polycount/exact.hpp"
#include "polycount/field.hpp"
#include "polycount/group_ring.hpp"
#include "polycount/pattern.hpp"

namespace polycount {

struct SmoothConstraint {
  int n = 1;  // no irreducible factor of degree > n
};
struct IrreducibleConstraint {};

using OracleConstraint = std::variant<PatternSpec, SmoothConstraint, IrreducibleConstraint>;

struct OracleQuery {
  FieldCtx ctx;
  std::size_t w = 0;
  int m = 1;  // m >= w
  std::vector<FqElem> coeffs;  // f_1..f_w
  OracleConstraint constraint;
};

/// Enumerates the q^{m-w} polynomials of the query and counts those meeting the constraint.
BigInt oracle_count(const OracleQuery& query);

/// (class <f>_w, pattern restricted to T) -> number of monic degree-m polynomials.
using TallyTable = std::map<std::pair<GroupElem, PatternKey>, BigInt>;

/// Everything one pass over M_m can record, keyed by class.
struct OracleSummary {
  TallyTable patterns;
  std::map<GroupElem, BigInt> irreducible;
  /// (class, largest factor degree) -> count; n-smooth counts are prefix sums.
  std::map<std::pair<GroupElem, int>, BigInt> largest_factor;
};

/// One pass over all q^m monic polynomials of degree m, sharded by f_1 over
/// `workers` threads (0 picks the hardware concurrency). The result does not
/// depend on the worker count.
OracleSummary oracle_summary(const FieldCtx& ctx, std::size_t w, int m, const std::vector<int>& degrees,
                             PatternMode mode, unsigned workers = 0);

TallyTable oracle_table(const FieldCtx& ctx, std::size_t w, int m, const std::vector<int>& degrees, PatternMode mode,
                        unsigned workers = 0);

/// Adds b into a.
void merge_into(TallyTable& a, const TallyTable& b);

/// Sums out every degree not in `subset` (which must be a subset of the table's T).
TallyTable marginalize(const TallyTable& table, const std::vector<int>& subset);

/// Count for one class and one pattern; zero when absent.
BigInt lookup(const TallyTable& table, const GroupElem& cls, const PatternKey& key);

/// Number of n-smooth polynomials in class `cls`.
BigInt smooth_from_summary(const OracleSummary& summary, const GroupElem& cls, int n);

}  // namespace polycount
