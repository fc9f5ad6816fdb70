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

#include <doctest.h>

#include "naive.hpp"
#include "polycount/errors.hpp"
#include "polycount/oracle.hpp"

using namespace polycount;

TEST_CASE("oracle_count examples") {
  const FieldCtx f2 = FieldCtx::build(2, 1);
  CHECK(oracle_count(OracleQuery{f2, 0, 2, {}, IrreducibleConstraint{}}) == 1);
  CHECK(oracle_count(OracleQuery{f2, 1, 3, {f2.zero()}, PatternSpec{{{1, 1}}, PatternMode::distinct}}) == 2);
  CHECK(oracle_count(OracleQuery{f2, 0, 3, {}, SmoothConstraint{2}}) == 6);
  CHECK_THROWS_AS(oracle_count(OracleQuery{f2, 3, 2, {f2.zero(), f2.zero(), f2.zero()}, IrreducibleConstraint{}}),
                  InputError);
  CHECK_THROWS_AS(oracle_count(OracleQuery{f2, 1, 2, {}, IrreducibleConstraint{}}), InputError);
}

TEST_CASE("oracle_table examples") {
  const FieldCtx f2 = FieldCtx::build(2, 1);
  CHECK(oracle_table(f2, 0, 1, {1}, PatternMode::distinct) == TallyTable{{{group_identity(0), {{1, 1}}}, 2}});
  const GroupElem x{{f2.zero()}}, x1{{f2.one()}};
  CHECK(oracle_table(f2, 1, 2, {1}, PatternMode::distinct) ==
        TallyTable{{{x, {{1, 1}}}, 2}, {{x1, {{1, 0}}}, 1}, {{x1, {{1, 2}}}, 1}});
}

TEST_CASE("partition law") {
  for (auto [p, e, m, w] : {std::tuple{2u, 1u, 6, 2u}, {3u, 1u, 4, 1u}, {2u, 2u, 3, 1u}, {3u, 1u, 1, 2u}}) {
    const FieldCtx ctx = FieldCtx::build(p, e);
    const GroupPtr g = make_group(ctx, w);
    const auto table = oracle_table(ctx, w, m, {1, 2}, PatternMode::multiplicity);
    std::map<GroupElem, BigInt> per_class;
    BigInt total = 0;
    for (const auto& [k, v] : table) {
      per_class[k.first] += v;
      total += v;
    }
    CHECK(total == pow_int(ctx.q(), static_cast<unsigned long>(m)));
    if (static_cast<std::size_t>(m) >= w) {
      CHECK(per_class.size() == g->order());
      for (const auto& [cls, v] : per_class) CHECK(v == pow_int(ctx.q(), static_cast<unsigned long>(m) - w));
    }
  }
}

TEST_CASE("sharding does not change the table") {
  const FieldCtx f3 = FieldCtx::build(3, 1);
  const auto one = oracle_summary(f3, 2, 6, {1, 2, 3}, PatternMode::distinct, 1);
  for (unsigned workers : {2u, 3u, 8u}) {
    const auto many = oracle_summary(f3, 2, 6, {1, 2, 3}, PatternMode::distinct, workers);
    CHECK(one.patterns == many.patterns);
    CHECK(one.irreducible == many.irreducible);
    CHECK(one.largest_factor == many.largest_factor);
  }
}

TEST_CASE("enumeration size is exactly q^(m-w)") {
  const FieldCtx f3 = FieldCtx::build(3, 1);
  for (int m = 1; m <= 5; ++m) {
    for (std::size_t w = 0; w <= static_cast<std::size_t>(std::min(m, 2)); ++w) {
      const std::vector<FqElem> prefix(w, f3.element(1));
      CHECK(oracle_count(OracleQuery{f3, w, m, prefix, SmoothConstraint{m}}) ==
            pow_int(3, static_cast<unsigned long>(m) - w));
    }
  }
}

TEST_CASE("oracle refuses beyond the budget") {
  const FieldCtx f2 = FieldCtx::build(2, 1);
  set_enumeration_budget(64);
  CHECK_THROWS_AS(oracle_table(f2, 0, 7, {1}, PatternMode::distinct), CapacityError);
  CHECK_THROWS_AS(oracle_count(OracleQuery{f2, 0, 7, {}, IrreducibleConstraint{}}), CapacityError);
  CHECK_NOTHROW(oracle_count(OracleQuery{f2, 1, 7, {f2.one()}, IrreducibleConstraint{}}));
  set_enumeration_budget(0);
}

TEST_CASE("marginals and lookups") {
  const FieldCtx f2 = FieldCtx::build(2, 1);
  const auto full = oracle_table(f2, 1, 5, {1, 2, 3}, PatternMode::distinct);
  const auto direct = oracle_table(f2, 1, 5, {1, 3}, PatternMode::distinct);
  CHECK(marginalize(full, {1, 3}) == direct);
  CHECK_THROWS_AS(marginalize(direct, {2}), InputError);
  CHECK(lookup(direct, GroupElem{{f2.one()}}, {{1, 9}, {3, 9}}) == 0);
  TallyTable twice = direct;
  merge_into(twice, direct);
  for (const auto& [k, v] : twice) CHECK(v == 2 * direct.at(k));
}

TEST_CASE("oracle agrees with an independent brute force") {
  for (auto [p, e, m] : {std::tuple{2u, 1u, 6}, {3u, 1u, 4}, {2u, 2u, 3}}) {
    const FieldCtx ctx = FieldCtx::build(p, e);
    for (auto mode : {PatternMode::distinct, PatternMode::multiplicity}) {
      const auto summary = oracle_summary(ctx, 1, m, {1, 2}, mode);
      TallyTable expect;
      std::map<GroupElem, BigInt> irreducible;
      std::map<std::pair<GroupElem, int>, BigInt> largest;
      for (const auto& f : enumerate_monic(ctx, static_cast<std::size_t>(m))) {
        const auto profile = naive::degree_profile(ctx, f);
        const GroupElem cls = reduce(f, 1);
        PatternKey key;
        for (int i : {1, 2}) {
          auto it = profile.find(i);
          const int v = it == profile.end() ? 0 : (mode == PatternMode::distinct ? it->second.first : it->second.second);
          key.emplace_back(i, v);
        }
        ++expect[{cls, key}];
        if (naive::irreducible(ctx, f)) ++irreducible[cls];
        ++largest[{cls, profile.rbegin()->first}];
      }
      CHECK(summary.patterns == expect);
      CHECK(summary.irreducible == irreducible);
      CHECK(summary.largest_factor == largest);
      for (int n = 1; n <= m; ++n) {
        const GroupElem zero{{ctx.zero()}};
        CHECK(smooth_from_summary(summary, zero, n) ==
              oracle_count(OracleQuery{ctx, 1, m, {ctx.zero()}, SmoothConstraint{n}}));
      }
    }
  }
}
