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

#include "polycount/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <exception>
#include <mutex>
#include <thread>

#include "polycount/errors.hpp"

namespace polycount {

namespace {

struct Visitor {
  const FieldCtx& ctx;
  const IrreducibleTable& table;
  std::size_t w;
  std::set<int> degrees;
  PatternMode mode;
  OracleSummary out;

  void visit(const FqPoly& f) {
    const GroupElem cls = reduce(f, w);
    if (f.degree() == 0) {
      // The empty product: no factors at all.
      ++out.patterns[{cls, key_of({})}];
      ++out.largest_factor[{cls, 0}];
      return;
    }
    const Factorization fact = factor(ctx, table, f);
    ++out.patterns[{cls, key_of(fact)}];
    int largest = 0;
    for (const auto& fa : fact) largest = std::max(largest, static_cast<int>(fa.poly.degree()));
    ++out.largest_factor[{cls, largest}];
    if (fact.size() == 1 && fact[0].multiplicity == 1) ++out.irreducible[cls];
  }

  PatternKey key_of(const Factorization& fact) const {
    const auto pattern = pattern_of(fact, degrees, mode);
    return PatternKey(pattern.begin(), pattern.end());
  }
};

template <typename K>
void add_map(std::map<K, BigInt>& a, const std::map<K, BigInt>& b) {
  for (const auto& [k, v] : b) a[k] += v;
}

IrreducibleTable factor_table(const FieldCtx& ctx, int m) {
  return irreducibles_up_to(ctx, static_cast<std::size_t>(std::max(1, m / 2)));
}

}  // namespace

BigInt oracle_count(const OracleQuery& query) {
  if (query.m < 1) throw InputError("degree m must be at least 1");
  if (query.m < static_cast<int>(query.w)) throw InputError("oracle query needs m >= w");
  if (query.coeffs.size() != query.w) throw InputError("expected exactly w prescribed coefficients");
  const FieldCtx& ctx = query.ctx;
  const IrreducibleTable table = factor_table(ctx, query.m);

  std::set<int> degrees;
  PatternMode mode = PatternMode::distinct;
  std::map<int, int> want;
  if (const auto* spec = std::get_if<PatternSpec>(&query.constraint)) {
    check_pattern_degrees(*spec, query.m);
    mode = spec->mode;
    want = spec->targets;
    for (const auto& [i, c] : want) degrees.insert(i);
  } else if (const auto* smooth = std::get_if<SmoothConstraint>(&query.constraint)) {
    if (smooth->n < 1) throw InputError("smoothness bound must be at least 1");
  }

  BigInt count = 0;
  MonicStream stream(ctx, static_cast<std::size_t>(query.m), query.coeffs);
  while (stream.next()) {
    const Factorization fact = factor(ctx, table, stream.current());
    bool hit = false;
    if (std::holds_alternative<PatternSpec>(query.constraint)) {
      hit = pattern_of(fact, degrees, mode) == want;
    } else if (const auto* smooth = std::get_if<SmoothConstraint>(&query.constraint)) {
      hit = std::all_of(fact.begin(), fact.end(),
                        [&](const Factor& fa) { return static_cast<int>(fa.poly.degree()) <= smooth->n; });
    } else {
      hit = fact.size() == 1 && fact[0].multiplicity == 1;
    }
    if (hit) ++count;
  }
  return count;
}

OracleSummary oracle_summary(const FieldCtx& ctx, std::size_t w, int m, const std::vector<int>& degrees,
                             PatternMode mode, unsigned workers) {
  if (m < 0) throw InputError("degree m must be nonnegative");
  check_budget(power_count(ctx.q(), static_cast<std::size_t>(m)), "oracle enumeration");
  const IrreducibleTable table = factor_table(ctx, m);
  const std::set<int> degree_set(degrees.begin(), degrees.end());

  // One shard per value of f_1; a single shard when m = 0.
  const std::size_t shards = m == 0 ? 1 : ctx.q();
  std::vector<Visitor> parts;
  parts.reserve(shards);
  for (std::size_t s = 0; s < shards; ++s) parts.push_back(Visitor{ctx, table, w, degree_set, mode, {}});
  auto run_shard = [&](std::size_t s) {
    std::vector<FqElem> prefix;
    if (m > 0) prefix.push_back(FqElem(static_cast<std::uint32_t>(s)));
    MonicStream stream(ctx, static_cast<std::size_t>(m), prefix);
    while (stream.next()) parts[s].visit(stream.current());
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, shards));
  if (workers <= 1) {
    for (std::size_t s = 0; s < shards; ++s) run_shard(s);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_lock;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t s = t; s < shards; s += workers) run_shard(s);
        } catch (...) {
          std::lock_guard lock(failure_lock);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  OracleSummary out;
  for (const auto& part : parts) {
    merge_into(out.patterns, part.out.patterns);
    add_map(out.irreducible, part.out.irreducible);
    add_map(out.largest_factor, part.out.largest_factor);
  }
  return out;
}

TallyTable oracle_table(const FieldCtx& ctx, std::size_t w, int m, const std::vector<int>& degrees, PatternMode mode,
                        unsigned workers) {
  return oracle_summary(ctx, w, m, degrees, mode, workers).patterns;
}

void merge_into(TallyTable& a, const TallyTable& b) { add_map(a, b); }

TallyTable marginalize(const TallyTable& table, const std::vector<int>& subset) {
  const std::set<int> keep(subset.begin(), subset.end());
  TallyTable out;
  for (const auto& [k, v] : table) {
    PatternKey key;
    for (const auto& entry : k.second) {
      if (keep.count(entry.first)) key.push_back(entry);
    }
    if (key.size() != keep.size()) throw InputError("marginalize: subset is not contained in the tallied degrees");
    out[{k.first, std::move(key)}] += v;
  }
  return out;
}

BigInt lookup(const TallyTable& table, const GroupElem& cls, const PatternKey& key) {
  auto it = table.find({cls, key});
  return it == table.end() ? BigInt(0) : it->second;
}

BigInt smooth_from_summary(const OracleSummary& summary, const GroupElem& cls, int n) {
  BigInt total = 0;
  for (auto it = summary.largest_factor.lower_bound({cls, 0});
       it != summary.largest_factor.end() && it->first.first == cls && it->first.second <= n; ++it) {
    total += it->second;
  }
  return total;
}

}  // namespace polycount
