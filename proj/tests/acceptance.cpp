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

// Acceptance gate: runs each acceptance criterion at tolerance zero and prints
// one PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "polycount/closed_form.hpp"
#include "polycount/errors.hpp"
#include "polycount/group_ring.hpp"
#include "polycount/oracle.hpp"

using namespace polycount;

namespace {

struct Report {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what();
  }
};

struct FieldSpec {
  std::uint32_t p, e;
};

const std::vector<PatternMode> kModes{PatternMode::distinct, PatternMode::multiplicity};

// Nonempty subsets of {1, 2, 3} restricted to [1, m].
std::vector<std::vector<int>> subsets_up_to(int m) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= 3; ++i) {
      if (mask & (1 << (i - 1))) s.push_back(i);
    }
    if (s.back() <= m) out.push_back(s);
  }
  return out;
}

std::vector<int> full_degrees(int m) {
  std::vector<int> t;
  for (int i = 1; i <= std::min(m, 3); ++i) t.push_back(i);
  return t;
}

std::string cell(const FieldCtx& ctx, std::size_t w, int m, const GroupElem& cls, const PatternKey& key,
                 PatternMode mode, const BigInt& got, const BigInt& want) {
  std::ostringstream s;
  s << "q=" << ctx.q() << " w=" << w << " m=" << m << " coeffs=" << format_elem_list(ctx, cls.coeffs)
    << " pattern=" << format_pattern(key) << " mode=" << to_string(mode) << ": got " << to_decimal(got)
    << ", expected " << to_decimal(want);
  return s.str();
}

// Grid of criterion 1: q in {2,3,4,5}, m <= 8 with q^m <= 4e5.
std::vector<std::pair<FieldCtx, int>> closed_form_grid() {
  std::vector<std::pair<FieldCtx, int>> out;
  for (auto [p, e] : std::vector<FieldSpec>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const FieldCtx ctx = FieldCtx::build(p, e);
    for (int m = 1; m <= 8 && power_count(ctx.q(), static_cast<std::size_t>(m)) <= 400'000; ++m) {
      out.emplace_back(ctx, m);
    }
  }
  return out;
}

BigInt closed_form(const PrimePower& q, std::size_t w, int m, const GroupElem& cls, const PatternSpec& spec) {
  return w == 0 ? count_pattern_w0(q, m, spec) : count_pattern_w1(q, m, cls.coeffs[0].is_zero(), spec);
}

void criterion_oracle_closed_forms(Report& r) {
  for (const auto& [ctx, m] : closed_form_grid()) {
    const PrimePower& q = ctx.prime_power();
    const GroupPtr g1 = make_group(ctx, 1);
    for (auto mode : kModes) {
      // One enumeration per (q, m, mode); w = 0 is the sum over trace classes.
      const TallyTable by_trace = oracle_table(ctx, 1, m, full_degrees(m), mode);
      TallyTable plain;
      for (const auto& [k, v] : by_trace) plain[{group_identity(0), k.second}] += v;
      for (const auto& t : subsets_up_to(m)) {
        bool special_applies = true;
        for (int i : t) special_applies = special_applies && i % static_cast<int>(q.p) != 0;
        for (std::size_t w = 0; w <= 1; ++w) {
          const TallyTable table = marginalize(w == 0 ? plain : by_trace, t);
          const std::size_t classes = w == 0 ? 1 : g1->order();
          for (std::size_t c = 0; c < classes; ++c) {
            const GroupElem cls = w == 0 ? group_identity(0) : g1->element(c);
            for (const auto& key : patterns_within(t, m)) {
              const PatternSpec spec = from_key(key, mode);
              const BigInt want = lookup(table, cls, key);
              const BigInt got = closed_form(q, w, m, cls, spec);
              r.expect(got == want, [&] { return cell(ctx, w, m, cls, key, mode, got, want); });
              if (w == 1 && special_applies) {
                const BigInt alt = count_pattern_w1_special(q, m, cls.coeffs[0].is_zero(), spec);
                r.expect(alt == want, [&] { return "special variant, " + cell(ctx, w, m, cls, key, mode, alt, want); });
              }
            }
          }
        }
      }
    }
  }
}

void criterion_oracle_general(Report& r) {
  for (std::uint32_t p : {2u, 3u}) {
    const FieldCtx ctx = FieldCtx::build(p, 1);
    constexpr std::size_t w = 2;
    const GroupPtr g = make_group(ctx, w);
    for (int m = 1; m <= 6; ++m) {
      for (auto mode : kModes) {
        const OracleSummary summary = oracle_summary(ctx, w, m, full_degrees(m), mode);
        if (mode == PatternMode::distinct) {
          for (std::size_t c = 0; c < g->order(); ++c) {
            const GroupElem cls = g->element(c);
            auto it = summary.irreducible.find(cls);
            const BigInt want = it == summary.irreducible.end() ? BigInt(0) : it->second;
            const BigInt got = count_irreducible_general(ctx, w, m, cls.coeffs);
            r.expect(got == want, [&] {
              return "irreducible q=" + std::to_string(ctx.q()) + " m=" + std::to_string(m) +
                     " coeffs=" + format_elem_list(ctx, cls.coeffs) + ": got " + to_decimal(got) + ", expected " +
                     to_decimal(want);
            });
          }
        }
        for (const auto& t : subsets_up_to(m)) {
          const TallyTable table = marginalize(summary.patterns, t);
          const PatternCountTable batch = pattern_counts_general(ctx, w, m, t, mode);
          for (std::size_t c = 0; c < g->order(); ++c) {
            const GroupElem cls = g->element(c);
            for (const auto& key : patterns_within(t, m)) {
              const BigInt want = lookup(table, cls, key);
              const BigInt got = count_pattern_general(ctx, w, m, cls.coeffs, from_key(key, mode));
              r.expect(got == want, [&] { return cell(ctx, w, m, cls, key, mode, got, want); });
              const BigInt& bulk = batch.at({cls, key});
              r.expect(bulk == want, [&] { return "batch, " + cell(ctx, w, m, cls, key, mode, bulk, want); });
            }
          }
        }
      }
    }
  }
}

void criterion_smooth(Report& r) {
  for (auto [p, e] : std::vector<FieldSpec>{{2, 1}, {3, 1}, {2, 2}}) {
    const PrimePower q = PrimePower::make(p, e);
    for (int m = 1; m <= 12; ++m) {
      for (int n = 1; n <= m; ++n) {
        const BigInt a = smooth_w0(q, m, n, SmoothMethod::complement);
        const BigInt b = smooth_w0(q, m, n, SmoothMethod::partition);
        r.expect(a == b, [&] {
          return "w=0 q=" + std::to_string(q.q) + " m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
                 to_decimal(a) + " vs " + to_decimal(b);
        });
        for (bool alpha_zero : {true, false}) {
          const BigInt c = smooth_w1(q, m, n, alpha_zero, SmoothMethod::complement);
          const BigInt d = smooth_w1(q, m, n, alpha_zero, SmoothMethod::partition);
          r.expect(c == d, [&] {
            return "w=1 q=" + std::to_string(q.q) + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                   (alpha_zero ? " alpha=0" : " alpha!=0") + ": " + to_decimal(c) + " vs " + to_decimal(d);
          });
        }
      }
    }
  }
}

void criterion_known_values(Report& r) {
  const FieldCtx f2 = FieldCtx::build(2, 1);
  const PrimePower& q = f2.prime_power();
  const FqElem zero = f2.zero(), one = f2.one();
  auto check = [&](const char* what, const BigInt& oracle, const BigInt& formula, long want) {
    r.expect(oracle == want && formula == want, [&] {
      return std::string(what) + ": oracle " + to_decimal(oracle) + ", formula " + to_decimal(formula) +
             ", expected " + std::to_string(want);
    });
  };
  const long irreducible_counts[] = {0, 2, 1, 2, 3};
  for (int m = 2; m <= 4; ++m) {
    check(("|I_" + std::to_string(m) + "|").c_str(), oracle_count(OracleQuery{f2, 0, m, {}, IrreducibleConstraint{}}),
          count_irreducible_total(q, m), irreducible_counts[m]);
  }
  check("I(2, <x>)", oracle_count(OracleQuery{f2, 1, 2, {zero}, IrreducibleConstraint{}}),
        count_irreducible_trace(q, 2, true), 0);
  check("I(2, <x+1>)", oracle_count(OracleQuery{f2, 1, 2, {one}, IrreducibleConstraint{}}),
        count_irreducible_trace(q, 2, false), 1);
  const PatternSpec one_root{{{1, 1}}, PatternMode::distinct};
  const PatternSpec rootless{{{1, 0}}, PatternMode::distinct};
  check("N(3, I_1^1, 1)", oracle_count(OracleQuery{f2, 0, 3, {}, one_root}), count_pattern_w0(q, 3, one_root), 4);
  check("N(2, I_1^0, <x+1>)", oracle_count(OracleQuery{f2, 1, 2, {one}, rootless}),
        count_pattern_w1(q, 2, false, rootless), 1);
  check("N(2, I_1^0, <x>)", oracle_count(OracleQuery{f2, 1, 2, {zero}, rootless}),
        count_pattern_w1(q, 2, true, rootless), 0);
}

void criterion_large(Report& r) {
  std::uint64_t applicable = 0;
  for (const auto& [ctx, m] : closed_form_grid()) {
    const PrimePower& q = ctx.prime_power();
    const GroupPtr g1 = make_group(ctx, 1);
    for (const auto& t : subsets_up_to(m)) {
      for (auto mode : kModes) {
        for (const auto& key : patterns_within(t, m)) {
          const PatternSpec spec = from_key(key, mode);
          for (std::size_t w = 0; w <= 1; ++w) {
            if (!large_hypothesis_holds(q, static_cast<int>(w), m, spec)) continue;
            const BigInt large = count_large(q, static_cast<int>(w), m, spec);
            for (std::size_t c = 0; c < (w == 0 ? 1 : g1->order()); ++c) {
              const GroupElem cls = w == 0 ? group_identity(0) : g1->element(c);
              ++applicable;
              const BigInt general = closed_form(q, w, m, cls, spec);
              r.expect(large == general, [&] { return cell(ctx, w, m, cls, key, mode, large, general); });
            }
          }
        }
      }
    }
  }
  r.expect(applicable > 0, [] { return std::string("no grid cell satisfies the large-degree hypothesis"); });
}

void criterion_structural(Report& r) {
  auto where = [](const FieldCtx& ctx, std::size_t w, const char* what) {
    return std::string(what) + " fails for q=" + std::to_string(ctx.q()) + " w=" + std::to_string(w);
  };
  for (auto [p, e] : std::vector<FieldSpec>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const FieldCtx ctx = FieldCtx::build(p, e);
    const PrimePower& q = ctx.prime_power();
    for (std::size_t w = 0; w <= 2; ++w) {
      const GroupPtr g = make_group(ctx, w);
      const auto [E, J] = idempotents(g);
      r.expect(E * E == E, [&] { return where(ctx, w, "E^2 = E"); });
      r.expect(J * J == J, [&] { return where(ctx, w, "J^2 = J"); });
      r.expect((E * J).is_zero(), [&] { return where(ctx, w, "EJ = 0"); });
      bool laws = true;
      for (std::size_t a = 0; a < g->order(); ++a) {
        laws = laws && g->mul(a, g->inv(a)) == Group::identity() && g->mul(a, Group::identity()) == a;
        for (std::size_t b = 0; b < g->order(); ++b) {
          laws = laws && g->mul(a, b) == g->mul(b, a);
          for (std::size_t c = 0; c < g->order(); ++c) laws = laws && g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c));
        }
      }
      r.expect(laws, [&] { return where(ctx, w, "group laws"); });
      for (std::size_t d = w; d <= w + 2 && power_count(ctx.q(), d) <= 100'000; ++d) {
        GroupRingElem sum(g);
        MonicStream s(ctx, d);
        while (s.next()) sum.add_basis(g->index_of(reduce(s.current(), w)), 1);
        r.expect(sum == E * BigRat(pow_int(ctx.q(), d)), [&] { return where(ctx, w, "averaging law") + " d=" + std::to_string(d); });
      }
    }

    // The J-projected products over I_i at w = 1 through degree 12.
    constexpr std::size_t kDeg = 12;
    const GroupPtr g1 = make_group(ctx, 1);
    const GroupRingElem J = idempotents(g1).j;
    const int imax = ctx.q() <= 3 ? 4 : 3;
    const auto table = irreducibles_up_to(ctx, static_cast<std::size_t>(imax));
    for (int i = 1; i <= imax; ++i) {
      GroupSeries plus(g1, kDeg), inverse(g1, kDeg);
      plus[0] = GroupRingElem::one(g1);
      inverse[0] = GroupRingElem::one(g1);
      for (const auto& f : table.of_degree(static_cast<std::size_t>(i))) {
        const std::size_t c = g1->index_of(reduce(f, 1));
        GroupSeries lin(g1, kDeg), geo(g1, kDeg);
        lin[0] = GroupRingElem::one(g1);
        lin[1] = GroupRingElem::basis(g1, c);
        for (std::size_t k = 0; k <= kDeg; ++k) geo[k] = GroupRingElem::basis(g1, g1->pow(c, k));
        plus = plus * lin;
        inverse = inverse * geo;
      }
      const TraceSplitPair pair = trace_split(q, i);
      for (std::size_t m = 0; m <= kDeg; ++m) {
        r.expect(J * plus[m] == J * a_coeff(pair, static_cast<int>(m), q),
                 [&] { return where(ctx, 1, "A-series identity") + " i=" + std::to_string(i) + " m=" + std::to_string(m); });
        r.expect(J * inverse[m] == J * b_coeff(pair, static_cast<int>(m), q),
                 [&] { return where(ctx, 1, "B-series identity") + " i=" + std::to_string(i) + " m=" + std::to_string(m); });
      }
    }
  }

  // Completeness over the criterion-1 grid.
  for (const auto& [ctx, m] : closed_form_grid()) {
    const PrimePower& q = ctx.prime_power();
    for (const auto& t : subsets_up_to(m)) {
      for (auto mode : kModes) {
        BigInt s0 = 0, s_zero = 0, s_unit = 0;
        for (const auto& key : patterns_within(t, m)) {
          const PatternSpec spec = from_key(key, mode);
          s0 += count_pattern_w0(q, m, spec);
          s_zero += count_pattern_w1(q, m, true, spec);
          s_unit += count_pattern_w1(q, m, false, spec);
        }
        r.expect(s0 == pow_int(q.q, m) && s_zero == pow_int(q.q, m - 1) && s_unit == pow_int(q.q, m - 1),
                 [&, m = m] { return "pattern completeness fails for q=" + std::to_string(q.q) + " m=" + std::to_string(m); });
      }
    }
    const BigInt traces = count_irreducible_trace(q, m, true) + (q.q - 1) * count_irreducible_trace(q, m, false);
    r.expect(traces == count_irreducible_total(q, m),
             [&, m = m] { return "trace completeness fails for q=" + std::to_string(q.q) + " m=" + std::to_string(m); });
  }
  for (std::uint32_t p : {2u, 3u}) {
    const FieldCtx ctx = FieldCtx::build(p, 1);
    const GroupPtr g = make_group(ctx, 2);
    for (int m = 1; m <= 6; ++m) {
      BigInt sum = 0;
      for (std::size_t c = 0; c < g->order(); ++c) sum += count_irreducible_general(ctx, 2, m, g->element(c).coeffs);
      r.expect(sum == count_irreducible_total(ctx.prime_power(), m),
               [&] { return "general irreducible completeness fails for q=" + std::to_string(p) + " m=" + std::to_string(m); });
    }
  }
}

void criterion_integrality(Report& r) {
  std::mt19937_64 rng(20261019);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::vector<FieldSpec> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}};
  std::vector<FieldCtx> ctxs;
  for (auto [p, e] : fields) ctxs.push_back(FieldCtx::build(p, e));

  auto random_spec = [&](int m, int max_deg) {
    PatternSpec spec;
    spec.mode = pick(0, 1) ? PatternMode::distinct : PatternMode::multiplicity;
    const int top = std::min(m, max_deg);
    for (int i = 1; i <= top; ++i) {
      if (pick(0, 2) == 0) continue;
      spec.targets[i] = pick(0, m / i);
    }
    if (spec.targets.empty()) spec.targets[pick(1, top)] = pick(0, 2);
    return spec;
  };
  auto random_prefix = [&](const FieldCtx& ctx, std::size_t w) {
    std::vector<FqElem> c;
    for (std::size_t j = 0; j < w; ++j) c.push_back(ctx.element(static_cast<std::uint32_t>(pick(0, static_cast<int>(ctx.q()) - 1))));
    return c;
  };

  constexpr int kInputs = 1000;
  for (int n = 0; n < kInputs; ++n) {
    const FieldCtx& ctx = ctxs[static_cast<std::size_t>(pick(0, static_cast<int>(ctxs.size()) - 1))];
    const PrimePower& q = ctx.prime_power();
    const int op = pick(0, 10);
    std::string what;
    BigInt value;
    try {
      switch (op) {
        case 0: {
          const int m = pick(1, 60);
          what = "count_irreducible_total m=" + std::to_string(m);
          value = count_irreducible_total(q, m);
          break;
        }
        case 1: {
          const int m = pick(1, 60);
          what = "count_irreducible_trace m=" + std::to_string(m);
          value = count_irreducible_trace(q, m, pick(0, 1));
          break;
        }
        case 2: {
          const std::size_t w = static_cast<std::size_t>(pick(0, ctx.q() <= 3 ? 4 : 2));
          const int m = pick(1, 16);
          what = "count_irreducible_general w=" + std::to_string(w) + " m=" + std::to_string(m);
          value = count_irreducible_general(ctx, w, m, random_prefix(ctx, w));
          break;
        }
        case 3: {
          const int m = pick(1, 30);
          const PatternSpec spec = random_spec(m, ctx.q() <= 3 ? 5 : 3);
          what = "count_pattern_w0 m=" + std::to_string(m) + " " + format_pattern(to_key(spec));
          value = count_pattern_w0(q, m, spec);
          break;
        }
        case 4: {
          const int m = pick(1, 30);
          const PatternSpec spec = random_spec(m, ctx.q() <= 3 ? 5 : 3);
          what = "count_pattern_w1 m=" + std::to_string(m) + " " + format_pattern(to_key(spec));
          value = count_pattern_w1(q, m, pick(0, 1), spec);
          break;
        }
        case 5: {
          const int m = pick(1, 30);
          PatternSpec spec = random_spec(m, ctx.q() <= 3 ? 5 : 3);
          std::erase_if(spec.targets, [&](const auto& kv) { return kv.first % static_cast<int>(q.p) == 0; });
          if (spec.targets.empty()) spec.targets[1] = pick(0, 2);
          what = "count_pattern_w1_special m=" + std::to_string(m) + " " + format_pattern(to_key(spec));
          value = count_pattern_w1_special(q, m, pick(0, 1), spec);
          break;
        }
        case 6: {
          const std::size_t w = static_cast<std::size_t>(pick(0, ctx.q() <= 3 ? 3 : 2));
          const int m = pick(1, ctx.q() <= 3 ? 9 : 6);
          const PatternSpec spec = random_spec(m, 3);
          what = "count_pattern_general w=" + std::to_string(w) + " m=" + std::to_string(m) + " " +
                 format_pattern(to_key(spec));
          value = count_pattern_general(ctx, w, m, random_prefix(ctx, w), spec);
          break;
        }
        case 7: {
          const int w = pick(0, 1);
          const int m = pick(1, 40);
          PatternSpec spec = random_spec(m, 2);
          if (!large_hypothesis_holds(q, w, m, spec)) spec.targets = {{1, pick(0, static_cast<int>(q.q))}};
          if (!large_hypothesis_holds(q, w, m, spec)) {
            --n;
            continue;
          }
          what = "count_large w=" + std::to_string(w) + " m=" + std::to_string(m) + " " + format_pattern(to_key(spec));
          value = count_large(q, w, m, spec);
          break;
        }
        case 8: {
          const int m = pick(1, 18);
          const int s = pick(1, m);
          what = "smooth_w0 m=" + std::to_string(m) + " n=" + std::to_string(s);
          value = smooth_w0(q, m, s, pick(0, 1) ? SmoothMethod::complement : SmoothMethod::partition);
          break;
        }
        case 9: {
          const int m = pick(1, 18);
          const int s = pick(1, m);
          what = "smooth_w1 m=" + std::to_string(m) + " n=" + std::to_string(s);
          value = smooth_w1(q, m, s, pick(0, 1), pick(0, 1) ? SmoothMethod::complement : SmoothMethod::partition);
          break;
        }
        default: {
          const int k = pick(1, 8);
          const int w = pick(0, ctx.q() <= 3 ? 3 : 2);
          std::vector<FqElem> tail = random_prefix(ctx, static_cast<std::size_t>(k + w));
          const int roots = pick(0, std::min(static_cast<int>(q.q), k + w));
          what = "rs_distance_count k=" + std::to_string(k) + " w=" + std::to_string(w) + " r=" + std::to_string(roots);
          value = rs_distance_count(ctx, k, w, FqPoly(tail), roots);
          break;
        }
      }
    } catch (const std::exception& ex) {
      r.expect(false, [&] { return "q=" + std::to_string(q.q) + " " + what + " threw: " + ex.what(); });
      continue;
    }
    r.expect(value >= 0, [&] { return "q=" + std::to_string(q.q) + " " + what + " gave " + to_decimal(value); });
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    void (*run)(Report&);
  };
  const Criterion criteria[] = {
      {1, "oracle equivalence of the w <= 1 closed forms", criterion_oracle_closed_forms},
      {2, "oracle equivalence of the general-w engine (w = 2)", criterion_oracle_general},
      {3, "smooth identities, complement vs partition", criterion_smooth},
      {4, "known values", criterion_known_values},
      {5, "large-degree consistency", criterion_large},
      {6, "structural suites", criterion_structural},
      {7, "integrality over 1000 fuzzed inputs", criterion_integrality},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Report r;
    const auto start = std::chrono::steady_clock::now();
    c.run(r);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = r.failures == 0;
    failed += ok ? 0 : 1;
    std::printf("criterion %d: %s  %s (%llu checks, %.1fs)\n", c.id, ok ? "PASS" : "FAIL", c.name,
                static_cast<unsigned long long>(r.checks), secs);
    if (!ok) {
      std::printf("  %llu failures; first: %s\n", static_cast<unsigned long long>(r.failures), r.first_failure.c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
