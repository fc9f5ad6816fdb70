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

#include "polycount/closed_form.hpp"

#include <functional>
#include <string>

#include "polycount/errors.hpp"
#include "polycount/group_ring.hpp"

namespace polycount {

namespace {

using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<BigRat>;

template <class Poly>
Poly mul_trunc(const Poly& a, const Poly& b, std::size_t max_degree) {
  Poly out(std::min(a.size() + b.size() - 1, max_degree + 1));
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

template <class Poly>
auto coeff_at(const Poly& p, long d) -> typename Poly::value_type {
  if (d < 0 || static_cast<std::size_t>(d) >= p.size()) return 0;
  return p[static_cast<std::size_t>(d)];
}

int sign(long k) { return k % 2 == 0 ? 1 : -1; }

void check_degree(int m, const char* what) {
  if (m < 1) throw InputError(std::string(what) + ": degree must be at least 1");
}

// sum_{k | m, p does (not) divide k} mu(k) q^{m/k}
BigInt restricted_mobius_sum(const PrimePower& q, int m, bool p_divides) {
  BigInt s = 0;
  for (auto k : divisors(static_cast<std::uint64_t>(m))) {
    if ((k % q.p == 0) != p_divides) continue;
    int mu = mobius(k);
    if (mu == 0) continue;
    s += mu * pow_int(q.q, m / k);
  }
  return s;
}

std::map<int, BigInt> irreducible_counts(const PrimePower& q, const std::vector<int>& degrees) {
  std::map<int, BigInt> out;
  for (int i : degrees) out.emplace(i, count_irreducible_total(q, i));
  return out;
}

BigRat v_over_q(const PrimePower& q, bool alpha_is_zero) {
  return make_rat(alpha_is_zero ? BigInt(q.q - 1) : BigInt(-1), q.q);
}

// Sum over (l_1, ..., l_n) with sum i*l_i = m of prod term(i, l_i). Descends
// from part size n to 1, largest part first; part size 1 takes the remainder.
BigRat sum_over_partitions(int m, int n, const std::function<BigRat(int, int)>& term) {
  std::function<BigRat(int, int)> rec = [&](int part, int remaining) -> BigRat {
    if (remaining == 0) {
      BigRat p = 1;
      for (int i = part; i >= 1; --i) p *= term(i, 0);
      return p;
    }
    if (part == 1) return term(1, remaining);
    BigRat s = 0;
    for (int l = 0; l * part <= remaining; ++l) {
      BigRat t = term(part, l);
      if (t == 0) continue;
      s += t * rec(part - 1, remaining - l * part);
    }
    return s;
  };
  return rec(n, m);
}

// [z^target] prod_{i in T} sum_{k} A_k(a_i, b_i) * weight(i, k) z^{i k}
BigRat j_convolution(const PrimePower& q, const std::vector<int>& degrees, int target,
                     const std::function<BigRat(int, int)>& weight) {
  if (target < 0) return 0;
  RatPoly acc{BigRat(1)};
  for (int i : degrees) {
    TraceSplitPair pair = trace_split(q, i);
    RatPoly f(static_cast<std::size_t>(target) + 1);
    for (int k = 0; k * i <= target; ++k) {
      BigRat w = weight(i, k);
      if (w == 0) continue;
      f[static_cast<std::size_t>(k * i)] = a_coeff(pair, k, q) * w;
    }
    acc = mul_trunc(acc, f, static_cast<std::size_t>(target));
  }
  return coeff_at(acc, target);
}

}  // namespace

BigInt count_irreducible_total(const PrimePower& q, int m) {
  check_degree(m, "count_irreducible_total");
  BigInt s = 0;
  for (auto k : divisors(static_cast<std::uint64_t>(m))) {
    int mu = mobius(static_cast<std::uint64_t>(m) / k);
    if (mu != 0) s += mu * pow_int(q.q, k);
  }
  BigInt r = to_integer(make_rat(s, m), "|I_m|");
  if (r <= 0) throw IntegralityError("|I_m| must be positive");
  return r;
}

BigInt count_irreducible_trace(const PrimePower& q, int m, bool beta_is_zero) {
  check_degree(m, "count_irreducible_trace");
  BigRat v = make_rat(restricted_mobius_sum(q, m, false), BigInt(m) * q.q);
  if (beta_is_zero) v += make_rat(restricted_mobius_sum(q, m, true), m);
  return to_integer(v, "I(m, <x+beta>)");
}

TraceSplitPair trace_split(const PrimePower& q, int i) {
  check_degree(i, "trace_split");
  TraceSplitPair pair{make_rat(restricted_mobius_sum(q, i, false), BigInt(i) * q.q),
                      make_rat(restricted_mobius_sum(q, i, true), i)};
  to_integer(pair.a, "a_i");
  to_integer(pair.b, "b_i");
  if (pair.a * q.q + pair.b != BigRat(count_irreducible_total(q, i))) {
    throw IntegralityError("trace split of degree " + std::to_string(i) + " does not sum to |I_i|");
  }
  return pair;
}

BigRat a_coeff(const TraceSplitPair& pair, int m, const PrimePower& q) {
  if (m < 0) throw InputError("a_coeff: negative index");
  const int p = static_cast<int>(q.p);
  const BigRat s = pair.a * make_rat(q.q, q.p);
  if (pair.b == 0) {
    if (m % p != 0) return 0;
    return binom_rat(s, static_cast<unsigned long>(m / p)) * sign(m + m / p);
  }
  BigRat sum = 0;
  for (int j = 0; j <= m / p; ++j) {
    sum += binom_rat(s, j) * binom_rat(pair.b, static_cast<unsigned long>(m - p * j)) * sign(j + p * j);
  }
  return sum;
}

BigRat b_coeff(const TraceSplitPair& pair, int m, const PrimePower& q) {
  if (m < 0) throw InputError("b_coeff: negative index");
  const int p = static_cast<int>(q.p);
  const BigRat s = pair.a * make_rat(q.q, q.p);
  if (pair.b == 0) {
    if (m % p != 0) return 0;
    return binom_rat(s + m / p - 1, static_cast<unsigned long>(m / p));
  }
  BigRat sum = 0;
  for (int j = 0; j <= m / p; ++j) {
    sum += binom_rat(s + j - 1, j) * binom_rat(pair.b + (m - p * j) - 1, static_cast<unsigned long>(m - p * j));
  }
  return sum;
}

BigRat averaged_term(const PrimePower& q, int w, int m, const PatternSpec& spec,
                     const std::map<int, BigInt>& irreducible_counts) {
  BigInt prefactor = 1;
  long weight = spec.weighted_size();
  if (weight > m) return 0;
  const auto budget = static_cast<std::size_t>(m - weight);
  IntPoly acc{BigInt(1)};
  for (const auto& [i, target] : spec.targets) {
    const BigInt& n = irreducible_counts.at(i);
    BigInt upper;
    if (spec.mode == PatternMode::distinct) {
      if (n < target) return 0;
      prefactor *= binom_int(n, static_cast<unsigned long>(target));
      upper = n - target;
    } else {
      prefactor *= binom_int(n + target - 1, static_cast<unsigned long>(target));
      upper = n;
    }
    IntPoly f(budget + 1);
    for (std::size_t j = 0; j * i <= budget && upper >= static_cast<unsigned long>(j); ++j) {
      f[j * i] = binom_int(upper, j) * sign(static_cast<long>(j));
    }
    acc = mul_trunc(acc, f, budget);
  }
  BigRat sum = 0;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] == 0) continue;
    sum += acc[k] * pow_rat(q.q, static_cast<long>(m) - w - weight - static_cast<long>(k));
  }
  return sum * prefactor;
}

BigInt count_pattern_w0(const PrimePower& q, int m, const PatternSpec& spec) {
  check_degree(m, "count_pattern_w0");
  check_pattern_degrees(spec, m);
  return to_integer(averaged_term(q, 0, m, spec, irreducible_counts(q, spec.degrees())), "N(m, pattern, 1)");
}

BigInt count_pattern_w1(const PrimePower& q, int m, bool alpha_is_zero, const PatternSpec& spec) {
  check_degree(m, "count_pattern_w1");
  check_pattern_degrees(spec, m);
  const auto degrees = spec.degrees();
  BigRat total = averaged_term(q, 1, m, spec, irreducible_counts(q, degrees));

  BigRat correction;
  if (spec.mode == PatternMode::distinct) {
    correction = j_convolution(q, degrees, m, [&](int i, int k) -> BigRat {
      int r = spec.targets.at(i);
      if (k < r) return 0;
      return BigRat(binom_int(static_cast<unsigned long>(k), static_cast<unsigned long>(r)) * sign(k - r));
    });
  } else {
    long weight = spec.weighted_size();
    if (weight <= m) {
      BigRat b_product = 1;
      for (const auto& [i, l] : spec.targets) b_product *= b_coeff(trace_split(q, i), l, q);
      if (b_product != 0) {
        correction = b_product * j_convolution(q, degrees, static_cast<int>(m - weight),
                                               [](int, int k) { return BigRat(sign(k)); });
      }
    }
  }
  total += v_over_q(q, alpha_is_zero) * correction;
  return to_integer(total, "N(m, pattern, <x+alpha>)");
}

BigInt count_pattern_w1_special(const PrimePower& q, int m, bool alpha_is_zero, const PatternSpec& spec) {
  check_degree(m, "count_pattern_w1_special");
  check_pattern_degrees(spec, m);
  const int p = static_cast<int>(q.p);
  for (const auto& [i, c] : spec.targets) {
    if (i % p == 0) {
      throw InputError("simplified trace formula needs p not dividing any degree in T; " + std::to_string(i) +
                       " is divisible by " + std::to_string(p));
    }
  }
  const auto degrees = spec.degrees();
  const auto counts = irreducible_counts(q, degrees);
  BigRat total = averaged_term(q, 1, m, spec, counts);
  if (m % p != 0) return to_integer(total, "N(m, pattern, <x+alpha>)");

  // With b_i = 0 only exponents divisible by p survive: substitute k -> p k.
  std::map<int, BigInt> reduced;  // |I_i| / p
  for (const auto& [i, n] : counts) {
    if (n % p != 0) throw IntegralityError("|I_i| not divisible by p");
    reduced.emplace(i, BigInt(n / p));
  }
  auto convolve = [&](int target, const std::function<BigRat(int, int)>& weight) {
    if (target < 0) return BigRat(0);
    RatPoly acc{BigRat(1)};
    for (int i : degrees) {
      RatPoly f(static_cast<std::size_t>(target) + 1);
      for (int k = 0; k * i <= target && reduced.at(i) >= k; ++k) {
        f[static_cast<std::size_t>(k * i)] = BigRat(binom_int(reduced.at(i), k)) * weight(i, k);
      }
      acc = mul_trunc(acc, f, static_cast<std::size_t>(target));
    }
    return coeff_at(acc, target);
  };

  BigRat correction;
  if (spec.mode == PatternMode::distinct) {
    correction = convolve(m / p, [&](int i, int k) -> BigRat {
      int r = spec.targets.at(i);
      if (p * k < r) return 0;
      return BigRat(binom_int(static_cast<unsigned long>(p * k), static_cast<unsigned long>(r)) * sign(k - r));
    });
  } else {
    bool all_divisible = true;
    for (const auto& [i, l] : spec.targets) all_divisible = all_divisible && (l % p == 0);
    if (!all_divisible) return to_integer(total, "N*(m, pattern, <x+alpha>)");
    long weight = spec.weighted_size();
    BigRat b_product = 1;
    for (const auto& [i, l] : spec.targets) {
      b_product *= binom_rat(BigRat(BigInt(reduced.at(i) + (l / p - 1))), static_cast<unsigned long>(l / p));
    }
    correction = b_product * convolve(static_cast<int>((m - weight) / p), [](int, int k) { return BigRat(sign(k)); });
  }
  total += v_over_q(q, alpha_is_zero) * correction;
  return to_integer(total, "N(m, pattern, <x+alpha>)");
}

bool large_hypothesis_holds(const PrimePower& q, int w, int m, const PatternSpec& spec) {
  BigInt lhs = 0;
  for (const auto& [i, c] : spec.targets) {
    BigInt n = count_irreducible_total(q, i);
    lhs += i * (spec.mode == PatternMode::distinct ? n : BigInt(n + c));
  }
  return lhs <= m - w;
}

BigInt count_large(const PrimePower& q, int w, int m, const PatternSpec& spec) {
  check_degree(m, "count_large");
  if (w < 0) throw InputError("count_large: w must be nonnegative");
  check_pattern_degrees(spec, m);
  if (!large_hypothesis_holds(q, w, m, spec)) {
    throw InputError("large-degree hypothesis fails for this pattern; use the general count");
  }
  BigRat v = pow_rat(q.q, m - w);
  for (const auto& [i, c] : spec.targets) {
    BigInt n = count_irreducible_total(q, i);
    const BigRat keep = 1 - pow_rat(q.q, -i);
    BigInt rest;
    if (spec.mode == PatternMode::distinct) {
      if (n < c) return 0;
      v *= BigRat(binom_int(n, static_cast<unsigned long>(c)));
      rest = n - c;
    } else {
      v *= BigRat(binom_int(n + c - 1, static_cast<unsigned long>(c)));
      rest = n;
    }
    v *= pow_rat(q.q, -static_cast<long>(i) * c);
    for (BigInt t = 0; t < rest; ++t) v *= keep;
  }
  return to_integer(v, "large-degree count");
}

const char* to_string(SmoothMethod method) {
  return method == SmoothMethod::complement ? "complement" : "partition";
}

namespace {

void check_smooth_args(int m, int n) {
  check_degree(m, "smooth count");
  if (n < 1) throw InputError("smoothness bound n must be at least 1");
}

PatternSpec forbid_above(int n, int m) {
  PatternSpec spec;
  spec.mode = PatternMode::distinct;
  for (int i = n + 1; i <= m; ++i) spec.targets.emplace(i, 0);
  return spec;
}

BigRat partition_main_term(const PrimePower& q, int m, int n) {
  std::map<int, BigInt> counts;
  for (int i = 1; i <= n; ++i) counts.emplace(i, count_irreducible_total(q, i));
  return sum_over_partitions(m, n, [&](int i, int l) {
    return BigRat(binom_int(counts.at(i) + l - 1, static_cast<unsigned long>(l)));
  });
}

}  // namespace

BigInt smooth_w0(const PrimePower& q, int m, int n, SmoothMethod method) {
  check_smooth_args(m, n);
  if (n >= m) return pow_int(q.q, m);
  if (method == SmoothMethod::complement) {
    PatternSpec spec = forbid_above(n, m);
    return to_integer(averaged_term(q, 0, m, spec, irreducible_counts(q, spec.degrees())), "smooth count");
  }
  return to_integer(partition_main_term(q, m, n), "smooth count");
}

BigInt smooth_w1(const PrimePower& q, int m, int n, bool alpha_is_zero, SmoothMethod method) {
  check_smooth_args(m, n);
  if (n >= m) return pow_int(q.q, m - 1);
  BigRat total;
  if (method == SmoothMethod::complement) {
    PatternSpec spec = forbid_above(n, m);
    const auto degrees = spec.degrees();
    total = averaged_term(q, 1, m, spec, irreducible_counts(q, degrees));
    total += v_over_q(q, alpha_is_zero) *
             j_convolution(q, degrees, m, [](int, int k) { return BigRat(sign(k)); });
  } else {
    std::map<int, TraceSplitPair> pairs;
    for (int i = 1; i <= n; ++i) pairs.emplace(i, trace_split(q, i));
    total = partition_main_term(q, m, n) / q.q;
    total += v_over_q(q, alpha_is_zero) *
             sum_over_partitions(m, n, [&](int i, int l) { return b_coeff(pairs.at(i), l, q); });
  }
  return to_integer(total, "smooth count with prescribed trace");
}

BigInt rs_distance_count(const FieldCtx& ctx, int k, int w, const FqPoly& v, int r) {
  if (k < 1) throw InputError("code dimension k must be at least 1");
  if (w < 0) throw InputError("w must be nonnegative");
  if (v.degree() != static_cast<std::size_t>(k + w)) {
    throw InputError("received polynomial has degree " + std::to_string(v.degree()) + ", expected k + w = " +
                     std::to_string(k + w));
  }
  if (r < 0 || static_cast<std::uint32_t>(r) > ctx.q()) throw InputError("root count r must lie in [0, q]");
  PatternSpec spec;
  spec.mode = PatternMode::distinct;
  spec.targets.emplace(1, r);
  const int m = k + w;
  if (w == 0) return count_pattern_w0(ctx.prime_power(), m, spec);
  if (w == 1) return count_pattern_w1(ctx.prime_power(), m, v.coeff(1).is_zero(), spec);
  std::vector<FqElem> prefix(v.tail().begin(), v.tail().begin() + w);
  return count_pattern_general(ctx, static_cast<std::size_t>(w), m, prefix, spec);
}

}  // namespace polycount
