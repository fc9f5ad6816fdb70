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

/// Closed-form counts for w = 0 (no prescribed coefficients) and w = 1
/// (prescribed trace coefficient f_1), the large-degree product formulas, the
/// n-smooth counts, and the Reed-Solomon distance application.
///
/// Every function returns an exact nonnegative integer; intermediate terms are
/// rational and integrality of the final value is asserted.

#include <map>

#include "polycount/exact.hpp"
#include "polycount/field.hpp"
#include "polycount/pattern.hpp"

namespace polycount {

/// |I_m| = (1/m) sum_{k | m} mu(m/k) q^k.
BigInt count_irreducible_total(const PrimePower& q, int m);

/// Number of monic irreducibles of degree m with f_1 = beta; only whether
/// beta is zero matters.
BigInt count_irreducible_trace(const PrimePower& q, int m, bool beta_is_zero);

/// Trace distribution of the degree-i irreducibles: I(i, <x+beta>) = a for
/// beta != 0 and a + b for beta = 0.
struct TraceSplitPair {
  BigRat a;
  BigRat b;
};

TraceSplitPair trace_split(const PrimePower& q, int i);

/// A_m(a, b): coefficient of y^m in J * prod_{f in I_i} (1 + <f> y) at w = 1.
BigRat a_coeff(const TraceSplitPair& pair, int m, const PrimePower& q);
/// B_m(a, b): coefficient of y^m in J * prod_{f in I_i} 1/(1 - <f> y) at w = 1.
BigRat b_coeff(const TraceSplitPair& pair, int m, const PrimePower& q);

/// The averaged (E-projected) contribution shared by every w:
///   q^{m-w} prod_{i in T} C(|I_i|, r_i) q^{-i r_i} sum_j q^{-i j} C(|I_i| - r_i, j) (-1)^j
/// restricted to sum_i i (r_i + j_i) <= m (distinct), or the multiplicity analogue.
/// `irreducible_counts` maps each i in T to |I_i|.
BigRat averaged_term(const PrimePower& q, int w, int m, const PatternSpec& spec,
                     const std::map<int, BigInt>& irreducible_counts);

/// Degree-m monic polynomials with the prescribed factorization pattern.
BigInt count_pattern_w0(const PrimePower& q, int m, const PatternSpec& spec);

/// Same, restricted to the q^{m-1} polynomials with f_1 = alpha.
BigInt count_pattern_w1(const PrimePower& q, int m, bool alpha_is_zero, const PatternSpec& spec);

/// count_pattern_w1 through the simplified branches that hold when p does
/// not divide any degree in T (then b_i = 0 and q a_i = |I_i|). Throws
/// InputError when some degree in T is divisible by p.
BigInt count_pattern_w1_special(const PrimePower& q, int m, bool alpha_is_zero, const PatternSpec& spec);

/// Large-degree product formula. Requires sum_{i in T} i |I_i| <= m - w
/// (distinct) or sum_{i in T} i (|I_i| + l_i) <= m - w (multiplicity); throws
/// InputError otherwise, in which case the general count must be used.
BigInt count_large(const PrimePower& q, int w, int m, const PatternSpec& spec);
bool large_hypothesis_holds(const PrimePower& q, int w, int m, const PatternSpec& spec);

enum class SmoothMethod {
  complement,  // forbid every factor degree in n+1..m
  partition,   // sum over factor-degree partitions of m with parts <= n
};

const char* to_string(SmoothMethod method);

/// Monic n-smooth polynomials of degree m. n >= m gives q^m.
BigInt smooth_w0(const PrimePower& q, int m, int n, SmoothMethod method);

/// Monic n-smooth polynomials of degree m with f_1 = alpha. n >= m gives q^{m-1}.
BigInt smooth_w1(const PrimePower& q, int m, int n, bool alpha_is_zero, SmoothMethod method);

/// Codewords at distance q - r from the received word whose interpolating
/// polynomial v is monic of degree k + w: N(k + w, I_1^r, <v>_w). Uses the
/// closed forms for w <= 1 and the group-ring engine otherwise.
BigInt rs_distance_count(const FieldCtx& ctx, int k, int w, const FqPoly& v, int r);

}  // namespace polycount
