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

// Test-only brute force that shares nothing with the library's sieve or
// trial-division factorizer: irreducibility by testing every monic divisor,
// roots by evaluation.

#include <map>
#include <set>

#include "polycount/field.hpp"

namespace naive {

using namespace polycount;

inline FqElem eval(const FieldCtx& ctx, const FqPoly& f, FqElem a) {
  FqElem acc = ctx.one();
  for (auto c : f.tail()) acc = ctx.add(ctx.mul(acc, a), c);
  return acc;
}

inline int distinct_roots(const FieldCtx& ctx, const FqPoly& f) {
  int r = 0;
  for (std::uint32_t i = 0; i < ctx.q(); ++i) r += eval(ctx, f, ctx.element(i)).is_zero();
  return r;
}

inline bool irreducible(const FieldCtx& ctx, const FqPoly& f) {
  if (f.degree() == 0) return false;
  for (std::size_t d = 1; 2 * d <= f.degree(); ++d) {
    for (const auto& g : enumerate_monic(ctx, d)) {
      if (poly_divides(ctx, g, f)) return false;
    }
  }
  return true;
}

/// degree -> (distinct count, count with multiplicity), over every degree present.
inline std::map<int, std::pair<int, int>> degree_profile(const FieldCtx& ctx, FqPoly f) {
  std::map<int, std::pair<int, int>> out;
  for (std::size_t d = 1; d <= f.degree(); ++d) {
    for (const auto& g : enumerate_monic(ctx, d)) {
      if (g.degree() > f.degree()) break;
      if (!irreducible(ctx, g)) continue;
      int mult = 0;
      FqPoly quot;
      while (f.degree() >= g.degree() && poly_divides(ctx, g, f, &quot)) {
        f = quot;
        ++mult;
      }
      if (mult > 0) {
        out[static_cast<int>(d)].first += 1;
        out[static_cast<int>(d)].second += mult;
      }
    }
  }
  return out;
}

}  // namespace naive
