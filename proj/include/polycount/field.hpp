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

/// Finite fields F_{p^e}, monic polynomials over them, the sieve of monic
/// irreducibles, and factorization by trial division.
///
/// Elements are stored as a packed index in [0, q). The index of the element
/// with polynomial-basis coordinates (c_0, ..., c_{e-1}) is
/// c_0 p^{e-1} + c_1 p^{e-2} + ... + c_{e-1}, so comparing indices compares the
/// coordinate tuples lexicographically, low coordinate first.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "polycount/pattern.hpp"

namespace polycount {

struct PrimePower {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::uint32_t q = 2;

  /// Validates that p is prime, e >= 1 and q = p^e <= kMaxFieldSize.
  static PrimePower make(std::uint32_t p, std::uint32_t e);

  bool operator==(const PrimePower&) const = default;
};

inline constexpr std::uint32_t kMaxFieldSize = 1000;

class FqElem {
 public:
  constexpr FqElem() = default;
  constexpr explicit FqElem(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  auto operator<=>(const FqElem&) const = default;

 private:
  std::uint32_t index_ = 0;
};

class FqPoly;

class FieldCtx {
 public:
  /// F_{p^e} modulo the lexicographically smallest monic irreducible of degree e.
  static FieldCtx build(std::uint32_t p, std::uint32_t e);

  const PrimePower& prime_power() const { return t_->pp; }
  std::uint32_t p() const { return t_->pp.p; }
  std::uint32_t e() const { return t_->pp.e; }
  std::uint32_t q() const { return t_->pp.q; }

  /// Defining polynomial over F_p, high degree first, leading 1 included.
  /// For e = 1 this is the formal polynomial y.
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }

  FqElem zero() const { return FqElem(0); }
  FqElem one() const { return FqElem(t_->one); }
  FqElem element(std::uint32_t index) const;

  FqElem add(FqElem a, FqElem b) const { return FqElem(t_->add[a.index() * q() + b.index()]); }
  FqElem mul(FqElem a, FqElem b) const { return FqElem(t_->mul[a.index() * q() + b.index()]); }
  FqElem neg(FqElem a) const { return FqElem(t_->neg[a.index()]); }
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  /// Throws InputError for zero.
  FqElem inv(FqElem a) const;
  /// k * 1 (reduced mod p; negative k allowed).
  FqElem from_integer(long k) const;

  std::vector<std::uint32_t> coords(FqElem a) const;
  FqElem from_coords(std::span<const std::uint32_t> coords) const;

  bool operator==(const FieldCtx& o) const { return t_ == o.t_ || (prime_power() == o.prime_power()); }

  // Raw tables for the hot loops in factorization; q*q entries, row-major.
  const std::uint16_t* add_table() const { return t_->add.data(); }
  const std::uint16_t* mul_table() const { return t_->mul.data(); }
  const std::uint16_t* neg_table() const { return t_->neg.data(); }

 private:
  struct Tables {
    PrimePower pp;
    std::vector<std::uint32_t> modulus;
    std::uint32_t one = 1;
    std::vector<std::uint16_t> add, mul, neg, inv;
  };
  explicit FieldCtx(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

/// Monic polynomial x^d + f_1 x^{d-1} + ... + f_d, stored as (f_1, ..., f_d).
class FqPoly {
 public:
  FqPoly() = default;  // the constant polynomial 1
  explicit FqPoly(std::vector<FqElem> tail) : tail_(std::move(tail)) {}

  std::size_t degree() const { return tail_.size(); }
  /// f_j for j >= 1; zero for j > degree().
  FqElem coeff(std::size_t j) const { return j >= 1 && j <= tail_.size() ? tail_[j - 1] : FqElem(); }
  const std::vector<FqElem>& tail() const { return tail_; }

  bool operator==(const FqPoly&) const = default;
  std::strong_ordering operator<=>(const FqPoly& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    return tail_ <=> o.tail_;
  }

 private:
  friend class MonicStream;
  std::vector<FqElem> tail_;
};

FqPoly poly_mul(const FieldCtx& ctx, const FqPoly& a, const FqPoly& b);
FqPoly poly_pow(const FieldCtx& ctx, const FqPoly& a, unsigned k);
/// True when g divides f; the quotient goes to *quotient when requested.
bool poly_divides(const FieldCtx& ctx, const FqPoly& g, const FqPoly& f, FqPoly* quotient = nullptr);

/// Text exchange format: coefficients from x^d down to the constant,
/// comma-separated; an element is its e coordinates c_0:c_1:...:c_{e-1}
/// ("1,0,1,1" is x^3 + x + 1 over F_2). The leading coefficient must be 1.
FqPoly parse_poly(const FieldCtx& ctx, const std::string& text);
std::string format_poly(const FieldCtx& ctx, const FqPoly& f);
FqElem parse_elem(const FieldCtx& ctx, const std::string& text);
std::string format_elem(const FieldCtx& ctx, FqElem a);
/// Comma-separated element list, e.g. the prescribed coefficients f_1..f_w.
std::vector<FqElem> parse_elem_list(const FieldCtx& ctx, const std::string& text);
std::string format_elem_list(const FieldCtx& ctx, std::span<const FqElem> elems);

/// q^d, saturating at UINT64_MAX.
std::uint64_t power_count(std::uint64_t q, std::size_t d);

/// Position of f among the monic polynomials of its degree in canonical order:
/// the base-q number f_1 f_2 ... f_d.
std::uint64_t monic_rank(const FieldCtx& ctx, const FqPoly& f);

/// Deterministic single-consumer stream over the monic polynomials of degree d
/// whose leading coefficients f_1..f_k equal `prefix`, in canonical order
/// (coefficient tuples ascending). Checks the enumeration budget on construction.
class MonicStream {
 public:
  MonicStream(const FieldCtx& ctx, std::size_t d, std::span<const FqElem> prefix = {});

  /// Advances to the next polynomial; false once exhausted.
  bool next();
  const FqPoly& current() const { return cur_; }
  std::uint64_t size() const { return size_; }

 private:
  std::uint32_t q_;
  std::size_t fixed_;
  std::uint64_t size_;
  bool started_ = false;
  bool done_ = false;
  FqPoly cur_;
};

/// All q^d monic polynomials of degree d, in canonical order.
std::vector<FqPoly> enumerate_monic(const FieldCtx& ctx, std::size_t d);

/// I_1, ..., I_D: the monic irreducibles of each degree, sorted.
class IrreducibleTable {
 public:
  IrreducibleTable() = default;
  explicit IrreducibleTable(std::vector<std::vector<FqPoly>> by_degree) : by_degree_(std::move(by_degree)) {}

  std::size_t max_degree() const { return by_degree_.empty() ? 0 : by_degree_.size() - 1; }
  /// I_d; throws InputError when d is outside [1, max_degree()].
  const std::vector<FqPoly>& of_degree(std::size_t d) const;

 private:
  std::vector<std::vector<FqPoly>> by_degree_;  // index 0 unused
};

/// Sieve: f of degree d is irreducible iff no member of I_1..I_{d/2} divides it.
IrreducibleTable irreducibles_up_to(const FieldCtx& ctx, std::size_t max_degree);

struct Factor {
  FqPoly poly;
  unsigned multiplicity = 1;
  bool operator==(const Factor&) const = default;
};

/// Distinct monic irreducibles with multiplicities, sorted by (degree, coefficients).
using Factorization = std::vector<Factor>;

/// Complete factorization by trial division in degree order. Throws InputError
/// for a constant polynomial.
Factorization factor(const FieldCtx& ctx, const FqPoly& f);
/// Same, reusing a table that covers at least degree d(f)/2.
Factorization factor(const FieldCtx& ctx, const IrreducibleTable& table, const FqPoly& f);

/// Product of factor^multiplicity.
FqPoly expand(const FieldCtx& ctx, const Factorization& fact);

/// r_i (distinct) or l_i (multiplicity) for each i in T; degrees outside T are ignored.
std::map<int, int> pattern_of(const Factorization& fact, const std::set<int>& degrees, PatternMode mode);

}  // namespace polycount
