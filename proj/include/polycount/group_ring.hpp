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

/// The general-w engine.
///
/// G is the group of reversed polynomials truncated mod x^{w+1}: the class of a
/// monic f is <f>_w = 1 + f_1 x + ... + f_w x^w, and <f><g> = <fg>. Counting
/// polynomials with prescribed f_1..f_w and factorization pattern reduces to
/// coefficient extraction from generating functions with coefficients in the
/// rational group algebra Q[G], split by the idempotents E (uniform average
/// over G) and J = 1 - E.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "polycount/exact.hpp"
#include "polycount/field.hpp"
#include "polycount/pattern.hpp"

namespace polycount {

/// 1 + c_1 x + ... + c_w x^w mod x^{w+1}, stored as (c_1, ..., c_w).
struct GroupElem {
  std::vector<FqElem> coeffs;

  std::size_t w() const { return coeffs.size(); }
  auto operator<=>(const GroupElem&) const = default;
};

/// <f>_w, reading f_j = 0 past the degree of f.
GroupElem reduce(const FqPoly& f, std::size_t w);
GroupElem group_identity(std::size_t w);
/// Truncated product. Throws InputError when the two w differ.
GroupElem group_mul(const FieldCtx& ctx, const GroupElem& a, const GroupElem& b);
/// Truncated power-series inverse.
GroupElem group_inv(const FieldCtx& ctx, const GroupElem& a);

/// Largest |G| = q^w the engine accepts.
inline constexpr std::uint64_t kMaxGroupOrder = 256;
/// Largest sum over i in T of q^i the pattern engine accepts.
inline constexpr std::uint64_t kMaxPatternEnumeration = 1'000'000;

/// G with precomputed multiplication, indexed 0..q^w-1 in canonical order
/// (coefficient tuples ascending, so index 0 is the identity).
class Group {
 public:
  Group(FieldCtx ctx, std::size_t w);

  const FieldCtx& field() const { return ctx_; }
  std::size_t w() const { return w_; }
  std::size_t order() const { return order_; }
  static constexpr std::size_t identity() { return 0; }

  std::size_t index_of(const GroupElem& g) const;
  GroupElem element(std::size_t index) const;
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t pow(std::size_t a, std::uint64_t k) const;

 private:
  FieldCtx ctx_;
  std::size_t w_;
  std::size_t order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Throws CapacityError when q^w exceeds kMaxGroupOrder.
GroupPtr make_group(const FieldCtx& ctx, std::size_t w);

/// Element of Q[G]: a dense rational vector over G, multiplied by convolution.
class GroupRingElem {
 public:
  explicit GroupRingElem(GroupPtr group);

  static GroupRingElem zero(GroupPtr group) { return GroupRingElem(std::move(group)); }
  static GroupRingElem one(GroupPtr group);
  static GroupRingElem basis(GroupPtr group, std::size_t index, const BigRat& coeff = 1);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return coeffs_.size(); }
  const BigRat& operator[](std::size_t index) const { return coeffs_[index]; }
  BigRat& operator[](std::size_t index) { return coeffs_[index]; }
  const BigRat& coeff(const GroupElem& g) const { return coeffs_[group_->index_of(g)]; }
  bool is_zero() const;
  /// this * <index>: a permutation of the coordinates.
  GroupRingElem shifted(std::size_t index) const;

  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  GroupRingElem& operator*=(const BigRat& s);
  /// a + s * (basis element at index), without building the basis element.
  void add_basis(std::size_t index, const BigRat& s) { coeffs_[index] += s; }

  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(GroupRingElem a, const BigRat& s) { return a *= s; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) { return a.coeffs_ == b.coeffs_; }

 private:
  GroupPtr group_;
  std::vector<BigRat> coeffs_;
};

struct Idempotents {
  GroupRingElem e;  // (1/q^w) sum of all classes
  GroupRingElem j;  // 1 - e
};

Idempotents idempotents(const GroupPtr& group);

/// Truncated power series in z with Q[G] coefficients.
class GroupSeries {
 public:
  GroupSeries(GroupPtr group, std::size_t max_degree);

  std::size_t max_degree() const { return coeffs_.size() - 1; }
  const GroupPtr& group() const { return group_; }
  GroupRingElem& operator[](std::size_t d) { return coeffs_[d]; }
  const GroupRingElem& operator[](std::size_t d) const { return coeffs_[d]; }

  friend GroupSeries operator*(const GroupSeries& a, const GroupSeries& b);
  friend GroupSeries operator+(const GroupSeries& a, const GroupSeries& b);
  friend bool operator==(const GroupSeries& a, const GroupSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// K * A(z): every coefficient multiplied by k.
  GroupSeries times(const GroupRingElem& k) const;
  /// A(K z): coefficient d multiplied by K^d.
  GroupSeries substitute(const GroupRingElem& k) const;
  /// ln A(z); the constant term must be the identity 1.
  GroupSeries log() const;

 private:
  GroupPtr group_;
  std::vector<GroupRingElem> coeffs_;
};

/// Truncated series in z and pattern markers u_i with Q[G] coefficients.
/// Terms beyond z^max_degree or beyond a marker's cap are discarded.
class PatternSeries {
 public:
  struct Key {
    int degree = 0;
    std::vector<int> markers;
    auto operator<=>(const Key&) const = default;
  };

  PatternSeries(GroupPtr group, int max_degree, std::vector<int> marker_caps);

  static PatternSeries one(GroupPtr group, int max_degree, std::vector<int> marker_caps);

  /// Adds c to the coefficient of z^degree * prod u_t^markers[t].
  void add(int degree, const std::vector<int>& markers, const GroupRingElem& c);
  /// Adds s * <index> to the same coefficient.
  void add_basis(int degree, const std::vector<int>& markers, std::size_t index, const BigRat& s);

  /// Coefficient at the key, zero when absent.
  GroupRingElem coefficient(int degree, const std::vector<int>& markers) const;
  const std::map<Key, GroupRingElem>& terms() const { return terms_; }
  int max_degree() const { return max_degree_; }
  const std::vector<int>& marker_caps() const { return caps_; }

  friend PatternSeries operator*(const PatternSeries& a, const PatternSeries& b);

  /// A term s * <cls> * z^degree * prod u^markers.
  struct Monomial {
    Key key;
    std::size_t cls = 0;
    BigRat scalar;
  };
  /// Product with a sparse factor whose terms are single scaled classes;
  /// O(|G|) per term pair instead of a full convolution.
  PatternSeries times(const std::vector<Monomial>& factor) const;

 private:
  bool in_range(int degree, const std::vector<int>& markers) const;

  GroupPtr group_;
  int max_degree_;
  std::vector<int> caps_;
  std::map<Key, GroupRingElem> terms_;
};

/// n_{i,c}: number of degree-i monic irreducibles in each class c, indexed
/// [i][class index] for i = 1..max_degree.
std::vector<std::vector<std::uint64_t>> irreducible_class_counts(const Group& group, const IrreducibleTable& table);

/// Counts keyed by (class, pattern).
using PatternCountTable = std::map<std::pair<GroupElem, PatternKey>, BigInt>;

/// Number of degree-m monic polynomials with leading coefficients f_1..f_w =
/// `coeffs` and the prescribed factorization pattern, for any w >= 0.
BigInt count_pattern_general(const FieldCtx& ctx, std::size_t w, int m, std::span<const FqElem> coeffs,
                             const PatternSpec& spec);

/// The same counts for every class in G and every pattern over `degrees` with
/// sum i * c_i <= m, from a single series expansion.
PatternCountTable pattern_counts_general(const FieldCtx& ctx, std::size_t w, int m, const std::vector<int>& degrees,
                                         PatternMode mode);

/// N(k, <g>) = k [<g> z^k] ln F(z) for every class g, where F is the
/// generating function of all monic polynomials: returns [class index] -> value.
std::vector<BigRat> log_coefficients(const GroupPtr& group, int k);

/// Number of monic irreducibles of degree m with leading coefficients `coeffs`,
/// by Moebius inversion over N(k, <g>) for k | m.
BigInt count_irreducible_general(const FieldCtx& ctx, std::size_t w, int m, std::span<const FqElem> coeffs);

}  // namespace polycount
