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

#include "polycount/group_ring.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "polycount/closed_form.hpp"
#include "polycount/errors.hpp"

namespace polycount {

GroupElem reduce(const FqPoly& f, std::size_t w) {
  GroupElem g;
  g.coeffs.reserve(w);
  for (std::size_t j = 1; j <= w; ++j) g.coeffs.push_back(f.coeff(j));
  return g;
}

GroupElem group_identity(std::size_t w) { return GroupElem{std::vector<FqElem>(w)}; }

GroupElem group_mul(const FieldCtx& ctx, const GroupElem& a, const GroupElem& b) {
  if (a.w() != b.w()) throw InputError("group_mul: elements truncated at different w");
  const std::size_t w = a.w();
  GroupElem c = group_identity(w);
  for (std::size_t k = 1; k <= w; ++k) {
    FqElem s = ctx.add(a.coeffs[k - 1], b.coeffs[k - 1]);
    for (std::size_t j = 1; j < k; ++j) s = ctx.add(s, ctx.mul(a.coeffs[j - 1], b.coeffs[k - j - 1]));
    c.coeffs[k - 1] = s;
  }
  return c;
}

GroupElem group_inv(const FieldCtx& ctx, const GroupElem& a) {
  const std::size_t w = a.w();
  GroupElem b = group_identity(w);
  for (std::size_t k = 1; k <= w; ++k) {
    FqElem s = a.coeffs[k - 1];
    for (std::size_t j = 1; j < k; ++j) s = ctx.add(s, ctx.mul(a.coeffs[j - 1], b.coeffs[k - j - 1]));
    b.coeffs[k - 1] = ctx.neg(s);
  }
  return b;
}

Group::Group(FieldCtx ctx, std::size_t w) : ctx_(std::move(ctx)), w_(w) {
  std::uint64_t order = power_count(ctx_.q(), w);
  if (order > kMaxGroupOrder) {
    throw CapacityError("group of order q^w = " + std::to_string(ctx_.q()) + "^" + std::to_string(w) +
                        " exceeds the supported " + std::to_string(kMaxGroupOrder));
  }
  order_ = static_cast<std::size_t>(order);
  std::vector<GroupElem> elems;
  elems.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) elems.push_back(element(i));
  table_.resize(order_ * order_);
  inverse_.resize(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      table_[a * order_ + b] = static_cast<std::uint32_t>(index_of(group_mul(ctx_, elems[a], elems[b])));
    }
    inverse_[a] = static_cast<std::uint32_t>(index_of(group_inv(ctx_, elems[a])));
  }
}

std::size_t Group::index_of(const GroupElem& g) const {
  if (g.w() != w_) throw InputError("group element has the wrong length");
  std::size_t idx = 0;
  for (auto c : g.coeffs) idx = idx * ctx_.q() + c.index();
  return idx;
}

GroupElem Group::element(std::size_t index) const {
  GroupElem g = group_identity(w_);
  for (std::size_t j = w_; j-- > 0;) {
    g.coeffs[j] = FqElem(static_cast<std::uint32_t>(index % ctx_.q()));
    index /= ctx_.q();
  }
  return g;
}

std::size_t Group::pow(std::size_t a, std::uint64_t k) const {
  std::size_t r = identity();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

GroupPtr make_group(const FieldCtx& ctx, std::size_t w) { return std::make_shared<const Group>(ctx, w); }

GroupRingElem::GroupRingElem(GroupPtr group) : group_(std::move(group)), coeffs_(group_->order()) {}

GroupRingElem GroupRingElem::one(GroupPtr group) { return basis(std::move(group), Group::identity()); }

GroupRingElem GroupRingElem::basis(GroupPtr group, std::size_t index, const BigRat& coeff) {
  GroupRingElem r(std::move(group));
  r.coeffs_.at(index) = coeff;
  return r;
}

bool GroupRingElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return c == 0; });
}

GroupRingElem GroupRingElem::shifted(std::size_t index) const {
  GroupRingElem r(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[group_->mul(i, index)] = coeffs_[i];
  return r;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

GroupRingElem& GroupRingElem::operator*=(const BigRat& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem r(a.group_);
  const Group& g = *a.group_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      r.coeffs_[g.mul(i, j)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

Idempotents idempotents(const GroupPtr& group) {
  GroupRingElem e(group);
  const BigRat weight = make_rat(1, static_cast<unsigned long>(group->order()));
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = weight;
  GroupRingElem j = GroupRingElem::one(group) - e;
  return {std::move(e), std::move(j)};
}

GroupSeries::GroupSeries(GroupPtr group, std::size_t max_degree)
    : group_(std::move(group)), coeffs_(max_degree + 1, GroupRingElem(group_)) {}

GroupSeries operator*(const GroupSeries& a, const GroupSeries& b) {
  const std::size_t n = std::min(a.max_degree(), b.max_degree());
  GroupSeries r(a.group_, n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

GroupSeries operator+(const GroupSeries& a, const GroupSeries& b) {
  const std::size_t n = std::min(a.max_degree(), b.max_degree());
  GroupSeries r(a.group_, n);
  for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

GroupSeries GroupSeries::times(const GroupRingElem& k) const {
  GroupSeries r(group_, max_degree());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = k * coeffs_[i];
  return r;
}

GroupSeries GroupSeries::substitute(const GroupRingElem& k) const {
  GroupSeries r(group_, max_degree());
  GroupRingElem power = GroupRingElem::one(group_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    r.coeffs_[i] = power * coeffs_[i];
    power = power * k;
  }
  return r;
}

GroupSeries GroupSeries::log() const {
  if (!(coeffs_[0] == GroupRingElem::one(group_))) {
    throw InputError("series logarithm needs constant term 1");
  }
  GroupSeries l(group_, max_degree());
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    // k L_k = k B_k - sum_{j<k} j L_j B_{k-j}
    GroupRingElem acc = coeffs_[k] * BigRat(static_cast<long>(k));
    for (std::size_t j = 1; j < k; ++j) {
      if (l.coeffs_[j].is_zero() || coeffs_[k - j].is_zero()) continue;
      acc -= (l.coeffs_[j] * coeffs_[k - j]) * BigRat(static_cast<long>(j));
    }
    l.coeffs_[k] = acc * make_rat(1, static_cast<unsigned long>(k));
  }
  return l;
}

PatternSeries::PatternSeries(GroupPtr group, int max_degree, std::vector<int> marker_caps)
    : group_(std::move(group)), max_degree_(max_degree), caps_(std::move(marker_caps)) {}

PatternSeries PatternSeries::one(GroupPtr group, int max_degree, std::vector<int> marker_caps) {
  PatternSeries s(group, max_degree, std::move(marker_caps));
  s.add_basis(0, std::vector<int>(s.caps_.size(), 0), Group::identity(), 1);
  return s;
}

bool PatternSeries::in_range(int degree, const std::vector<int>& markers) const {
  if (degree < 0 || degree > max_degree_ || markers.size() != caps_.size()) return false;
  for (std::size_t t = 0; t < caps_.size(); ++t) {
    if (markers[t] < 0 || markers[t] > caps_[t]) return false;
  }
  return true;
}

void PatternSeries::add(int degree, const std::vector<int>& markers, const GroupRingElem& c) {
  if (!in_range(degree, markers)) return;
  auto [it, inserted] = terms_.try_emplace(Key{degree, markers}, c);
  if (!inserted) it->second += c;
}

void PatternSeries::add_basis(int degree, const std::vector<int>& markers, std::size_t index, const BigRat& s) {
  if (!in_range(degree, markers)) return;
  auto [it, inserted] = terms_.try_emplace(Key{degree, markers}, group_);
  it->second.add_basis(index, s);
}

GroupRingElem PatternSeries::coefficient(int degree, const std::vector<int>& markers) const {
  auto it = terms_.find(Key{degree, markers});
  return it == terms_.end() ? GroupRingElem(group_) : it->second;
}

PatternSeries operator*(const PatternSeries& a, const PatternSeries& b) {
  PatternSeries r(a.group_, a.max_degree_, a.caps_);
  std::vector<int> markers(a.caps_.size());
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      for (std::size_t t = 0; t < markers.size(); ++t) markers[t] = ka.markers[t] + kb.markers[t];
      if (!r.in_range(ka.degree + kb.degree, markers)) continue;
      r.add(ka.degree + kb.degree, markers, ca * cb);
    }
  }
  return r;
}

PatternSeries PatternSeries::times(const std::vector<Monomial>& factor) const {
  PatternSeries r(group_, max_degree_, caps_);
  std::vector<int> markers(caps_.size());
  for (const auto& [ka, ca] : terms_) {
    for (const auto& mono : factor) {
      for (std::size_t t = 0; t < markers.size(); ++t) markers[t] = ka.markers[t] + mono.key.markers[t];
      const int degree = ka.degree + mono.key.degree;
      if (!in_range(degree, markers)) continue;
      auto [it, inserted] = r.terms_.try_emplace(Key{degree, markers}, group_);
      GroupRingElem& dst = it->second;
      for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        dst[group_->mul(i, mono.cls)] += ca[i] * mono.scalar;
      }
    }
  }
  return r;
}

std::vector<std::vector<std::uint64_t>> irreducible_class_counts(const Group& group, const IrreducibleTable& table) {
  std::vector<std::vector<std::uint64_t>> counts(table.max_degree() + 1,
                                                 std::vector<std::uint64_t>(group.order(), 0));
  for (std::size_t i = 1; i <= table.max_degree(); ++i) {
    for (const auto& g : table.of_degree(i)) ++counts[i][group.index_of(reduce(g, group.w()))];
  }
  return counts;
}

namespace {

int sign(long k) { return k % 2 == 0 ? 1 : -1; }

struct EngineInput {
  GroupPtr group;
  std::vector<std::vector<std::uint64_t>> class_counts;
  std::map<int, BigInt> irreducible_counts;  // |I_i| for i in T
};

EngineInput prepare(const FieldCtx& ctx, std::size_t w, int m, const std::vector<int>& degrees) {
  if (m < 1) throw InputError("degree m must be at least 1");
  if (degrees.empty()) throw InputError("pattern constrains no degrees");
  std::uint64_t enumeration = 0;
  for (int i : degrees) {
    if (i < 1 || i > m) throw InputError("pattern degree " + std::to_string(i) + " outside [1, m]");
    enumeration += power_count(ctx.q(), static_cast<std::size_t>(i));
    if (enumeration > kMaxPatternEnumeration) {
      throw CapacityError("sum of q^i over the pattern degrees exceeds " + std::to_string(kMaxPatternEnumeration));
    }
  }
  EngineInput in;
  in.group = make_group(ctx, w);
  const int top = *std::max_element(degrees.begin(), degrees.end());
  IrreducibleTable table = irreducibles_up_to(ctx, static_cast<std::size_t>(top));
  in.class_counts = irreducible_class_counts(*in.group, table);
  for (int i : degrees) {
    const auto& row = in.class_counts[static_cast<std::size_t>(i)];
    in.irreducible_counts.emplace(i, BigInt(static_cast<unsigned long>(std::accumulate(row.begin(), row.end(), std::uint64_t{0}))));
  }
  return in;
}

// J-side generating function before projection:
//   (sum_{d<w} sum_{f in M_d} <f> z^d) * prod_{i in T} prod_{c in G} factor_{i,c}
// where factor_{i,c} is (1 + c z^i (u_i - 1))^{n_{i,c}} (distinct) or
// ((1 - c z^i) / (1 - c z^i u_i))^{n_{i,c}} (multiplicity).
PatternSeries correction_series(const FieldCtx& ctx, const EngineInput& in, int m, const std::vector<int>& degrees,
                                PatternMode mode, const std::vector<int>& caps) {
  const Group& group = *in.group;
  const std::size_t w = group.w();
  PatternSeries acc(in.group, m, caps);
  const std::vector<int> no_markers(caps.size(), 0);
  for (std::size_t d = 0; d < w && static_cast<int>(d) <= m; ++d) {
    MonicStream s(ctx, d);
    while (s.next()) acc.add_basis(static_cast<int>(d), no_markers, group.index_of(reduce(s.current(), w)), 1);
  }

  for (std::size_t t = 0; t < degrees.size(); ++t) {
    const int i = degrees[t];
    for (std::size_t c = 0; c < group.order(); ++c) {
      const std::uint64_t n = in.class_counts[static_cast<std::size_t>(i)][c];
      if (n == 0) continue;
      std::vector<PatternSeries::Monomial> factor;
      std::vector<int> markers = no_markers;
      if (mode == PatternMode::distinct) {
        // sum_k C(n,k) c^k z^{ik} sum_r C(k,r) (-1)^{k-r} u^r
        for (std::uint64_t k = 0; k <= n && static_cast<long>(k) * i <= m; ++k) {
          const BigInt ck = binom_int(n, k);
          const std::size_t cls = group.pow(c, k);
          for (std::uint64_t r = 0; r <= k && static_cast<int>(r) <= caps[t]; ++r) {
            markers[t] = static_cast<int>(r);
            factor.push_back({{static_cast<int>(k) * i, markers}, cls,
                              BigRat(ck * binom_int(k, r) * sign(static_cast<long>(k - r)))});
          }
        }
      } else {
        // coefficient of z^{is} u^l: C(n, s-l) (-1)^{s-l} C(n+l-1, l) c^s
        for (long s = 0; s * i <= m; ++s) {
          const std::size_t cls = group.pow(c, static_cast<std::uint64_t>(s));
          for (long l = 0; l <= s && l <= caps[t]; ++l) {
            if (static_cast<std::uint64_t>(s - l) > n) continue;
            markers[t] = static_cast<int>(l);
            factor.push_back({{static_cast<int>(s) * i, markers}, cls,
                              BigRat(binom_int(n, static_cast<unsigned long>(s - l)) * sign(s - l) *
                                     binom_int(n + static_cast<std::uint64_t>(l) - 1, static_cast<unsigned long>(l)))});
          }
        }
      }
      acc = acc.times(factor);
    }
  }
  return acc;
}

}  // namespace

BigInt count_pattern_general(const FieldCtx& ctx, std::size_t w, int m, std::span<const FqElem> coeffs,
                             const PatternSpec& spec) {
  if (coeffs.size() != w) throw InputError("expected exactly w = " + std::to_string(w) + " prescribed coefficients");
  check_pattern_degrees(spec, m);
  const auto degrees = spec.degrees();
  EngineInput in = prepare(ctx, w, m, degrees);

  BigRat total = averaged_term(ctx.prime_power(), static_cast<int>(w), m, spec, in.irreducible_counts);
  if (w > 0) {
    std::vector<int> caps;
    for (const auto& [i, c] : spec.targets) caps.push_back(c);
    PatternSeries series = correction_series(ctx, in, m, degrees, spec.mode, caps);
    GroupRingElem x = series.coefficient(m, caps);
    if (!x.is_zero()) {
      GroupRingElem projected = idempotents(in.group).j * x;
      total += projected[in.group->index_of(GroupElem{{coeffs.begin(), coeffs.end()}})];
    }
  }
  return to_integer(total, "general pattern count");
}

PatternCountTable pattern_counts_general(const FieldCtx& ctx, std::size_t w, int m, const std::vector<int>& degrees,
                                         PatternMode mode) {
  EngineInput in = prepare(ctx, w, m, degrees);
  const Group& group = *in.group;
  std::vector<int> caps;
  for (int i : degrees) caps.push_back(m / i);
  const GroupRingElem j = idempotents(in.group).j;
  std::optional<PatternSeries> series;
  if (w > 0) series = correction_series(ctx, in, m, degrees, mode, caps);

  PatternCountTable out;
  for (const auto& key : patterns_within(degrees, m)) {
    PatternSpec spec = from_key(key, mode);
    const BigRat averaged = averaged_term(ctx.prime_power(), static_cast<int>(w), m, spec, in.irreducible_counts);
    GroupRingElem projected(in.group);
    if (series) {
      std::vector<int> markers;
      for (const auto& [i, c] : key) markers.push_back(c);
      GroupRingElem x = series->coefficient(m, markers);
      if (!x.is_zero()) projected = j * x;
    }
    for (std::size_t c = 0; c < group.order(); ++c) {
      out.emplace(std::make_pair(group.element(c), key), to_integer(averaged + projected[c], "general pattern count"));
    }
  }
  return out;
}

namespace {

// ln(1 + sum_{d=1}^{w-1} sum_{f in M_d} <f> z^d), truncated at z^k.
GroupSeries low_degree_log(const GroupPtr& group, int k) {
  const FieldCtx& ctx = group->field();
  GroupSeries f(group, static_cast<std::size_t>(k));
  f[0] = GroupRingElem::one(group);
  for (std::size_t d = 1; d < group->w() && static_cast<int>(d) <= k; ++d) {
    MonicStream s(ctx, d);
    while (s.next()) f[d].add_basis(group->index_of(reduce(s.current(), group->w())), 1);
  }
  return f.log();
}

std::vector<BigRat> counts_from_log(const GroupPtr& group, const GroupSeries& log, const GroupRingElem& j, int k) {
  const GroupRingElem projected = j * log[static_cast<std::size_t>(k)];
  const BigRat averaged = pow_rat(group->field().q(), k - static_cast<long>(group->w()));
  std::vector<BigRat> out(group->order());
  for (std::size_t g = 0; g < out.size(); ++g) out[g] = averaged + projected[g] * k;
  return out;
}

}  // namespace

std::vector<BigRat> log_coefficients(const GroupPtr& group, int k) {
  if (k < 1) throw InputError("log_coefficients: degree must be positive");
  return counts_from_log(group, low_degree_log(group, k), idempotents(group).j, k);
}

BigInt count_irreducible_general(const FieldCtx& ctx, std::size_t w, int m, std::span<const FqElem> coeffs) {
  if (m < 1) throw InputError("degree m must be at least 1");
  if (coeffs.size() != w) throw InputError("expected exactly w = " + std::to_string(w) + " prescribed coefficients");
  GroupPtr group = make_group(ctx, w);
  check_budget(power_count(ctx.q(), w), "low-degree class enumeration");
  const std::size_t target = group->index_of(GroupElem{{coeffs.begin(), coeffs.end()}});
  const GroupSeries log = low_degree_log(group, m);
  const GroupRingElem j = idempotents(group).j;

  BigRat sum = 0;
  for (auto k : divisors(static_cast<std::uint64_t>(m))) {
    const int mu = mobius(static_cast<std::uint64_t>(m) / k);
    if (mu == 0) continue;
    const auto n = counts_from_log(group, log, j, static_cast<int>(k));
    for (std::size_t g = 0; g < n.size(); ++g) {
      if (group->pow(g, static_cast<std::uint64_t>(m) / k) == target) sum += n[g] * mu;
    }
  }
  BigInt r = to_integer(sum / m, "I(m, <f>)");
  if (r < 0) throw IntegralityError("negative irreducible count");
  return r;
}

}  // namespace polycount
