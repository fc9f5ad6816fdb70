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

#include "polycount/field.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "polycount/errors.hpp"
#include "polycount/exact.hpp"

namespace polycount {

PrimePower PrimePower::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw InputError("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw CapacityError("field size " + std::to_string(p) + "^" + std::to_string(e) + " exceeds " +
                          std::to_string(kMaxFieldSize));
    }
  }
  return PrimePower{p, e, static_cast<std::uint32_t>(q)};
}

namespace {

// Polynomials over F_p as coefficient vectors, high degree first.
using PrimePoly = std::vector<std::uint32_t>;

// Remainder of a modulo the monic b.
PrimePoly prime_rem(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return a;
  for (std::size_t i = 0; i + db < a.size(); ++i) {
    std::uint32_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      a[i + j] = (a[i + j] + p - (c * b[j]) % p) % p;
    }
  }
  return PrimePoly(a.end() - static_cast<long>(db), a.end());
}

bool prime_irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    // every monic divisor candidate of degree k
    PrimePoly g(k + 1, 0);
    g[0] = 1;
    std::uint64_t total = power_count(p, k);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t j = k; j >= 1; --j) {
        g[j] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      PrimePoly r = prime_rem(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

PrimePoly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
  PrimePoly f(e + 1, 0);
  f[0] = 1;
  std::uint64_t total = power_count(p, e);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t j = e; j >= 1; --j) {
      f[j] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (prime_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

FieldCtx FieldCtx::build(std::uint32_t p, std::uint32_t e) {
  auto t = std::make_shared<Tables>();
  t->pp = PrimePower::make(p, e);
  const std::uint32_t q = t->pp.q;
  if (e == 1) {
    t->modulus = {1, 0};
  } else {
    t->modulus = smallest_irreducible(p, e);
  }

  // coords[idx] = (c_0, ..., c_{e-1})
  std::vector<std::vector<std::uint32_t>> coords(q, std::vector<std::uint32_t>(e));
  for (std::uint32_t idx = 0; idx < q; ++idx) {
    std::uint32_t v = idx;
    for (std::size_t j = e; j-- > 0;) {
      coords[idx][j] = v % p;
      v /= p;
    }
  }
  auto pack = [&](const std::vector<std::uint32_t>& c) {
    std::uint32_t idx = 0;
    for (std::size_t j = 0; j < e; ++j) idx = idx * p + c[j];
    return idx;
  };
  t->one = 1;
  for (std::uint32_t j = 1; j < e; ++j) t->one *= p;

  t->add.resize(static_cast<std::size_t>(q) * q);
  t->mul.resize(static_cast<std::size_t>(q) * q);
  t->neg.resize(q);
  t->inv.resize(q, 0);
  std::vector<std::uint32_t> c(e), prod(2 * e - 1);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::size_t j = 0; j < e; ++j) c[j] = (p - coords[a][j]) % p;
    t->neg[a] = static_cast<std::uint16_t>(pack(c));
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::size_t j = 0; j < e; ++j) c[j] = (coords[a][j] + coords[b][j]) % p;
      t->add[a * q + b] = static_cast<std::uint16_t>(pack(c));
      // product of the coordinate polynomials, then reduce by the modulus
      std::fill(prod.begin(), prod.end(), 0);
      for (std::size_t i = 0; i < e; ++i) {
        for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + coords[a][i] * coords[b][j]) % p;
      }
      for (std::size_t k = prod.size(); k-- > e;) {
        // y^k = y^{k-e} * y^e and y^e = -(m_{e-1} y^{e-1} + ... + m_0)
        std::uint32_t top = prod[k];
        if (top == 0) continue;
        prod[k] = 0;
        for (std::size_t j = 0; j < e; ++j) {
          // modulus is high-first: coefficient of y^j is modulus[e - j]
          std::uint32_t mj = t->modulus[e - j];
          prod[k - e + j] = (prod[k - e + j] + p - (top * mj) % p) % p;
        }
      }
      std::copy(prod.begin(), prod.begin() + e, c.begin());
      t->mul[a * q + b] = static_cast<std::uint16_t>(pack(c));
    }
  }
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (t->mul[a * q + b] == t->one) {
        t->inv[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
  return FieldCtx(std::move(t));
}

FqElem FieldCtx::element(std::uint32_t index) const {
  if (index >= q()) throw InputError("field element index out of range");
  return FqElem(index);
}

FqElem FieldCtx::inv(FqElem a) const {
  if (a.is_zero()) throw InputError("zero has no inverse");
  return FqElem(t_->inv[a.index()]);
}

FqElem FieldCtx::from_integer(long k) const {
  long r = k % static_cast<long>(p());
  if (r < 0) r += p();
  FqElem acc = zero();
  for (long i = 0; i < r; ++i) acc = add(acc, one());
  return acc;
}

std::vector<std::uint32_t> FieldCtx::coords(FqElem a) const {
  std::vector<std::uint32_t> c(e());
  std::uint32_t v = a.index();
  for (std::size_t j = e(); j-- > 0;) {
    c[j] = v % p();
    v /= p();
  }
  return c;
}

FqElem FieldCtx::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() != e()) throw InputError("element needs exactly " + std::to_string(e()) + " coordinates");
  std::uint32_t idx = 0;
  for (auto v : c) {
    if (v >= p()) throw InputError("coordinate " + std::to_string(v) + " not reduced mod " + std::to_string(p()));
    idx = idx * p() + v;
  }
  return FqElem(idx);
}

std::uint64_t power_count(std::uint64_t q, std::size_t d) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

namespace {

// Dense monic polynomial, high degree first, leading 1 at index 0 (as the packed `one`).
using Dense = std::vector<std::uint16_t>;

Dense to_dense(const FieldCtx& ctx, const FqPoly& f) {
  Dense d(f.degree() + 1);
  d[0] = static_cast<std::uint16_t>(ctx.one().index());
  for (std::size_t j = 1; j <= f.degree(); ++j) d[j] = static_cast<std::uint16_t>(f.coeff(j).index());
  return d;
}

FqPoly from_dense(const Dense& d) {
  std::vector<FqElem> tail(d.size() - 1);
  for (std::size_t j = 1; j < d.size(); ++j) tail[j - 1] = FqElem(d[j]);
  return FqPoly(std::move(tail));
}

// r <- r / g in place when g | r (g monic). `r` holds the dividend on entry; on
// success its first size(r)-deg(g) entries hold the quotient.
bool divide_dense(const FieldCtx& ctx, Dense& r, const Dense& g) {
  const std::size_t n = r.size() - 1, k = g.size() - 1;
  if (k > n) return false;
  const std::uint32_t q = ctx.q();
  const std::uint16_t* add = ctx.add_table();
  const std::uint16_t* mul = ctx.mul_table();
  const std::uint16_t* neg = ctx.neg_table();
  for (std::size_t i = 0; i + k <= n; ++i) {
    std::uint16_t c = r[i];
    if (c == 0) continue;
    std::uint16_t nc = neg[c];
    for (std::size_t j = 1; j <= k; ++j) {
      if (g[j] == 0) continue;
      r[i + j] = add[r[i + j] * q + mul[nc * q + g[j]]];
    }
  }
  for (std::size_t j = n - k + 1; j <= n; ++j) {
    if (r[j] != 0) return false;
  }
  r.resize(n - k + 1);
  return true;
}

Dense mul_dense(const FieldCtx& ctx, const Dense& a, const Dense& b) {
  const std::uint32_t q = ctx.q();
  const std::uint16_t* add = ctx.add_table();
  const std::uint16_t* mul = ctx.mul_table();
  Dense out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = add[out[i + j] * q + mul[a[i] * q + b[j]]];
    }
  }
  return out;
}

}  // namespace

FqPoly poly_mul(const FieldCtx& ctx, const FqPoly& a, const FqPoly& b) {
  return from_dense(mul_dense(ctx, to_dense(ctx, a), to_dense(ctx, b)));
}

FqPoly poly_pow(const FieldCtx& ctx, const FqPoly& a, unsigned k) {
  FqPoly r;
  for (unsigned i = 0; i < k; ++i) r = poly_mul(ctx, r, a);
  return r;
}

bool poly_divides(const FieldCtx& ctx, const FqPoly& g, const FqPoly& f, FqPoly* quotient) {
  Dense r = to_dense(ctx, f);
  if (!divide_dense(ctx, r, to_dense(ctx, g))) return false;
  if (quotient != nullptr) *quotient = from_dense(r);
  return true;
}

namespace {
std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}
}  // namespace

FqElem parse_elem(const FieldCtx& ctx, const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != ctx.e()) {
    throw InputError("element '" + text + "' needs " + std::to_string(ctx.e()) + " colon-separated residues");
  }
  std::vector<std::uint32_t> c;
  for (const auto& s : parts) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw InputError("malformed residue '" + s + "' in element '" + text + "'");
    }
    unsigned long v = std::stoul(s);
    if (v >= ctx.p()) throw InputError("residue " + s + " is not reduced mod " + std::to_string(ctx.p()));
    c.push_back(static_cast<std::uint32_t>(v));
  }
  return ctx.from_coords(c);
}

std::string format_elem(const FieldCtx& ctx, FqElem a) {
  std::string out;
  for (auto v : ctx.coords(a)) {
    if (!out.empty()) out += ':';
    out += std::to_string(v);
  }
  return out;
}

std::vector<FqElem> parse_elem_list(const FieldCtx& ctx, const std::string& text) {
  std::vector<FqElem> out;
  if (text.empty()) return out;
  for (const auto& s : split(text, ',')) out.push_back(parse_elem(ctx, s));
  return out;
}

std::string format_elem_list(const FieldCtx& ctx, std::span<const FqElem> elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) out += ',';
    out += format_elem(ctx, elems[i]);
  }
  return out;
}

FqPoly parse_poly(const FieldCtx& ctx, const std::string& text) {
  auto elems = parse_elem_list(ctx, text);
  if (elems.empty()) throw InputError("empty polynomial");
  if (elems.front() != ctx.one()) throw InputError("polynomial '" + text + "' is not monic");
  return FqPoly(std::vector<FqElem>(elems.begin() + 1, elems.end()));
}

std::string format_poly(const FieldCtx& ctx, const FqPoly& f) {
  std::vector<FqElem> all{ctx.one()};
  all.insert(all.end(), f.tail().begin(), f.tail().end());
  return format_elem_list(ctx, all);
}

std::uint64_t monic_rank(const FieldCtx& ctx, const FqPoly& f) {
  std::uint64_t r = 0;
  for (auto c : f.tail()) r = r * ctx.q() + c.index();
  return r;
}

MonicStream::MonicStream(const FieldCtx& ctx, std::size_t d, std::span<const FqElem> prefix)
    : q_(ctx.q()), fixed_(prefix.size()) {
  if (prefix.size() > d) throw InputError("prefix longer than the polynomial degree");
  size_ = power_count(q_, d - prefix.size());
  check_budget(size_, "monic enumeration of degree " + std::to_string(d));
  cur_.tail_.assign(d, FqElem());
  std::copy(prefix.begin(), prefix.end(), cur_.tail_.begin());
}

bool MonicStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  auto& t = cur_.tail_;
  for (std::size_t j = t.size(); j-- > fixed_;) {
    if (t[j].index() + 1 < q_) {
      t[j] = FqElem(t[j].index() + 1);
      return true;
    }
    t[j] = FqElem(0);
  }
  done_ = true;
  return false;
}

std::vector<FqPoly> enumerate_monic(const FieldCtx& ctx, std::size_t d) {
  MonicStream s(ctx, d);
  std::vector<FqPoly> out;
  out.reserve(s.size());
  while (s.next()) out.push_back(s.current());
  return out;
}

const std::vector<FqPoly>& IrreducibleTable::of_degree(std::size_t d) const {
  if (d < 1 || d > max_degree()) {
    throw InputError("irreducible table has no degree " + std::to_string(d));
  }
  return by_degree_[d];
}

IrreducibleTable irreducibles_up_to(const FieldCtx& ctx, std::size_t max_degree) {
  if (max_degree < 1) throw InputError("irreducibles_up_to needs a positive degree");
  std::uint64_t total = 0;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::uint64_t c = power_count(ctx.q(), d);
    total = c > std::numeric_limits<std::uint64_t>::max() - total ? c : total + c;
  }
  check_budget(total, "irreducible sieve up to degree " + std::to_string(max_degree));

  const std::uint64_t q = ctx.q();
  std::vector<std::vector<FqPoly>> by_degree(max_degree + 1);
  std::vector<std::vector<Dense>> dense(max_degree + 1);
  for (std::size_t d = 1; d <= max_degree; ++d) {
    // f is reducible iff some g in I_k, k <= d/2, divides it, i.e. f = g*h with h monic of degree d-k.
    std::vector<char> composite(power_count(q, d), 0);
    for (std::size_t k = 1; 2 * k <= d; ++k) {
      MonicStream hs(ctx, d - k);
      while (hs.next()) {
        Dense h = to_dense(ctx, hs.current());
        for (const auto& g : dense[k]) {
          Dense prod = mul_dense(ctx, g, h);
          std::uint64_t rank = 0;
          for (std::size_t j = 1; j < prod.size(); ++j) rank = rank * q + prod[j];
          composite[rank] = 1;
        }
      }
    }
    MonicStream fs(ctx, d);
    std::uint64_t rank = 0;
    while (fs.next()) {
      if (!composite[rank]) {
        by_degree[d].push_back(fs.current());
        dense[d].push_back(to_dense(ctx, fs.current()));
      }
      ++rank;
    }
  }
  return IrreducibleTable(std::move(by_degree));
}

Factorization factor(const FieldCtx& ctx, const FqPoly& f) {
  if (f.degree() < 1) throw InputError("cannot factor a constant polynomial");
  return factor(ctx, irreducibles_up_to(ctx, std::max<std::size_t>(1, f.degree() / 2)), f);
}

Factorization factor(const FieldCtx& ctx, const IrreducibleTable& table, const FqPoly& f) {
  if (f.degree() < 1) throw InputError("cannot factor a constant polynomial");
  if (2 * table.max_degree() + 1 < f.degree()) {
    throw InputError("irreducible table too small to factor degree " + std::to_string(f.degree()));
  }
  Factorization out;
  Dense rem = to_dense(ctx, f);
  Dense trial;
  for (std::size_t k = 1; k <= table.max_degree() && 2 * k <= rem.size() - 1; ++k) {
    for (const auto& g : table.of_degree(k)) {
      if (rem.size() - 1 < k) break;
      Dense gd = to_dense(ctx, g);
      unsigned mult = 0;
      for (;;) {
        trial = rem;
        if (!divide_dense(ctx, trial, gd)) break;
        rem.swap(trial);
        ++mult;
      }
      if (mult > 0) out.push_back({g, mult});
    }
  }
  // Whatever survives has no factor of degree <= deg/2, so it is irreducible.
  if (rem.size() > 1) {
    FqPoly last = from_dense(rem);
    std::size_t d = last.degree();
    auto it = std::find_if(out.begin(), out.end(), [&](const Factor& fa) { return fa.poly.degree() > d; });
    out.insert(it, Factor{std::move(last), 1});
  }
  return out;
}

FqPoly expand(const FieldCtx& ctx, const Factorization& fact) {
  FqPoly r;
  for (const auto& fa : fact) r = poly_mul(ctx, r, poly_pow(ctx, fa.poly, fa.multiplicity));
  return r;
}

std::map<int, int> pattern_of(const Factorization& fact, const std::set<int>& degrees, PatternMode mode) {
  std::map<int, int> out;
  for (int i : degrees) out[i] = 0;
  for (const auto& fa : fact) {
    auto it = out.find(static_cast<int>(fa.poly.degree()));
    if (it == out.end()) continue;
    it->second += mode == PatternMode::distinct ? 1 : static_cast<int>(fa.multiplicity);
  }
  return out;
}

}  // namespace polycount
