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

#include "polycount/exact.hpp"

#include <atomic>
#include <cstdlib>

#include "polycount/errors.hpp"

namespace polycount {

namespace {
std::atomic<std::uint64_t> g_budget_override{0};
}

std::uint64_t enumeration_budget() {
  if (auto b = g_budget_override.load(); b != 0) return b;
  if (const char* env = std::getenv("POLYCOUNT_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationBudget;
}

void set_enumeration_budget(std::uint64_t budget) { g_budget_override.store(budget); }

void check_budget(std::uint64_t count, const std::string& what) {
  if (count > enumeration_budget()) {
    throw CapacityError(what + ": " + std::to_string(count) + " items exceed the enumeration budget of " +
                        std::to_string(enumeration_budget()));
  }
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const BigRat& x) { return x.get_den() == 1; }

BigInt to_integer(const BigRat& x, const char* what) {
  if (!is_integer(x)) {
    throw IntegralityError(std::string(what) + " is not an integer: " + x.get_str());
  }
  return x.get_num();
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigRat pow_rat(const BigInt& base, long exp) {
  if (exp >= 0) return BigRat(pow_int(base, static_cast<unsigned long>(exp)));
  return make_rat(1, pow_int(base, static_cast<unsigned long>(-exp)));
}

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt parse_decimal(const std::string& s) {
  BigInt r;
  if (s.empty() || r.set_str(s, 10) != 0) throw InputError("not a decimal integer: '" + s + "'");
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw InputError("mobius: argument must be positive");
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw InputError("divisors: argument must be positive");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

BigInt binom_int(const BigInt& n, unsigned long k) {
  if (n < 0) throw InputError("binom_int: negative upper argument");
  if (n < k) return 0;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

BigInt binom_int(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigRat binom_rat(const BigRat& x, unsigned long k) {
  if (is_integer(x) && x >= 0) return BigRat(binom_int(x.get_num(), k));
  BigRat r = 1;
  for (unsigned long j = 0; j < k; ++j) {
    r *= x - BigRat(static_cast<long>(j));
    r /= BigRat(static_cast<long>(j + 1));
  }
  return r;
}

}  // namespace polycount
