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

/// Exact integer and rational arithmetic plus the small number-theoretic
/// helpers (Moebius, divisors, binomials) that every counting formula needs.
///
/// BigInt and BigRat are GMP's mpz_class and mpq_class. GMP keeps mpq values
/// canonical (lowest terms, positive denominator) after every arithmetic
/// operation; the constructors here canonicalize explicitly.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace polycount {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// num/den in lowest terms. Throws InputError on a zero denominator.
BigRat make_rat(const BigInt& num, const BigInt& den);

bool is_integer(const BigRat& x);

/// Throws IntegralityError naming `what` if x is not an integer.
BigInt to_integer(const BigRat& x, const char* what);

BigInt pow_int(const BigInt& base, unsigned long exp);

/// base^exp for any integer exponent; negative exponents give 1/base^|exp|.
BigRat pow_rat(const BigInt& base, long exp);

/// Decimal form, the only serialization counts ever get.
std::string to_decimal(const BigInt& x);
BigInt parse_decimal(const std::string& s);

bool is_prime(std::uint64_t n);

/// Moebius function. Throws InputError for n = 0.
int mobius(std::uint64_t n);

/// Divisors of n in ascending order. Throws InputError for n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// C(n, k); zero when k > n.
BigInt binom_int(const BigInt& n, unsigned long k);
BigInt binom_int(unsigned long n, unsigned long k);

/// Generalized binomial x(x-1)...(x-k+1)/k! for rational x.
BigRat binom_rat(const BigRat& x, unsigned long k);

}  // namespace polycount
