// Copyright 2026 The plconj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLCONJ_EXACTNUM_HPP_
#define PLCONJ_EXACTNUM_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace plconj {

// Exact rational in lowest terms with positive denominator. GMP keeps
// mpq_class canonical across arithmetic; parse_rat() canonicalizes input.
using Rat = mpq_class;
using Int = mpz_class;

// A power of two, 2^exp. Slopes of PL_2 maps are always of this form.
struct Pow2 {
  std::int64_t exp = 0;

  static Pow2 one() { return Pow2{0}; }

  Pow2 operator*(Pow2 o) const { return Pow2{exp + o.exp}; }
  Pow2 operator/(Pow2 o) const { return Pow2{exp - o.exp}; }
  Pow2 inverse() const { return Pow2{-exp}; }
  Pow2 pow(std::int64_t n) const { return Pow2{exp * n}; }
  bool is_one() const { return exp == 0; }

  Rat to_rat() const;
  friend auto operator<=>(const Pow2&, const Pow2&) = default;
};

// Element of Z[1/2]: num / 2^exp, canonical when num is odd or num == exp == 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v);  // NOLINT(google-explicit-constructor)
  Dyadic(Int num, std::int64_t exp);

  const Int& num() const { return num_; }
  std::int64_t exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }
  bool is_integer() const { return exp_ <= 0; }

  Rat to_rat() const;
  // Exact conversion; nullopt when the denominator is not a power of two.
  static std::optional<Dyadic> from_rat(const Rat& r);

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  Dyadic operator*(const Dyadic& o) const;
  Dyadic operator*(Pow2 p) const { return Dyadic(num_, exp_ - p.exp); }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  // Midpoint (a + b) / 2.
  static Dyadic midpoint(const Dyadic& a, const Dyadic& b);

  // a / b when it is a power of two (both must be positive).
  static std::optional<Pow2> ratio_pow2(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Rat& b);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Rat& b);

  std::string to_string() const;

 private:
  void normalize();

  Int num_ = 0;
  std::int64_t exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);
std::ostream& operator<<(std::ostream& os, Pow2 p);

std::string to_string(const Rat& r);

// Parses "p/q", "p" or "p/2^e". Throws std::invalid_argument on malformed
// text or a zero denominator.
Rat parse_rat(std::string_view text);
// As parse_rat, but additionally requires a power-of-two denominator.
Dyadic parse_dyadic(std::string_view text);

bool is_dyadic(const Rat& r);
// 2^e as a rational (e may be negative).
Rat pow2_rat(std::int64_t e);
// Exponent e when r == 2^e.
std::optional<Pow2> as_pow2(const Rat& r);

// a = 2^t * m / n with m, n odd and n > 0.
struct OddDecomposition {
  std::int64_t t = 0;
  Int m;
  Int n;
  friend bool operator==(const OddDecomposition&, const OddDecomposition&) = default;
};

// Decomposition of a rational in the open unit interval. Throws
// std::out_of_range otherwise.
OddDecomposition decompose(const Rat& a);
// Same decomposition for any nonzero rational.
OddDecomposition odd_decompose(const Rat& a);

// Least k >= 1 with 2^k == 1 (mod n); requires odd n >= 1.
Int order2mod(const Int& n);

// Least R in [0, order2mod(n)) with u == 2^R m (mod n). Requires
// gcd(m, n) == gcd(u, n) == 1, otherwise throws std::invalid_argument.
std::optional<Int> solve_exponent(const Int& m, const Int& u, const Int& n);

}  // namespace plconj

#endif  // PLCONJ_EXACTNUM_HPP_
