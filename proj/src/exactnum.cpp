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

#include "plconj/exactnum.hpp"

#include <stdexcept>

namespace plconj {

namespace {

std::int64_t trailing_zeros(const Int& v) {
  return static_cast<std::int64_t>(mpz_scan1(v.get_mpz_t(), 0));
}

Int shifted(const Int& v, std::int64_t bits) {
  Int out;
  mpz_mul_2exp(out.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return out;
}

bool is_power_of_two(const Int& v) {
  return v > 0 && mpz_popcount(v.get_mpz_t()) == 1;
}

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("empty integer");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("bad digit in '" + std::string(text) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Int(digits, 10);
}

}  // namespace

Rat Pow2::to_rat() const { return pow2_rat(exp); }

Dyadic::Dyadic(long v) : num_(v), exp_(0) { normalize(); }

Dyadic::Dyadic(Int num, std::int64_t exp) : num_(std::move(num)), exp_(exp) {
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  std::int64_t tz = trailing_zeros(num_ < 0 ? Int(-num_) : num_);
  if (tz > 0) {
    mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), static_cast<mp_bitcnt_t>(tz));
    exp_ -= tz;
  }
}

Rat Dyadic::to_rat() const {
  if (exp_ <= 0) return Rat(shifted(num_, -exp_));
  Rat r(num_, shifted(Int(1), exp_));
  r.canonicalize();
  return r;
}

std::optional<Dyadic> Dyadic::from_rat(const Rat& r) {
  const Int& den = r.get_den();
  if (!is_power_of_two(den)) return std::nullopt;
  return Dyadic(r.get_num(), trailing_zeros(den));
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (exp_ >= o.exp_) return Dyadic(num_ + shifted(o.num_, exp_ - o.exp_), exp_);
  return Dyadic(shifted(num_, o.exp_ - exp_) + o.num_, o.exp_);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::midpoint(const Dyadic& a, const Dyadic& b) {
  Dyadic s = a + b;
  return Dyadic(s.num_, s.exp_ + 1);
}

std::optional<Pow2> Dyadic::ratio_pow2(const Dyadic& a, const Dyadic& b) {
  // Canonical odd numerators make the test a single comparison.
  if (a.num_ <= 0 || b.num_ <= 0 || a.num_ != b.num_) return std::nullopt;
  return Pow2{b.exp_ - a.exp_};
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (a.exp_ == b.exp_) {
    int c = cmp(a.num_, b.num_);
    return c <=> 0;
  }
  Int lhs = a.exp_ < b.exp_ ? shifted(a.num_, b.exp_ - a.exp_) : a.num_;
  Int rhs = b.exp_ < a.exp_ ? shifted(b.num_, a.exp_ - b.exp_) : b.num_;
  int c = cmp(lhs, rhs);
  return c <=> 0;
}

bool operator==(const Dyadic& a, const Rat& b) {
  auto d = Dyadic::from_rat(b);
  return d && *d == a;
}

std::strong_ordering operator<=>(const Dyadic& a, const Rat& b) {
  int c = cmp(a.to_rat(), b);
  return c <=> 0;
}

std::string Dyadic::to_string() const {
  if (exp_ <= 0) return shifted(num_, -exp_).get_str();
  return num_.get_str() + "/" + shifted(Int(1), exp_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

std::ostream& operator<<(std::ostream& os, Pow2 p) { return os << "2^" << p.exp; }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  Int den;
  if (den_text.size() > 2 && den_text.substr(0, 2) == "2^") {
    Int e = parse_int(den_text.substr(2));
    if (e < 0 || !e.fits_slong_p()) throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    den = shifted(Int(1), e.get_si());
  } else {
    den = parse_int(den_text);
  }
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Dyadic parse_dyadic(std::string_view text) {
  auto d = Dyadic::from_rat(parse_rat(text));
  if (!d) throw std::invalid_argument("not a dyadic rational: '" + std::string(text) + "'");
  return *d;
}

bool is_dyadic(const Rat& r) { return is_power_of_two(r.get_den()); }

Rat pow2_rat(std::int64_t e) {
  if (e >= 0) return Rat(shifted(Int(1), e));
  Rat r(Int(1), shifted(Int(1), -e));
  return r;
}

std::optional<Pow2> as_pow2(const Rat& r) {
  if (r.get_num() == 1 && is_power_of_two(r.get_den())) return Pow2{-trailing_zeros(r.get_den())};
  if (r.get_den() == 1 && is_power_of_two(r.get_num())) return Pow2{trailing_zeros(r.get_num())};
  return std::nullopt;
}

OddDecomposition odd_decompose(const Rat& a) {
  if (a == 0) throw std::invalid_argument("cannot decompose zero");
  OddDecomposition out;
  Int num = a.get_num();
  Int den = a.get_den();
  std::int64_t tn = trailing_zeros(num < 0 ? Int(-num) : num);
  std::int64_t td = trailing_zeros(den);
  mpz_tdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(tn));
  mpz_tdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(td));
  out.t = tn - td;
  out.m = num;
  out.n = den;
  return out;
}

OddDecomposition decompose(const Rat& a) {
  if (a <= 0 || a >= 1) throw std::out_of_range("decompose: " + to_string(a) + " not in (0,1)");
  return odd_decompose(a);
}

Int order2mod(const Int& n) {
  if (n < 1 || mpz_even_p(n.get_mpz_t()))
    throw std::invalid_argument("order2mod: modulus must be odd and positive");
  if (n == 1) return Int(1);
  Int k = 1;
  Int p = Int(2) % n;
  while (p != 1) {
    p = (p * 2) % n;
    ++k;
  }
  return k;
}

std::optional<Int> solve_exponent(const Int& m, const Int& u, const Int& n) {
  if (n < 1 || mpz_even_p(n.get_mpz_t()))
    throw std::invalid_argument("solve_exponent: modulus must be odd and positive");
  if (gcd(m, n) != 1 || gcd(u, n) != 1)
    throw std::invalid_argument("solve_exponent: arguments must be coprime to the modulus");
  Int target = u % n;
  if (target < 0) target += n;
  Int cur = m % n;
  if (cur < 0) cur += n;
  Int ord = order2mod(n);
  for (Int r = 0; r < ord; ++r) {
    if (cur == target) return r;
    cur = (cur * 2) % n;
  }
  return std::nullopt;
}

}  // namespace plconj
