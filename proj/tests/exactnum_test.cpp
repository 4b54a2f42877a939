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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace plconj {
namespace {

TEST(Dyadic, CanonicalForm) {
  Dyadic a(Int(12), 4);
  EXPECT_EQ(a.num(), 3);
  EXPECT_EQ(a.exp(), 2);
  Dyadic z(Int(0), 7);
  EXPECT_EQ(z.exp(), 0);
  EXPECT_EQ(Dyadic(Int(2), 2), Dyadic(Int(1), 1));
  EXPECT_EQ(Dyadic(8).exp(), -3);
}

TEST(Dyadic, TextRoundTrip) {
  for (const char* s : {"0", "1", "-3", "1/2", "3/4", "-5/1024", "12"}) {
    EXPECT_EQ(parse_dyadic(s).to_string(), s);
  }
  EXPECT_EQ(parse_dyadic("3/2^4").to_string(), "3/16");
  EXPECT_EQ(parse_dyadic("6/16").to_string(), "3/8");
  EXPECT_THROW(parse_dyadic("1/3"), std::invalid_argument);
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rat("x"), std::invalid_argument);
}

TEST(Dyadic, OrderAndMixedComparison) {
  EXPECT_LT(parse_dyadic("1/4"), parse_dyadic("3/8"));
  EXPECT_LT(parse_dyadic("-1/2"), Dyadic(0));
  EXPECT_LT(parse_dyadic("1/4"), Rat(1, 3));
  EXPECT_GT(parse_dyadic("1/2"), Rat(1, 3));
  EXPECT_TRUE(parse_dyadic("1/2") == Rat(1, 2));
}

TEST(Dyadic, RatioPow2) {
  auto r = Dyadic::ratio_pow2(parse_dyadic("3/8"), parse_dyadic("3/2"));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->exp, -2);
  EXPECT_FALSE(Dyadic::ratio_pow2(parse_dyadic("3/8"), parse_dyadic("1/2")));
  EXPECT_FALSE(Dyadic::ratio_pow2(parse_dyadic("-1/2"), parse_dyadic("1/2")));
}

TEST(Dyadic, ExactArithmeticRandomized) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<std::int64_t> ex(-40, 40);
  for (int i = 0; i < 2000; ++i) {
    Dyadic a(Int(num(rng)), ex(rng));
    Dyadic b(Int(num(rng)), ex(rng));
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ((a + b).to_rat(), a.to_rat() + b.to_rat());
    EXPECT_EQ((a * b).to_rat(), a.to_rat() * b.to_rat());
    EXPECT_EQ(a < b, a.to_rat() < b.to_rat());
    if (!b.is_zero()) {
      Rat q = (a * b).to_rat() / b.to_rat();
      EXPECT_EQ(q, a.to_rat());
    }
    EXPECT_EQ(Dyadic::from_rat(a.to_rat()), a);
  }
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose(Rat(3, 17)), (OddDecomposition{0, Int(3), Int(17)}));
  EXPECT_EQ(decompose(Rat(12, 17)), (OddDecomposition{2, Int(3), Int(17)}));
  EXPECT_EQ(decompose(Rat(5, 8)), (OddDecomposition{-3, Int(5), Int(1)}));
  EXPECT_THROW(decompose(Rat(0)), std::out_of_range);
  EXPECT_THROW(decompose(Rat(1)), std::out_of_range);
  EXPECT_THROW(decompose(Rat(3, 2)), std::out_of_range);
}

TEST(Decompose, RecombinesExactly) {
  for (long q = 2; q < 120; ++q) {
    for (long p = 1; p < q; ++p) {
      Rat a(p, q);
      a.canonicalize();
      OddDecomposition d = decompose(a);
      EXPECT_TRUE(mpz_odd_p(d.m.get_mpz_t()));
      EXPECT_TRUE(mpz_odd_p(d.n.get_mpz_t()));
      EXPECT_EQ(gcd(d.m, d.n), 1);
      EXPECT_EQ(pow2_rat(d.t) * Rat(d.m, d.n), a);
    }
  }
}

TEST(Order2Mod, Examples) {
  EXPECT_EQ(order2mod(Int(1)), 1);
  EXPECT_EQ(order2mod(Int(17)), 8);
  EXPECT_EQ(order2mod(Int(7)), 3);
  EXPECT_THROW(order2mod(Int(4)), std::invalid_argument);
  EXPECT_THROW(order2mod(Int(-3)), std::invalid_argument);
}

TEST(SolveExponent, Examples) {
  EXPECT_EQ(solve_exponent(Int(1), Int(13), Int(17)), Int(6));
  EXPECT_EQ(solve_exponent(Int(1), Int(3), Int(17)), std::nullopt);
  EXPECT_EQ(solve_exponent(Int(5), Int(5), Int(9)), Int(0));
  EXPECT_THROW(solve_exponent(Int(3), Int(1), Int(9)), std::invalid_argument);
}

// Independent oracle: walk the multiplicative orbit of m under doubling.
TEST(SolveExponent, MatchesBruteForceForSmallModuli) {
  for (long n = 1; n <= 99; n += 2) {
    for (long m = 1; m < 2 * n; m += 2) {
      if (std::gcd(m, n) != 1) continue;
      for (long u = 1; u < 2 * n; u += 2) {
        if (std::gcd(u, n) != 1) continue;
        long best = -1;
        long cur = m % n;
        for (long r = 0; r <= n; ++r) {
          if (cur == u % n) {
            best = r;
            break;
          }
          cur = (cur * 2) % n;
        }
        auto got = solve_exponent(Int(m), Int(u), Int(n));
        if (best < 0) {
          EXPECT_FALSE(got) << m << " " << u << " " << n;
        } else {
          ASSERT_TRUE(got) << m << " " << u << " " << n;
          EXPECT_EQ(*got, best);
          EXPECT_LT(*got, order2mod(Int(n)));
        }
      }
    }
  }
}

TEST(Pow2, Algebra) {
  Pow2 a{3}, b{-5};
  EXPECT_EQ((a * b).exp, -2);
  EXPECT_EQ((a / b).exp, 8);
  EXPECT_EQ(a.pow(-2).exp, -6);
  EXPECT_EQ(b.to_rat(), Rat(1, 32));
  EXPECT_EQ(as_pow2(Rat(1, 32)), b);
  EXPECT_EQ(as_pow2(Rat(3, 32)), std::nullopt);
  EXPECT_EQ(as_pow2(Rat(8)), a);
}

}  // namespace
}  // namespace plconj
