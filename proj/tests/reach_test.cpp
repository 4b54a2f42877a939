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

#include "plconj/reach.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "testing.hpp"

namespace plconj {
namespace {

using testing::D;
using testing::Gen;
using testing::map_of;
using testing::R;
using testing::x0;
using testing::x1;

// Independent oracle: b = 2^s u/n is reachable from a = 2^t m/n iff u lies in
// the doubling orbit of m modulo n.
bool reachable_oracle(long p, long q, long p2, long q2) {
  auto odd_den = [](long num, long den) {
    long g = std::gcd(num, den);
    den /= g;
    while (den % 2 == 0) den /= 2;
    return den;
  };
  auto odd_num = [](long num, long den) {
    long g = std::gcd(num, den);
    num /= g;
    while (num % 2 == 0) num /= 2;
    return num;
  };
  long n = odd_den(p, q), n2 = odd_den(p2, q2);
  if (n != n2) return false;
  long m = odd_num(p, q) % n, u = odd_num(p2, q2) % n;
  long cur = m;
  for (long i = 0; i <= n; ++i) {
    if (cur == u) return true;
    cur = (cur * 2) % n;
  }
  return false;
}

TEST(CanMap, Examples) {
  EXPECT_TRUE(can_map(R("1/17"), R("13/17")));
  EXPECT_FALSE(can_map(R("1/17"), R("3/17")));
  EXPECT_TRUE(can_map(R("1/2"), R("3/4")));
  EXPECT_FALSE(can_map(R("1/2"), R("1/3")));
  EXPECT_THROW(can_map(R("0"), R("1/2")), std::invalid_argument);
  EXPECT_THROW(can_map(R("1/2"), R("1")), std::invalid_argument);
}

TEST(CanMap, AgreesWithOrbitOracle) {
  for (long q = 2; q <= 40; ++q) {
    for (long p = 1; p < q; ++p) {
      for (long p2 = 1; p2 < q; ++p2) {
        Rat a(p, q), b(p2, q);
        a.canonicalize();
        b.canonicalize();
        EXPECT_EQ(can_map(a, b), reachable_oracle(p, q, p2, q)) << a << " " << b;
      }
    }
  }
}

TEST(CanMap, SymmetricAndTransitive) {
  std::vector<Rat> pts;
  for (long q : {3, 5, 7, 9, 12, 15, 20, 24}) {
    for (long p = 1; p < q; ++p) {
      Rat r(p, q);
      r.canonicalize();
      pts.push_back(r);
    }
  }
  for (const auto& a : pts) {
    EXPECT_TRUE(can_map(a, a));
    for (const auto& b : pts) {
      EXPECT_EQ(can_map(a, b), can_map(b, a));
    }
  }
  for (std::size_t i = 0; i < pts.size(); i += 3) {
    for (std::size_t j = 0; j < pts.size(); j += 2) {
      if (!can_map(pts[i], pts[j])) continue;
      for (const auto& c : pts) {
        if (can_map(pts[j], c)) EXPECT_TRUE(can_map(pts[i], c));
      }
    }
  }
}

TEST(BuildTupleMap, Examples) {
  std::vector<Rat> a{R("1/17")}, b{R("13/17")};
  auto g = build_tuple_map(a, b);
  ASSERT_TRUE(g);
  EXPECT_EQ((*g)(R("1/17")), R("13/17"));
  std::vector<Rat> c{R("3/17")};
  EXPECT_FALSE(build_tuple_map(a, c));

  std::vector<Rat> as{R("1/3"), R("1/2")}, bs{R("2/3"), R("3/4")};
  auto h = build_tuple_map(as, bs);
  ASSERT_TRUE(h);
  EXPECT_EQ((*h)(R("1/3")), R("2/3"));
  EXPECT_EQ((*h)(R("1/2")), R("3/4"));

  auto id = build_tuple_map(as, as);
  ASSERT_TRUE(id);
  EXPECT_EQ((*id)(R("1/3")), R("1/3"));
  EXPECT_EQ((*id)(R("1/2")), R("1/2"));

  std::vector<Rat> bad{R("1/2"), R("1/3")};
  EXPECT_THROW(build_tuple_map(bad, as), std::invalid_argument);
}

TEST(BuildTupleMap, WitnessesVerifyPointwise) {
  std::vector<Rat> pool;
  for (long q : {3, 5, 6, 7, 10, 17, 64}) {
    for (long p = 1; p < q; ++p) {
      Rat r(p, q);
      r.canonicalize();
      pool.push_back(r);
    }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  Gen gen(17);
  int found = 0;
  for (int i = 0; i < 400; ++i) {
    std::size_t k = static_cast<std::size_t>(gen.uniform(1, 4));
    std::vector<Rat> as, bs;
    std::set<std::size_t> ia, ib;
    while (ia.size() < k) ia.insert(static_cast<std::size_t>(gen.uniform(0, pool.size() - 1)));
    while (ib.size() < k) ib.insert(static_cast<std::size_t>(gen.uniform(0, pool.size() - 1)));
    for (auto j : ia) as.push_back(pool[j]);
    for (auto j : ib) bs.push_back(pool[j]);
    bool expect = true;
    for (std::size_t j = 0; j < k; ++j) expect = expect && can_map(as[j], bs[j]);
    auto g = build_tuple_map(as, bs);
    ASSERT_EQ(g.has_value(), expect);
    if (!g) continue;
    ++found;
    for (std::size_t j = 0; j < k; ++j) EXPECT_EQ((*g)(as[j]), bs[j]);
  }
  EXPECT_GT(found, 20);
}

TEST(BuildTupleMap, SubInterval) {
  Interval J{D("1/4"), 1};
  std::vector<Rat> a{R("1/3")}, b{R("2/3")};
  auto g = build_tuple_map(a, b, J);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->domain(), J);
  EXPECT_EQ((*g)(R("1/3")), R("2/3"));
}

PLMap through(std::initializer_list<const char*> xs, std::initializer_list<const char*> ys) {
  std::vector<Dyadic> a, b;
  for (auto* t : xs) a.push_back(D(t));
  for (auto* t : ys) b.push_back(D(t));
  return from_partition(a, b);
}

TEST(MatchFixedSets, Examples) {
  auto same = match_fixed_sets(x0(), x0());
  ASSERT_TRUE(same);
  EXPECT_TRUE(same->is_identity());

  PLMap y = through({"0", "1/8", "1/4", "1/2", "3/4", "1"}, {"0", "1/16", "1/4", "1/2", "5/8", "1"});
  PLMap z = through({"0", "1/4", "1/2", "3/4", "7/8", "1"}, {"0", "1/8", "1/2", "3/4", "13/16", "1"});
  ASSERT_EQ(fixed_set(y).components(),
            (std::vector<FixedComponent>{IsolatedPoint{0}, ClosedInterval{D("1/4"), D("1/2")},
                                         IsolatedPoint{1}}));
  ASSERT_EQ(fixed_set(z).components(),
            (std::vector<FixedComponent>{IsolatedPoint{0}, ClosedInterval{D("1/2"), D("3/4")},
                                         IsolatedPoint{1}}));
  auto m = match_fixed_sets(y, z);
  ASSERT_TRUE(m);
  EXPECT_EQ((*m)(D("1/4")), D("1/2"));
  EXPECT_EQ((*m)(D("1/2")), D("3/4"));
  EXPECT_EQ(fixed_set(compose(*m, compose(y, invert(*m)))), fixed_set(z));

  EXPECT_FALSE(match_fixed_sets(x0(), x1()));
}

TEST(MatchFixedSets, PointsVersusIntervals) {
  // Same number of boundary points, but an interval against two isolated points.
  PLMap y = through({"0", "1/8", "1/4", "1/2", "3/4", "1"}, {"0", "1/16", "1/4", "1/2", "5/8", "1"});
  PLMap w = through({"0", "1/8", "1/4", "3/8", "1/2", "3/4", "1"},
                    {"0", "1/16", "1/4", "5/16", "1/2", "5/8", "1"});
  ASSERT_EQ(fixed_set(y).boundary().size(), fixed_set(w).boundary().size());
  EXPECT_FALSE(match_fixed_sets(y, w));
  EXPECT_FALSE(match_fixed_sets(w, y));
}

TEST(MatchFixedSets, ConjugatesAlwaysMatch) {
  Gen gen(23);
  for (int i = 0; i < 300; ++i) {
    PLMap y = gen.element(), g = gen.element();
    PLMap z = conjugate_by(y, g);
    auto m = match_fixed_sets(y, z);
    ASSERT_TRUE(m) << y.to_string() << " " << g.to_string();
    EXPECT_EQ(fixed_set(compose(*m, compose(y, invert(*m)))), fixed_set(z));
  }
}

TEST(OrbitSearch, Examples) {
  EXPECT_EQ(orbit_search(x0(), R("1/2"), R("1/16")), 3);
  EXPECT_EQ(orbit_search(x0(), R("1/2"), R("3/4")), -1);
  EXPECT_EQ(orbit_search(x0(), R("1/2"), R("1/3")), std::nullopt);
  EXPECT_EQ(orbit_search(x0(), R("1/2"), R("1/2")), 0);
  EXPECT_EQ(orbit_search(x1(), R("1/4"), R("1/4")), 0);
  EXPECT_EQ(orbit_search(x1(), R("1/4"), R("1/8")), std::nullopt);
  // 1/4 lies outside (1/2, 1), the orbit interval of 3/4 under x1.
  EXPECT_EQ(orbit_search(x1(), R("3/4"), R("1/4")), std::nullopt);
  OrbitBounds b = orbit_bounds(x1(), R("3/4"));
  EXPECT_EQ(b.phi_minus, R("1/2"));
  EXPECT_EQ(b.phi_plus, 1);
}

TEST(OrbitSearch, AgreesWithPowerScan) {
  Gen gen(29);
  for (int i = 0; i < 200; ++i) {
    PLMap h = gen.element();
    Rat tau = R("1/3") + testing::frac(gen.uniform(0, 20), 64);
    std::int64_t n = gen.uniform(-5, 5);
    Rat mu = power(h, n)(tau);
    auto got = orbit_search(h, tau, mu);
    ASSERT_TRUE(got);
    EXPECT_EQ(power(h, *got)(tau), mu);
    if (h(tau) != tau) {
      EXPECT_EQ(*got, n);
    }
    Rat other = mu + Rat(1, 1000);
    if (other < 1) {
      auto none = orbit_search(h, tau, other);
      if (none) {
        EXPECT_EQ(power(h, *none)(tau), other);
      } else {
        for (std::int64_t j = -30; j <= 30; ++j) EXPECT_NE(power(h, j)(tau), other);
      }
    }
  }
}

}  // namespace
}  // namespace plconj
