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

#include "plconj/central.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "testing.hpp"

namespace plconj {
namespace {

using testing::D;
using testing::Gen;
using testing::R;
using testing::x0;
using testing::x1;

TEST(NthRoot, Examples) {
  EXPECT_EQ(nth_root(power(x0(), 2), 2), x0());
  EXPECT_EQ(nth_root(x0(), 1), x0());
  EXPECT_EQ(nth_root(x0(), 2), std::nullopt);
  EXPECT_EQ(nth_root(power(x1(), 6), 3), power(x1(), 2));
  EXPECT_THROW(nth_root(x0(), 0), std::invalid_argument);
  EXPECT_THROW(nth_root(PLMap::identity(), 2), std::invalid_argument);
}

TEST(AllRoots, Examples) {
  using Roots = std::vector<std::pair<std::int64_t, PLMap>>;
  EXPECT_EQ(all_roots(x0()), (Roots{{1, x0()}}));
  EXPECT_EQ(all_roots(power(x0(), 4)), (Roots{{1, power(x0(), 4)}, {2, power(x0(), 2)}, {4, x0()}}));
  EXPECT_EQ(all_roots(power(x0(), 2)), (Roots{{1, power(x0(), 2)}, {2, x0()}}));
  EXPECT_THROW(all_roots(PLMap::identity()), std::invalid_argument);
}

TEST(AllRoots, PlantedPowersRandomized) {
  Gen gen(83);
  for (int i = 0; i < 60; ++i) {
    PLMap h = gen.structured();
    if (h.is_identity()) continue;
    std::int64_t k = gen.uniform(2, 4);
    PLMap x = power(h, k);
    auto roots = all_roots(x);
    ASSERT_FALSE(roots.empty());
    EXPECT_EQ(roots.front().first, 1);
    bool found = false;
    std::vector<Pow2> first_slopes;
    for (const auto& [n, r] : roots) {
      EXPECT_EQ(power(r, n), x);
      EXPECT_EQ(nth_root(x, n), r);
      if (n == k) {
        found = true;
        EXPECT_EQ(r, h);
      }
      first_slopes.push_back(r.slopes().front());
    }
    EXPECT_TRUE(found);
    // Roots of different degree differ somewhere; on a single moving cell at 0
    // they differ in initial slope.
    if (!restrict(x, {0, fixed_set(x).dyadic_boundary()[1]}).is_identity()) {
      std::sort(first_slopes.begin(), first_slopes.end());
      EXPECT_EQ(std::adjacent_find(first_slopes.begin(), first_slopes.end()), first_slopes.end());
    }
  }
}

TEST(Centralizer, Examples) {
  CentralizerDesc c = centralizer(PLMap::identity());
  EXPECT_EQ(c.factors.size(), 1u);
  EXPECT_EQ(c.factors[0].kind, FactorKind::Full);
  EXPECT_EQ(c.m(), 1u);
  EXPECT_EQ(c.n(), 0u);

  CentralizerDesc a = centralizer(x0());
  ASSERT_EQ(a.factors.size(), 1u);
  EXPECT_EQ(a.factors[0].kind, FactorKind::Cyclic);
  EXPECT_EQ(a.factors[0].generator, x0());
  EXPECT_EQ(a.m(), 0u);
  EXPECT_EQ(a.n(), 1u);

  CentralizerDesc b = centralizer(x1());
  EXPECT_EQ(b.partition, (std::vector<Dyadic>{0, D("1/2"), 1}));
  ASSERT_EQ(b.factors.size(), 2u);
  EXPECT_EQ(b.factors[0].kind, FactorKind::Full);
  EXPECT_EQ(b.factors[1].kind, FactorKind::Cyclic);
  EXPECT_EQ(b.m(), 1u);
  EXPECT_EQ(b.n(), 1u);

  CentralizerDesc sq = centralizer(power(x0(), 2));
  EXPECT_EQ(sq.factors[0].generator, x0());
}

TEST(Membership, Examples) {
  EXPECT_TRUE(membership(centralizer(x0()), power(x0(), 3)));
  EXPECT_TRUE(membership(centralizer(x0()), power(x0(), -2)));
  EXPECT_TRUE(membership(centralizer(x0()), PLMap::identity()));
  EXPECT_TRUE(membership(centralizer(x1()), PLMap::identity()));
  EXPECT_FALSE(membership(centralizer(x0()), x1()));
  EXPECT_TRUE(membership(centralizer(PLMap::identity()), x1()));
}

TEST(Centralizer, SoundAndCompleteOnProbes) {
  Gen gen(89);
  for (int i = 0; i < 60; ++i) {
    PLMap x = gen.structured();
    CentralizerDesc c = centralizer(x);
    EXPECT_EQ(c.m() + c.n(), c.factors.size());
    for (int j = 0; j < 3; ++j) {
      PLMap g = gen.commuting(x);
      ASSERT_EQ(compose(g, x), compose(x, g));
      EXPECT_TRUE(membership(c, g));
    }
    // Elements sampled from the descriptor commute with x.
    std::vector<PLMap> pieces;
    for (const auto& f : c.factors) {
      if (f.kind == FactorKind::Cyclic) pieces.push_back(power(*f.generator, gen.uniform(-3, 3)));
      if (f.kind == FactorKind::Full) pieces.push_back(gen.element(f.interval, 8));
      if (f.kind == FactorKind::Trivial) pieces.push_back(PLMap::identity(f.interval));
    }
    PLMap s = glue(pieces);
    EXPECT_EQ(compose(s, x), compose(x, s));
    PLMap other = gen.element();
    if (compose(other, x) != compose(x, other)) EXPECT_FALSE(membership(c, other));
  }
}

TEST(Intersect, Examples) {
  std::vector<PLMap> one{x1()};
  EXPECT_EQ(intersect_centralizers(one), centralizer(x1()));
  std::vector<PLMap> twice{x1(), x1()};
  EXPECT_EQ(intersect_centralizers(twice), centralizer(x1()));
  std::vector<PLMap> pair{x0(), x1()};
  CentralizerDesc c = intersect_centralizers(pair);
  EXPECT_EQ(c.partition, (std::vector<Dyadic>{0, D("1/2"), 1}));
  for (const auto& f : c.factors) EXPECT_EQ(f.kind, FactorKind::Trivial);
  std::vector<PLMap> powers{power(x0(), 2), power(x0(), 3)};
  CentralizerDesc p = intersect_centralizers(powers);
  ASSERT_EQ(p.factors.size(), 1u);
  EXPECT_EQ(p.factors[0].generator, x0());
  EXPECT_THROW(intersect_centralizers({}), std::invalid_argument);
}

TEST(Intersect, OrderAndDuplicationInvariant) {
  Gen gen(97);
  for (int i = 0; i < 40; ++i) {
    PLMap a = gen.structured(), b = gen.structured();
    if (gen.uniform(0, 1)) b = power(a, gen.uniform(2, 3));
    std::vector<PLMap> ab{a, b}, ba{b, a}, aba{a, b, a};
    CentralizerDesc c = intersect_centralizers(ab);
    CentralizerDesc d = intersect_centralizers(ba);
    EXPECT_EQ(c.partition, d.partition);
    for (std::size_t k = 0; k < c.factors.size(); ++k) {
      EXPECT_EQ(c.factors[k].kind, d.factors[k].kind);
      if (c.factors[k].kind == FactorKind::Cyclic) {
        const PLMap& g = *c.factors[k].generator;
        const PLMap& h = *d.factors[k].generator;
        EXPECT_TRUE(g == h || g == invert(h));
      }
    }
    EXPECT_EQ(intersect_centralizers(aba), c);
  }
}

TEST(ReduceToTwo, Examples) {
  auto [a, b] = reduce_to_two(centralizer(PLMap::identity()));
  EXPECT_TRUE(a.is_identity());
  EXPECT_TRUE(b.is_identity());
  auto [c, d] = reduce_to_two(centralizer(x0()));
  EXPECT_EQ(c, x0());
  EXPECT_EQ(d, x0());
  std::vector<PLMap> pair{x0(), x1()};
  CentralizerDesc t = intersect_centralizers(pair);
  auto [e, f] = reduce_to_two(t);
  std::vector<PLMap> ef{e, f};
  EXPECT_EQ(intersect_centralizers(ef), t);
}

TEST(ReduceToTwo, RoundTripsRandomDescriptors) {
  Gen gen(101);
  for (int i = 0; i < 30; ++i) {
    std::vector<PLMap> xs;
    std::size_t k = static_cast<std::size_t>(gen.uniform(1, 3));
    for (std::size_t j = 0; j < k; ++j) xs.push_back(gen.structured());
    CentralizerDesc desc = intersect_centralizers(xs);
    auto [w1, w2] = reduce_to_two(desc);
    std::vector<PLMap> ws{w1, w2};
    EXPECT_EQ(intersect_centralizers(ws), desc);
  }
}

}  // namespace
}  // namespace plconj
