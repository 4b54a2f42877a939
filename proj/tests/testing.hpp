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

#ifndef PLCONJ_TESTS_TESTING_HPP_
#define PLCONJ_TESTS_TESTING_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "plconj/plmap.hpp"

namespace plconj::testing {

PLMap x0();
PLMap x1();
// Nodes given as "p/q" strings, alternating x and y.
PLMap map_of(std::initializer_list<const char*> coords);
Rat R(const char* text);
// p/q in lowest terms.
Rat frac(long p, long q);
Dyadic D(const char* text);

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // Strictly increasing dyadic points in (lo, hi) with denominators <= 2^8
  // relative to the interval.
  std::vector<Dyadic> points(const Interval& J, std::size_t count);
  // Random element of PL_2(J) with at most max_nodes nodes.
  PLMap element(const Interval& J = Interval::unit(), std::size_t max_nodes = 12);
  // Random element strictly below the diagonal on the interior of J.
  PLMap below(const Interval& J = Interval::unit(), std::size_t max_nodes = 12);
  // Random element of PL_2^0(J): discrete fixed set without interior dyadic points.
  PLMap pl20(const Interval& J = Interval::unit(), std::size_t max_nodes = 12);
  // Random dyadic cut points, then identity, a random element or a power of
  // one on each cell. Produces identity intervals and interior dyadic fixed
  // points.
  PLMap structured(const Interval& J = Interval::unit());
  // An element commuting with x: stair conjugators of x with itself on the
  // moving cells, random elements on identity cells.
  PLMap commuting(const PLMap& x);
  // k elements mixing PL_2^0 maps, structured maps, elements commuting with
  // the first entry and powers of the previous entry.
  std::vector<PLMap> tuple(std::size_t k);

 private:
  std::mt19937_64 rng_;
};

}  // namespace plconj::testing

#endif  // PLCONJ_TESTS_TESTING_HPP_
