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

// Roots, centralizers and intersections of centralizers.
//
// A centralizer (or an intersection of centralizers) in PL_2(J) is described
// by a dyadic partition of J and one factor per cell: trivial, infinite cyclic
// with an explicit generator, or all of PL_2(cell).

#ifndef PLCONJ_CENTRAL_HPP_
#define PLCONJ_CENTRAL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "plconj/plmap.hpp"

namespace plconj {

enum class FactorKind { Trivial, Cyclic, Full };

struct CentralizerFactor {
  Interval interval;
  FactorKind kind = FactorKind::Trivial;
  // Element of PL_2(interval); set only for Cyclic factors.
  std::optional<PLMap> generator;

  friend bool operator==(const CentralizerFactor&, const CentralizerFactor&) = default;
};

struct CentralizerDesc {
  Interval domain;
  std::vector<Dyadic> partition;  // includes both domain ends
  std::vector<CentralizerFactor> factors;

  // Number of Full factors.
  std::size_t m() const;
  // Number of Cyclic factors.
  std::size_t n() const;

  friend bool operator==(const CentralizerDesc&, const CentralizerDesc&) = default;
};

// The h with h^n == x, if any. Throws for n < 1 or x == id.
std::optional<PLMap> nth_root(const PLMap& x, std::int64_t n);
// All (n, h) with h^n == x, ordered by n. Throws for x == id.
std::vector<std::pair<std::int64_t, PLMap>> all_roots(const PLMap& x);

CentralizerDesc centralizer(const PLMap& x);

// Intersection of the centralizers of xs (non-empty, common domain). Extra
// dyadic points refine the partition; cells whose ends some x_j moves are
// trivial.
CentralizerDesc intersect_centralizers(std::span<const PLMap> xs,
                                       std::span<const Dyadic> extra = {});

// w1, w2 with C(w1) and C(w2) intersecting in exactly desc.
std::pair<PLMap, PLMap> reduce_to_two(const CentralizerDesc& desc);

bool membership(const CentralizerDesc& desc, const PLMap& g);

}  // namespace plconj

#endif  // PLCONJ_CENTRAL_HPP_
