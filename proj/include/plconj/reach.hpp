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

// Reachability of points and tuples under PL_2(I), fixed-set matching, and
// orbit membership.

#ifndef PLCONJ_REACH_HPP_
#define PLCONJ_REACH_HPP_

#include <cstdint>
#include <optional>
#include <span>

#include "plconj/exactnum.hpp"
#include "plconj/plmap.hpp"

namespace plconj {

// Nearest fixed points of h on either side of a point it moves.
struct OrbitBounds {
  Rat phi_minus;
  Rat phi_plus;
};

// Whether some g in PL_2(I) has g(a) == b. Both points must lie in (0,1).
bool can_map(const Rat& a, const Rat& b);

// g in PL_2(J) with g(as[i]) == bs[i], or nullopt when some pair is not
// reachable. Lists must be strictly increasing inside J and equally long.
std::optional<PLMap> build_tuple_map(std::span<const Rat> as, std::span<const Rat> bs,
                                     const Interval& J = Interval::unit());

// m with m(D(y)) == D(z), so that m y m^-1 has the fixed set of z.
std::optional<PLMap> match_fixed_sets(const PLMap& y, const PLMap& z);

// Throws std::invalid_argument when h fixes tau.
OrbitBounds orbit_bounds(const PLMap& h, const Rat& tau);

// The n with h^n(tau) == mu, if any.
std::optional<std::int64_t> orbit_search(const PLMap& h, const Rat& tau, const Rat& mu);

}  // namespace plconj

#endif  // PLCONJ_REACH_HPP_
