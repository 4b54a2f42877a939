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

// Construction of the unique conjugator with a prescribed slope at an anchor
// point: below-diagonal maps, PL_2^0 maps with non-dyadic crossings, and the
// forced-value variant.

#ifndef PLCONJ_STAIR_HPP_
#define PLCONJ_STAIR_HPP_

#include <cstdint>
#include <optional>
#include <variant>

#include "plconj/exactnum.hpp"
#include "plconj/plmap.hpp"

namespace plconj {

struct LeftEnd {
  friend bool operator==(const LeftEnd&, const LeftEnd&) = default;
};
struct RightEnd {
  friend bool operator==(const RightEnd&, const RightEnd&) = default;
};
struct InteriorFixedPoint {
  Rat tau;
  friend bool operator==(const InteriorFixedPoint&, const InteriorFixedPoint&) = default;
};
using Anchor = std::variant<LeftEnd, RightEnd, InteriorFixedPoint>;

// Slope q prescribed for the conjugator at the anchor.
struct StairParams {
  Pow2 q;
  Anchor anchor = LeftEnd{};
};

// g = id on [eta, alpha], g = y^-1 z on [alpha, z^-1(alpha)], extended to the
// domain. Requires y, z below the diagonal and equal on [eta, alpha].
PLMap identification_step(const PLMap& y, const PLMap& z, const Dyadic& alpha);

// Start of the construction: g0 is linear with slope q on [eta, alpha], and
// alpha is as large as the initial box allows.
struct StairSeed {
  Dyadic alpha;
  PLMap g0;
};
std::optional<StairSeed> stair_seed(const PLMap& y, const PLMap& z, Pow2 q);
// Least r with z^-r(alpha) and y^-r(g0(alpha)) both past the final box, or
// nullopt when the final slopes differ.
std::optional<std::int64_t> stair_steps(const PLMap& y, const PLMap& z, const StairSeed& seed);
// y^-r o g0 o z^r.
PLMap stair_explicit(const PLMap& y, const PLMap& z, const StairSeed& seed, std::int64_t r);
// g0 g1 ... gr from r identification steps.
PLMap stair_iterate(const PLMap& y, const PLMap& z, const StairSeed& seed, std::int64_t r);

// The g with g'(eta+) == q and g^-1 y g == z, if any. Inputs must be strictly
// below the diagonal (std::invalid_argument otherwise).
std::optional<PLMap> stair_below(const PLMap& y, const PLMap& z, Pow2 q);
// Same answer through the identification steps.
std::optional<PLMap> stair_below_iterative(const PLMap& y, const PLMap& z, Pow2 q);

// The conjugator with slope q at the anchor for maps in PL_2^0 with equal
// fixed sets. Throws std::invalid_argument when the fixed sets differ, are not
// discrete, contain interior dyadic points, or the anchor is not fixed.
std::optional<PLMap> stair_pl20(const PLMap& y, const PLMap& z, const StairParams& params);

// Forced slope at the common orbit limit tau of any conjugator sending lambda
// to mu; nullopt when the ratio does not settle on a power of 2. Throws when
// D(y) != D(z), lambda is fixed, or mu lies in another component.
std::optional<Pow2> rho(const PLMap& y, const PLMap& z, const Rat& lambda, const Rat& mu);

// The unique g with g^-1 y g == z and g(lambda) == mu, if any.
std::optional<PLMap> conjugator_with_value(const PLMap& y, const PLMap& z, const Rat& lambda,
                                           const Rat& mu);

}  // namespace plconj

#endif  // PLCONJ_STAIR_HPP_
