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

// Conjugacy constrained to an intersection of centralizers, and the
// k-simultaneous conjugacy solver built on it.

#ifndef PLCONJ_SIMCONJ_HPP_
#define PLCONJ_SIMCONJ_HPP_

#include <cstdint>
#include <optional>
#include <span>

#include "plconj/central.hpp"
#include "plconj/plmap.hpp"

namespace plconj {

// X^k == G0 o Y^k in k, obtained from x^m == g0 o zhat^n by fixing the
// initial slopes. A solution k gives m = (beta/g) k + m0, n = (alpha/g) k + n0
// with g = gcd(alpha, beta).
struct PowerEquation {
  PLMap X;
  PLMap Y;
  PLMap G0;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t m0 = 0;
  std::int64_t n0 = 0;

  std::int64_t g() const;
  std::int64_t m_of(std::int64_t k) const;
  std::int64_t n_of(std::int64_t k) const;
};

struct KBounds {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const { return lo > hi; }
};

// none when gcd(alpha, beta) does not divide gamma. xhat and zhat must have
// slope other than 1 at the left end of the common domain.
std::optional<PowerEquation> reduce_power_equation(const PLMap& xhat, const PLMap& zhat,
                                                   const PLMap& g0);

// Integer interval containing every k with X^k == G0 o Y^k. Requires X != Y,
// both with discrete fixed sets and no interior dyadic fixed points.
KBounds bound_K(const PowerEquation& eq);

// The k with X^k == G0 o Y^k; k = 0 when X == Y and G0 == id.
std::optional<std::int64_t> solve_power_equation(const PowerEquation& eq);

// k with xhat^-k o y o xhat^k == z. xhat must be a non-identity map without
// interior dyadic fixed points on the common domain.
std::optional<std::int64_t> solve_in_cyclic(const PLMap& xhat, const PLMap& y, const PLMap& z);

// m in the group described by desc with m(D(y)) == D(z).
std::optional<PLMap> match_fixed_sets_in(const CentralizerDesc& desc, const PLMap& y,
                                         const PLMap& z);

// g commuting with every xs[i] with g^-1 y g == z.
std::optional<PLMap> conjugate_in_centralizer(std::span<const PLMap> xs, const PLMap& y,
                                              const PLMap& z);

// g with g^-1 xs[i] g == ys[i] for every i. Throws std::invalid_argument on
// empty or unequal tuples.
std::optional<PLMap> simultaneous_conjugate(std::span<const PLMap> xs, std::span<const PLMap> ys);

}  // namespace plconj

#endif  // PLCONJ_SIMCONJ_HPP_
