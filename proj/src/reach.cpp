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

#include <stdexcept>
#include <vector>

namespace plconj {

namespace {

void check_interior(const Rat& a) {
  if (a <= 0 || a >= 1)
    throw std::invalid_argument("point " + to_string(a) + " is not inside (0,1)");
}

// Exponent r and offset c of an affine map t -> 2^r t + c with dyadic c
// carrying a to b.
std::optional<std::pair<Pow2, Rat>> local_affine(const Rat& a, const Rat& b) {
  OddDecomposition da = odd_decompose(a);
  OddDecomposition db = odd_decompose(b);
  if (da.n != db.n) return std::nullopt;
  auto R = solve_exponent(da.m, db.m, da.n);
  if (!R) return std::nullopt;
  Pow2 r{R->get_si() + db.t - da.t};
  return std::pair{r, b - r.to_rat() * a};
}

// Dyadic gamma < a < delta inside the open interval (lo, hi).
std::pair<Dyadic, Dyadic> dyadic_bracket(const Rat& a, const Rat& lo, const Rat& hi) {
  for (std::int64_t k = 1;; ++k) {
    Rat scaled = a * pow2_rat(k);
    Int c, f;
    mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Dyadic gamma(c - 1, k), delta(f + 1, k);
    if (gamma > lo && delta < hi) return {gamma, delta};
  }
}

void check_increasing(std::span<const Rat> xs, const Interval& J) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!J.contains_open(xs[i]))
      throw std::invalid_argument("point " + to_string(xs[i]) + " is not interior");
    if (i && !(xs[i - 1] < xs[i]))
      throw std::invalid_argument("build_tuple_map: points must be strictly increasing");
  }
}

}  // namespace

bool can_map(const Rat& a, const Rat& b) {
  check_interior(a);
  check_interior(b);
  return local_affine(a, b).has_value();
}

std::optional<PLMap> build_tuple_map(std::span<const Rat> as, std::span<const Rat> bs,
                                     const Interval& J) {
  if (as.size() != bs.size()) throw std::invalid_argument("build_tuple_map: length mismatch");
  check_increasing(as, J);
  check_increasing(bs, J);
  const Rat lo_end = J.lo.to_rat(), hi_end = J.hi.to_rat();
  const std::size_t k = as.size();
  std::vector<PartialMap> segments;
  segments.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto aff = local_affine(as[i], bs[i]);
    if (!aff) return std::nullopt;
    const auto& [r, c] = *aff;
    Rat src_lo = ((i ? as[i - 1] : lo_end) + as[i]) / 2;
    Rat src_hi = (as[i] + (i + 1 < k ? as[i + 1] : hi_end)) / 2;
    Rat dst_lo = ((i ? bs[i - 1] : lo_end) + bs[i]) / 2;
    Rat dst_hi = (bs[i] + (i + 1 < k ? bs[i + 1] : hi_end)) / 2;
    Rat inv = r.inverse().to_rat();
    Rat lo = std::max(src_lo, Rat((dst_lo - c) * inv));
    Rat hi = std::min(src_hi, Rat((dst_hi - c) * inv));
    auto [gamma, delta] = dyadic_bracket(as[i], lo, hi);
    Dyadic image = *Dyadic::from_rat(r.to_rat() * gamma.to_rat() + c);
    segments.push_back(PartialMap::affine(gamma, delta, r, image));
  }
  return extend_partial(J, segments);
}

std::optional<PLMap> match_fixed_sets(const PLMap& y, const PLMap& z) {
  if (y.domain() != z.domain()) throw std::invalid_argument("match_fixed_sets: domain mismatch");
  FixedSet dy = fixed_set(y), dz = fixed_set(z);
  const auto& cy = dy.components();
  const auto& cz = dz.components();
  if (cy.size() != cz.size()) return std::nullopt;
  for (std::size_t i = 0; i < cy.size(); ++i) {
    if (cy[i].index() != cz[i].index()) return std::nullopt;
  }
  std::vector<Rat> by = dy.boundary(), bz = dz.boundary();
  std::vector<Rat> as(by.begin() + 1, by.end() - 1), bs(bz.begin() + 1, bz.end() - 1);
  auto g = build_tuple_map(as, bs, y.domain());
  if (!g) return std::nullopt;
  const PLMap& m = *g;
  if (fixed_set(compose(m, compose(y, invert(m)))) != dz) return std::nullopt;
  return m;
}

OrbitBounds orbit_bounds(const PLMap& h, const Rat& tau) {
  if (h(tau) == tau) throw std::invalid_argument("orbit_bounds: point is fixed");
  FixedSet fs = fixed_set(h);
  std::optional<Rat> below, above;
  for (const auto& p : fs.boundary()) {
    if (p < tau) below = p;
    if (p > tau && !above) above = p;
  }
  return OrbitBounds{*below, *above};
}

std::optional<std::int64_t> orbit_search(const PLMap& h, const Rat& tau, const Rat& mu) {
  if (h(tau) == tau) return mu == tau ? std::optional<std::int64_t>(0) : std::nullopt;
  if (mu == tau) return 0;
  OrbitBounds b = orbit_bounds(h, tau);
  if (mu <= b.phi_minus || mu >= b.phi_plus) return std::nullopt;
  bool forward = (h(tau) < tau) == (mu < tau);
  std::int64_t step = forward ? 1 : -1;
  Rat t = tau;
  for (std::int64_t n = step;; n += step) {
    t = forward ? h(t) : h.eval_inverse(t);
    if (t == mu) return n;
    if ((mu < tau && t < mu) || (mu > tau && t > mu)) return std::nullopt;
  }
}

}  // namespace plconj
