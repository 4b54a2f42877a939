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

#include "plconj/stair.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "plconj/detail/rational_pl.hpp"
#include "plconj/reach.hpp"

namespace plconj {

using detail::RationalPL;

namespace {

bool conjugates(const PLMap& y, const PLMap& z, const PLMap& g) {
  return compose(y, g) == compose(g, z);
}

void require_below(const PLMap& f, const char* what) {
  if (classify(f, f.domain()) != Orientation::Below)
    throw std::invalid_argument(std::string(what) + ": map is not below the diagonal");
}

// Appends the segment from the end of the partial conjugator to the top
// corner, then checks the result.
std::optional<PLMap> close_and_verify(const PLMap& y, const PLMap& z, const PLMap& g,
                                      const Dyadic& end) {
  const Interval J = y.domain();
  std::vector<Node> nodes = restrict_partial(g, J.lo, end).nodes();
  nodes.push_back({J.hi, J.hi});
  try {
    PLMap out = PLMap::from_nodes(std::move(nodes));
    if (!conjugates(y, z, out)) return std::nullopt;
    return out;
  } catch (const InvalidMap&) {
    return std::nullopt;
  }
}

// One cell [a, b] with both maps below the diagonal and a prescribed slope
// at a. Returns the conjugator on the cell and its slope at b.
std::optional<std::pair<RationalPL, Pow2>> stair_cell(const RationalPL& y, const RationalPL& z,
                                                       Pow2 q) {
  const Rat& a = y.lo();
  const Rat& b = y.hi();
  if (y.slopes().front() != z.slopes().front()) return std::nullopt;
  if (y.slopes().back() != z.slopes().back()) return std::nullopt;
  Rat A = std::min(y.nodes()[1].x, z.nodes()[1].x);
  Rat B = std::max(y.nodes()[y.nodes().size() - 2].x, z.nodes()[z.nodes().size() - 2].x);
  Rat alpha = q.exp > 0 ? Rat(a + (A - a) * q.inverse().to_rat()) : A;
  RationalPL h = RationalPL::line(a, a, alpha, q);
  RationalPL y_inv = y.inverse();
  while (!(h.hi() > B && h.image_hi() > B)) {
    RationalPL zr = z.restrict(a, z.eval_inverse(h.hi()));
    h = compose(y_inv, compose(h, zr));
  }
  auto closing = as_pow2(Rat((b - h.image_hi()) / (b - h.hi())));
  if (!closing) return std::nullopt;
  std::vector<detail::RNode> nodes = h.nodes();
  nodes.push_back({b, b});
  return std::pair{RationalPL::from_nodes(std::move(nodes)), *closing};
}

// Runs the cells between consecutive fixed points left to right, carrying
// the slope across each crossing.
std::optional<RationalPL> chain(const RationalPL& y, const RationalPL& z,
                                const std::vector<Rat>& points, Pow2 q) {
  std::optional<RationalPL> out;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Rat& a = points[i];
    const Rat& b = points[i + 1];
    RationalPL yc = y.restrict(a, b), zc = z.restrict(a, b);
    Rat mid = (a + b) / 2;
    bool y_below = yc.eval(mid) < mid;
    if (y_below != (zc.eval(mid) < mid)) return std::nullopt;
    if (!y_below) {
      yc = yc.inverse();
      zc = zc.inverse();
    }
    auto piece = stair_cell(yc, zc, q);
    if (!piece) return std::nullopt;
    q = piece->second;
    out = out ? concat(*out, piece->first) : piece->first;
  }
  return out;
}

std::vector<Rat> reflected(const std::vector<Rat>& pts, const Rat& s) {
  std::vector<Rat> out;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) out.push_back(s - *it);
  return out;
}

std::vector<Rat> pl20_points(const PLMap& y, const PLMap& z) {
  if (y.domain() != z.domain()) throw std::invalid_argument("stair: domain mismatch");
  FixedSet fy = fixed_set(y);
  if (fy != fixed_set(z)) throw std::invalid_argument("stair: fixed sets differ");
  if (!fy.is_discrete()) throw std::invalid_argument("stair: fixed set is not discrete");
  if (fy.dyadic_boundary().size() != 2)
    throw std::invalid_argument("stair: interior dyadic fixed point");
  return fy.boundary();
}

}  // namespace

PLMap identification_step(const PLMap& y, const PLMap& z, const Dyadic& alpha) {
  require_below(y, "identification_step");
  require_below(z, "identification_step");
  const Interval J = y.domain();
  if (!(J.lo < alpha) || !(alpha < J.hi))
    throw std::invalid_argument("identification_step: alpha outside the domain");
  if (restrict_partial(y, J.lo, alpha) != restrict_partial(z, J.lo, alpha))
    throw std::invalid_argument("identification_step: maps differ before alpha");
  Dyadic end = z.eval_inverse(alpha);
  std::vector<PartialMap> segments{
      PartialMap::affine(J.lo, alpha, Pow2::one(), J.lo),
      restrict_partial(compose(invert(y), z), alpha, end)};
  return extend_partial(J, segments);
}

std::optional<StairSeed> stair_seed(const PLMap& y, const PLMap& z, Pow2 q) {
  auto box = initial_box(y, z);
  if (!box) return std::nullopt;
  const Interval J = y.domain();
  Dyadic alpha = q.exp > 0 ? J.lo + (box->extent - J.lo) * q.inverse() : box->extent;
  std::vector<Dyadic> xs{J.lo, alpha, J.hi};
  std::vector<Dyadic> ys{J.lo, J.lo + (alpha - J.lo) * q, J.hi};
  return StairSeed{alpha, from_partition(xs, ys)};
}

std::optional<std::int64_t> stair_steps(const PLMap& y, const PLMap& z, const StairSeed& seed) {
  auto box = final_box(y, z);
  if (!box) return std::nullopt;
  const Dyadic& B = box->extent;
  Dyadic a = seed.alpha, b = seed.g0(seed.alpha);
  std::int64_t r = 0;
  while (!(a > B && b > B)) {
    a = z.eval_inverse(a);
    b = y.eval_inverse(b);
    ++r;
  }
  return r;
}

PLMap stair_explicit(const PLMap& y, const PLMap& z, const StairSeed& seed, std::int64_t r) {
  return compose(power(y, -r), compose(seed.g0, power(z, r)));
}

PLMap stair_iterate(const PLMap& y, const PLMap& z, const StairSeed& seed, std::int64_t r) {
  PLMap g = seed.g0;
  PLMap yj = conjugate_by(y, g);
  Dyadic a = seed.alpha;
  for (std::int64_t j = 0; j < r; ++j) {
    PLMap step = identification_step(yj, z, a);
    g = compose(g, step);
    yj = conjugate_by(yj, step);
    a = z.eval_inverse(a);
  }
  return g;
}

std::optional<PLMap> stair_below(const PLMap& y, const PLMap& z, Pow2 q) {
  require_below(y, "stair_below");
  require_below(z, "stair_below");
  auto seed = stair_seed(y, z, q);
  if (!seed) return std::nullopt;
  auto r = stair_steps(y, z, *seed);
  if (!r) return std::nullopt;
  Dyadic end = power(z, -*r)(seed->alpha);
  return close_and_verify(y, z, stair_explicit(y, z, *seed, *r), end);
}

std::optional<PLMap> stair_below_iterative(const PLMap& y, const PLMap& z, Pow2 q) {
  require_below(y, "stair_below_iterative");
  require_below(z, "stair_below_iterative");
  auto seed = stair_seed(y, z, q);
  if (!seed) return std::nullopt;
  auto r = stair_steps(y, z, *seed);
  if (!r) return std::nullopt;
  Dyadic end = power(z, -*r)(seed->alpha);
  return close_and_verify(y, z, stair_iterate(y, z, *seed, *r), end);
}

std::optional<PLMap> stair_pl20(const PLMap& y, const PLMap& z, const StairParams& params) {
  std::vector<Rat> pts = pl20_points(y, z);
  const Interval J = y.domain();
  const Rat lo = J.lo.to_rat(), hi = J.hi.to_rat(), s = lo + hi;
  RationalPL Y = RationalPL::from(y), Z = RationalPL::from(z);

  std::optional<RationalPL> g;
  if (std::holds_alternative<LeftEnd>(params.anchor)) {
    g = chain(Y, Z, pts, params.q);
  } else if (std::holds_alternative<RightEnd>(params.anchor)) {
    auto r = chain(Y.reflect(s), Z.reflect(s), reflected(pts, s), params.q);
    if (r) g = r->reflect(s);
  } else {
    const Rat& tau = std::get<InteriorFixedPoint>(params.anchor).tau;
    auto at = std::find(pts.begin() + 1, pts.end() - 1, tau);
    if (at == pts.end() - 1) throw std::invalid_argument("stair: anchor is not an interior fixed point");
    std::vector<Rat> left(pts.begin(), at + 1), right(at, pts.end());
    auto r = chain(Y.restrict(tau, hi), Z.restrict(tau, hi), right, params.q);
    if (!r) return std::nullopt;
    auto l = chain(Y.restrict(lo, tau).reflect(s), Z.restrict(lo, tau).reflect(s),
                   reflected(left, s), params.q);
    if (!l) return std::nullopt;
    g = concat(l->reflect(s), *r);
  }
  if (!g) return std::nullopt;
  auto out = detail::to_plmap(*g);
  if (!out || !conjugates(y, z, *out)) return std::nullopt;
  return out;
}

std::optional<Pow2> rho(const PLMap& y, const PLMap& z, const Rat& lambda, const Rat& mu) {
  if (y.domain() != z.domain()) throw std::invalid_argument("rho: domain mismatch");
  if (fixed_set(y) != fixed_set(z)) throw std::invalid_argument("rho: fixed sets differ");
  if (y(lambda) == lambda) throw std::invalid_argument("rho: lambda is fixed");
  OrbitBounds bounds = orbit_bounds(y, lambda);
  if (mu <= bounds.phi_minus || mu >= bounds.phi_plus)
    throw std::invalid_argument("rho: lambda and mu lie in different components");
  bool below = y(lambda) < lambda;
  if ((z(lambda) < lambda) != below) return std::nullopt;
  const Rat tau = below ? bounds.phi_minus : bounds.phi_plus;

  // Points within the linear piece of f next to tau on the orbit side.
  auto near = [&](const PLMap& f, const Rat& t) {
    if (below) {
      for (const auto& n : f.nodes())
        if (n.x > tau) return t <= n.x;
    } else {
      for (auto it = f.nodes().rbegin(); it != f.nodes().rend(); ++it)
        if (it->x < tau) return t >= it->x;
    }
    return false;
  };
  Rat u = lambda, w = mu;
  while (!(near(z, u) && near(y, w))) {
    u = z(u);
    w = y(w);
  }
  Rat first = (w - tau) / (u - tau);
  Rat second = (y(w) - tau) / (z(u) - tau);
  if (first != second) return std::nullopt;
  return as_pow2(first);
}

std::optional<PLMap> conjugator_with_value(const PLMap& y, const PLMap& z, const Rat& lambda,
                                           const Rat& mu) {
  if (y.domain() != z.domain() || fixed_set(y) != fixed_set(z)) return std::nullopt;
  if (y(lambda) == lambda) throw std::invalid_argument("conjugator_with_value: lambda is fixed");
  OrbitBounds bounds = orbit_bounds(y, lambda);
  if (mu <= bounds.phi_minus || mu >= bounds.phi_plus) return std::nullopt;
  auto slope = rho(y, z, lambda, mu);
  if (!slope) return std::nullopt;
  bool below = y(lambda) < lambda;
  const Rat tau = below ? bounds.phi_minus : bounds.phi_plus;
  const Interval J = y.domain();
  Anchor anchor = InteriorFixedPoint{tau};
  if (J.lo == tau) anchor = LeftEnd{};
  if (J.hi == tau) anchor = RightEnd{};
  auto g = stair_pl20(y, z, StairParams{*slope, anchor});
  if (!g || (*g)(lambda) != mu) return std::nullopt;
  return g;
}

}  // namespace plconj
