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

#include "plconj/simconj.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <stdexcept>
#include <vector>

#include "plconj/conj.hpp"
#include "plconj/reach.hpp"
#include "plconj/stair.hpp"

namespace plconj {

namespace {

std::int64_t left_exponent(const PLMap& f) { return f.slopes().front().exp; }

// a s + b t == gcd(a, b) >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

std::vector<Interval> cells_of(const std::vector<Dyadic>& cuts) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back({cuts[i], cuts[i + 1]});
  return out;
}

// Right end of the fixed-set component of f containing t.
std::optional<Rat> component_end(const PLMap& f, const Rat& t) {
  FixedSet fs = fixed_set(f);
  for (const auto& c : fs.components()) {
    if (const auto* iv = std::get_if<ClosedInterval>(&c)) {
      if (iv->lo <= t && iv->hi >= t) return iv->hi.to_rat();
    } else if (std::get<IsolatedPoint>(c).at == t) {
      return t;
    }
  }
  return std::nullopt;
}

Rat next_break(const PLMap& f, const Rat& t, const Rat& cap) {
  for (const auto& b : f.breakpoints()) {
    if (b > t) return std::min(b.to_rat(), cap);
  }
  return cap;
}

// Bound u with k <= u for every k >= 1 solving A^k == H o B^k, where A and B
// lie below the diagonal on (a, b), agree near a, and H is the identity near
// a. nullopt when A == B on [a, b].
std::optional<std::int64_t> upper_on_square(PLMap A, PLMap B, PLMap H, const Rat& a, const Rat& b) {
  auto agree = component_end(compose(invert(B), A), a);
  if (!agree || *agree <= a) throw std::logic_error("upper_on_square: maps differ at the left end");
  if (*agree >= b) return std::nullopt;
  const Rat theta1 = *agree;
  if (one_sided_slope(A, theta1, Side::Right) > one_sided_slope(B, theta1, Side::Right)) {
    std::swap(A, B);
    H = invert(H);
  }
  Rat cap = next_break(B, theta1, next_break(A, theta1, b));
  Rat psi = (theta1 + cap) / 2;
  auto h_end = component_end(H, a);
  if (!h_end || *h_end <= a) throw std::logic_error("upper_on_square: H moves the left end");
  Rat theta = std::min(theta1, *h_end);
  Rat p = psi;
  std::int64_t k = 0;
  while (p >= theta) {
    p = B(p);
    ++k;
  }
  return k - 1;
}

bool below_on(const PLMap& f, const Rat& a, const Rat& b) {
  Rat mid = (a + b) / 2;
  return f(mid) < mid;
}

}  // namespace

std::int64_t PowerEquation::g() const { return std::gcd(alpha, beta); }
std::int64_t PowerEquation::m_of(std::int64_t k) const { return beta / g() * k + m0; }
std::int64_t PowerEquation::n_of(std::int64_t k) const { return alpha / g() * k + n0; }

std::optional<PowerEquation> reduce_power_equation(const PLMap& xhat, const PLMap& zhat,
                                                   const PLMap& g0) {
  if (xhat.domain() != zhat.domain() || xhat.domain() != g0.domain())
    throw std::invalid_argument("reduce_power_equation: domain mismatch");
  std::int64_t alpha = left_exponent(xhat), beta = left_exponent(zhat), gamma = left_exponent(g0);
  if (alpha == 0 || beta == 0)
    throw std::invalid_argument("reduce_power_equation: generator with initial slope 1");
  std::int64_t s = 0, t = 0;
  std::int64_t g = ext_gcd(alpha, beta, s, t);
  if (gamma % g != 0) return std::nullopt;
  std::int64_t m0 = s * (gamma / g), n0 = -t * (gamma / g);
  PLMap X = power(xhat, beta / g);
  PLMap Y = power(zhat, alpha / g);
  PLMap G0 = compose(power(xhat, -m0), compose(g0, power(zhat, n0)));
  return PowerEquation{X, Y, G0, alpha, beta, gamma, m0, n0};
}

KBounds bound_K(const PowerEquation& eq) {
  const PLMap& X = eq.X;
  const PLMap& Y = eq.Y;
  const PLMap& G0 = eq.G0;
  if (X == Y) throw std::invalid_argument("bound_K: X == Y");
  FixedSet dx = fixed_set(X), dy = fixed_set(Y);
  if (!dx.is_discrete() || !dy.is_discrete())
    throw std::invalid_argument("bound_K: fixed sets must be discrete");
  const KBounds none{0, -1};
  auto single = [](std::int64_t k) { return KBounds{k, k}; };

  // A fixed point of one map only pins k through an orbit.
  for (const auto& tau : dy.boundary()) {
    if (X(tau) != tau) {
      auto k = orbit_search(X, tau, G0(tau));
      return k ? single(*k) : none;
    }
  }
  for (const auto& tau : dx.boundary()) {
    if (Y(tau) != tau) {
      auto k = orbit_search(Y, tau, G0.eval_inverse(tau));
      return k ? single(*k) : none;
    }
  }

  // Common fixed points: one-sided slopes give k (a_X - a_Y) == a_G0.
  std::vector<Rat> fixed = dx.boundary();
  for (const auto& r : fixed) {
    if (G0(r) != r) return none;
    for (Side side : {Side::Left, Side::Right}) {
      if ((side == Side::Left && r == fixed.front()) || (side == Side::Right && r == fixed.back()))
        continue;
      std::int64_t ax = one_sided_slope(X, r, side).exp, ay = one_sided_slope(Y, r, side).exp;
      std::int64_t ag = one_sided_slope(G0, r, side).exp;
      if (ax == ay) {
        if (ag != 0) return none;
        continue;
      }
      if (ag % (ax - ay) != 0) return none;
      return single(ag / (ax - ay));
    }
  }

  // X and Y agree near every common fixed point; bound on a square where
  // they differ.
  for (std::size_t i = 0; i + 1 < fixed.size(); ++i) {
    const Rat& a = fixed[i];
    const Rat& b = fixed[i + 1];
    bool below = below_on(X, a, b);
    PLMap Xs = below ? X : invert(X);
    PLMap Ys = below ? Y : invert(Y);
    auto up = upper_on_square(Xs, Ys, G0, a, b);
    if (!up) continue;
    // Negative k == -j: Y^j == G0 o (G0^-1 X G0)^j.
    auto down = upper_on_square(Ys, conjugate_by(Xs, G0), G0, a, b);
    std::int64_t hi = *up, lo = down ? -*down : 0;
    return below ? KBounds{lo, hi} : KBounds{-hi, -lo};
  }
  throw std::logic_error("bound_K: X and Y agree on every square");
}

std::optional<std::int64_t> solve_power_equation(const PowerEquation& eq) {
  if (eq.X == eq.Y) {
    if (eq.G0.is_identity()) return 0;
    return std::nullopt;
  }
  KBounds kb = bound_K(eq);
  for (std::int64_t k = kb.lo; k <= kb.hi; ++k) {
    if (power(eq.X, k) == compose(eq.G0, power(eq.Y, k))) return k;
  }
  return std::nullopt;
}

std::optional<std::int64_t> solve_in_cyclic(const PLMap& xhat, const PLMap& y, const PLMap& z) {
  const Interval J = xhat.domain();
  if (y.domain() != J || z.domain() != J) throw std::invalid_argument("solve_in_cyclic: domain mismatch");
  if (xhat.is_identity()) throw std::invalid_argument("solve_in_cyclic: identity generator");
  std::vector<Dyadic> xcuts = fixed_set(xhat).dyadic_boundary();
  if (xcuts.size() != 2 || !fixed_set(xhat).is_discrete())
    throw std::invalid_argument("solve_in_cyclic: generator has interior dyadic fixed points");
  if (y == z) return 0;
  auto w = conjugate(y, z);
  if (!w) return std::nullopt;
  const PLMap& g0 = w->conjugator;
  auto check = [&](std::int64_t k) -> std::optional<std::int64_t> {
    if (conjugate_by(y, power(xhat, k)) == z) return k;
    return std::nullopt;
  };
  if (z.is_identity()) return 0;
  // Every conjugator is g0 o c with c in C(z), and c fixes the dyadic
  // boundary of D(z).
  std::vector<Dyadic> zcuts = fixed_set(z).dyadic_boundary();
  if (zcuts.size() > 2) {
    Rat tau = zcuts[1].to_rat();
    auto k = orbit_search(xhat, tau, g0(tau));
    return k ? check(*k) : std::nullopt;
  }
  CentralizerDesc cz = centralizer(z);
  const PLMap& zhat = *cz.factors.front().generator;
  auto eq = reduce_power_equation(xhat, zhat, g0);
  if (!eq) return std::nullopt;
  auto k = solve_power_equation(*eq);
  return k ? check(eq->m_of(*k)) : std::nullopt;
}

std::optional<PLMap> match_fixed_sets_in(const CentralizerDesc& desc, const PLMap& y,
                                         const PLMap& z) {
  if (y.domain() != desc.domain || z.domain() != desc.domain)
    throw std::invalid_argument("match_fixed_sets_in: domain mismatch");
  FixedSet dy = fixed_set(y), dz = fixed_set(z);
  const auto& cy = dy.components();
  const auto& cz = dz.components();
  if (cy.size() != cz.size()) return std::nullopt;
  for (std::size_t i = 0; i < cy.size(); ++i) {
    if (cy[i].index() != cz[i].index()) return std::nullopt;
  }
  std::vector<Rat> by = dy.boundary(), bz = dz.boundary();
  std::vector<Interval> cells = cells_of(desc.partition);
  std::vector<std::vector<Rat>> as(cells.size()), bs(cells.size());
  for (std::size_t i = 1; i + 1 < by.size(); ++i) {
    const Rat& a = by[i];
    const Rat& b = bz[i];
    bool placed = false;
    for (std::size_t c = 0; c < cells.size() && !placed; ++c) {
      if (cells[c].contains_open(a)) {
        if (!cells[c].contains_open(b)) return std::nullopt;
        as[c].push_back(a);
        bs[c].push_back(b);
        placed = true;
      }
    }
    if (!placed && a != b) return std::nullopt;
  }
  std::vector<PLMap> pieces;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const CentralizerFactor& f = desc.factors[c];
    switch (f.kind) {
      case FactorKind::Trivial:
        if (as[c] != bs[c]) return std::nullopt;
        pieces.push_back(PLMap::identity(cells[c]));
        break;
      case FactorKind::Full: {
        auto m = build_tuple_map(as[c], bs[c], cells[c]);
        if (!m) return std::nullopt;
        pieces.push_back(*m);
        break;
      }
      case FactorKind::Cyclic: {
        const PLMap& gen = *f.generator;
        std::optional<std::int64_t> v;
        for (std::size_t i = 0; i < as[c].size(); ++i) {
          if (gen(as[c][i]) == as[c][i]) {
            if (as[c][i] != bs[c][i]) return std::nullopt;
            continue;
          }
          auto k = orbit_search(gen, as[c][i], bs[c][i]);
          if (!k || (v && *v != *k)) return std::nullopt;
          v = k;
        }
        pieces.push_back(power(gen, v.value_or(0)));
        break;
      }
    }
  }
  PLMap m = glue(pieces);
  if (fixed_set(compose(m, compose(y, invert(m)))) != dz) return std::nullopt;
  return m;
}

std::optional<PLMap> conjugate_in_centralizer(std::span<const PLMap> xs, const PLMap& y,
                                              const PLMap& z) {
  if (y.domain() != z.domain()) throw std::invalid_argument("conjugate_in_centralizer: domain mismatch");
  if (xs.empty()) {
    auto w = conjugate(y, z);
    if (!w) return std::nullopt;
    return w->conjugator;
  }
  if (y == z) return PLMap::identity(y.domain());
  CentralizerDesc desc = intersect_centralizers(xs);
  auto m = match_fixed_sets_in(desc, y, z);
  if (!m) return std::nullopt;
  const PLMap minv = invert(*m);
  const PLMap yh = conjugate_by(y, minv);

  std::vector<Dyadic> cuts = fixed_set(z).dyadic_boundary();
  CentralizerDesc fine = intersect_centralizers(xs, cuts);
  std::vector<PLMap> pieces;
  for (const auto& J : cells_of(cuts)) {
    PLMap yc = restrict(yh, J), zc = restrict(z, J);
    if (yc.is_identity()) {
      if (!zc.is_identity()) return std::nullopt;
      pieces.push_back(yc);
      continue;
    }
    std::optional<Dyadic> lambda;
    std::size_t cell = 0;
    for (std::size_t i = 0; i < fine.partition.size(); ++i) {
      if (fine.partition[i] == J.lo) cell = i;
      if (J.contains_open(fine.partition[i].to_rat()) && !lambda) lambda = fine.partition[i];
    }
    if (lambda) {
      Rat l = lambda->to_rat();
      auto g = conjugator_with_value(yc, zc, l, l);
      if (!g) return std::nullopt;
      pieces.push_back(*g);
      continue;
    }
    const CentralizerFactor& f = fine.factors[cell];
    switch (f.kind) {
      case FactorKind::Trivial:
        if (yc != zc) return std::nullopt;
        pieces.push_back(PLMap::identity(J));
        break;
      case FactorKind::Full: {
        auto w = conjugate(yc, zc);
        if (!w) return std::nullopt;
        pieces.push_back(w->conjugator);
        break;
      }
      case FactorKind::Cyclic: {
        auto k = solve_in_cyclic(*f.generator, yc, zc);
        if (!k) return std::nullopt;
        pieces.push_back(power(*f.generator, *k));
        break;
      }
    }
  }
  PLMap g = compose(minv, glue(pieces));
  if (conjugate_by(y, g) != z || !membership(desc, g)) return std::nullopt;
  return g;
}

std::optional<PLMap> simultaneous_conjugate(std::span<const PLMap> xs, std::span<const PLMap> ys) {
  if (xs.empty() || xs.size() != ys.size())
    throw std::invalid_argument("simultaneous_conjugate: tuples must be non-empty and of equal length");
  auto w = conjugate(xs[0], ys[0]);
  if (!w) return std::nullopt;
  PLMap g = w->conjugator;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    auto c = conjugate_in_centralizer(ys.first(i), conjugate_by(xs[i], g), ys[i]);
    if (!c) return std::nullopt;
    g = compose(g, *c);
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (conjugate_by(xs[i], g) != ys[i]) throw std::logic_error("simultaneous_conjugate: witness fails");
  }
  return g;
}

}  // namespace plconj
