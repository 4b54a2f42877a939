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

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "plconj/stair.hpp"

namespace plconj {

namespace {

std::int64_t left_exponent(const PLMap& f) { return f.slopes().front().exp; }
std::int64_t right_exponent(const PLMap& f) { return f.slopes().back().exp; }

std::vector<Interval> cells_of(const std::vector<Dyadic>& cuts) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back({cuts[i], cuts[i + 1]});
  return out;
}

// Root of a map without interior dyadic fixed points on its domain.
std::optional<PLMap> cell_root(const PLMap& x, std::int64_t n) {
  std::int64_t u = left_exponent(x);
  if (u % n != 0) return std::nullopt;
  auto h = stair_pl20(x, x, StairParams{Pow2{u / n}});
  if (!h || power(*h, n) != x) return std::nullopt;
  return h;
}

// Generator of C(x) for x without interior dyadic fixed points.
PLMap cell_generator(const PLMap& x) {
  std::int64_t u = std::abs(left_exponent(x));
  for (std::int64_t d = u; d >= 1; --d) {
    if (u % d != 0) continue;
    if (auto h = cell_root(x, d)) return *h;
  }
  throw std::logic_error("cell_generator: x has no first root");
}

// Generators are stored with initial slope below 1.
PLMap normalized(const PLMap& g) { return left_exponent(g) > 0 ? invert(g) : g; }

bool fixes_ends(const PLMap& f, const Interval& J) { return f(J.lo) == J.lo && f(J.hi) == J.hi; }

CentralizerFactor intersect_cell(std::span<const PLMap> xs, const Interval& J) {
  CentralizerFactor out{J, FactorKind::Full, std::nullopt};
  for (const auto& x : xs) {
    if (!fixes_ends(x, J)) return {J, FactorKind::Trivial, std::nullopt};
  }
  for (const auto& x : xs) {
    PLMap xc = restrict(x, J);
    if (xc.is_identity()) continue;
    PLMap b = normalized(cell_generator(xc));
    if (out.kind == FactorKind::Full) {
      out = {J, FactorKind::Cyclic, b};
      continue;
    }
    const PLMap& a = *out.generator;
    std::int64_t alpha = left_exponent(a), beta = left_exponent(b);
    std::int64_t g = std::gcd(alpha, beta);
    PLMap common = power(a, beta / g);
    if (common != power(b, alpha / g)) return {J, FactorKind::Trivial, std::nullopt};
    out.generator = normalized(common);
  }
  return out;
}

PLMap fixture_x0() {
  return PLMap::from_nodes({{0, 0}, {Dyadic(Int(1), 1), Dyadic(Int(1), 2)},
                            {Dyadic(Int(3), 2), Dyadic(Int(1), 1)}, {1, 1}});
}
PLMap fixture_x1() {
  return PLMap::from_nodes({{0, 0}, {Dyadic(Int(1), 1), Dyadic(Int(1), 1)},
                            {Dyadic(Int(3), 2), Dyadic(Int(5), 3)},
                            {Dyadic(Int(7), 3), Dyadic(Int(3), 2)}, {1, 1}});
}

}  // namespace

std::size_t CentralizerDesc::m() const {
  return static_cast<std::size_t>(std::count_if(factors.begin(), factors.end(), [](const auto& f) {
    return f.kind == FactorKind::Full;
  }));
}

std::size_t CentralizerDesc::n() const {
  return static_cast<std::size_t>(std::count_if(factors.begin(), factors.end(), [](const auto& f) {
    return f.kind == FactorKind::Cyclic;
  }));
}

std::optional<PLMap> nth_root(const PLMap& x, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("nth_root: n must be positive");
  if (x.is_identity()) throw std::invalid_argument("nth_root: identity has infinitely many roots");
  std::vector<PLMap> pieces;
  for (const auto& J : cells_of(fixed_set(x).dyadic_boundary())) {
    PLMap xc = restrict(x, J);
    if (xc.is_identity()) {
      pieces.push_back(xc);
      continue;
    }
    auto h = cell_root(xc, n);
    if (!h) return std::nullopt;
    pieces.push_back(*h);
  }
  PLMap h = glue(pieces);
  if (power(h, n) != x) return std::nullopt;
  return h;
}

std::vector<std::pair<std::int64_t, PLMap>> all_roots(const PLMap& x) {
  if (x.is_identity()) throw std::invalid_argument("all_roots: identity has infinitely many roots");
  std::int64_t g = 0;
  for (const auto& J : cells_of(fixed_set(x).dyadic_boundary())) {
    PLMap xc = restrict(x, J);
    if (xc.is_identity()) continue;
    g = std::gcd(g, std::gcd(left_exponent(xc), right_exponent(xc)));
  }
  std::vector<std::pair<std::int64_t, PLMap>> out;
  for (std::int64_t d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    if (auto h = nth_root(x, d)) out.emplace_back(d, *h);
  }
  return out;
}

CentralizerDesc centralizer(const PLMap& x) {
  std::vector<PLMap> one{x};
  return intersect_centralizers(one);
}

CentralizerDesc intersect_centralizers(std::span<const PLMap> xs, std::span<const Dyadic> extra) {
  if (xs.empty()) throw std::invalid_argument("intersect_centralizers: empty list");
  const Interval J = xs[0].domain();
  std::vector<Dyadic> cuts;
  for (const auto& x : xs) {
    if (x.domain() != J) throw std::invalid_argument("intersect_centralizers: domain mismatch");
    for (auto& p : fixed_set(x).dyadic_boundary()) cuts.push_back(p);
  }
  for (const auto& p : extra) {
    if (J.contains_open(p.to_rat())) cuts.push_back(p);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  CentralizerDesc desc{J, cuts, {}};
  for (const auto& cell : cells_of(cuts)) desc.factors.push_back(intersect_cell(xs, cell));
  return desc;
}

std::pair<PLMap, PLMap> reduce_to_two(const CentralizerDesc& desc) {
  std::vector<PLMap> w1, w2;
  const PLMap a = fixture_x0();
  const PLMap b = compose(fixture_x0(), fixture_x1());
  for (const auto& f : desc.factors) {
    switch (f.kind) {
      case FactorKind::Full:
        w1.push_back(PLMap::identity(f.interval));
        w2.push_back(PLMap::identity(f.interval));
        break;
      case FactorKind::Cyclic:
        w1.push_back(*f.generator);
        w2.push_back(*f.generator);
        break;
      case FactorKind::Trivial: {
        PartialMap phi = cell_map(Interval::unit(), f.interval);
        w1.push_back(transport(a, phi));
        w2.push_back(transport(b, phi));
        break;
      }
    }
  }
  return {glue(w1), glue(w2)};
}

bool membership(const CentralizerDesc& desc, const PLMap& g) {
  if (g.domain() != desc.domain) return false;
  for (const auto& p : desc.partition) {
    if (g(p) != p) return false;
  }
  for (const auto& f : desc.factors) {
    PLMap gc = restrict(g, f.interval);
    switch (f.kind) {
      case FactorKind::Full:
        break;
      case FactorKind::Trivial:
        if (!gc.is_identity()) return false;
        break;
      case FactorKind::Cyclic: {
        std::int64_t alpha = left_exponent(*f.generator);
        std::int64_t gamma = left_exponent(gc);
        if (gamma % alpha != 0) return false;
        if (power(*f.generator, gamma / alpha) != gc) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace plconj
