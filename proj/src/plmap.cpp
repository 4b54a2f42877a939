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

#include "plconj/plmap.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace plconj {

namespace {

std::string segment_text(const Node& a, const Node& b) {
  return "(" + a.x.to_string() + "," + a.y.to_string() + ")-(" + b.x.to_string() + "," +
         b.y.to_string() + ")";
}

// Power-of-two binary expansion of a positive dyadic length, smallest first.
std::vector<Dyadic> binary_pieces(const Dyadic& length) {
  std::vector<Dyadic> pieces;
  const Int& num = length.num();
  std::size_t bits = mpz_sizeinbase(num.get_mpz_t(), 2);
  for (std::size_t b = 0; b < bits; ++b) {
    if (mpz_tstbit(num.get_mpz_t(), b)) {
      pieces.emplace_back(Int(1), length.exp() - static_cast<std::int64_t>(b));
    }
  }
  return pieces;
}

void split_until(std::vector<Dyadic>& pieces, std::size_t count) {
  while (pieces.size() < count) {
    auto it = std::max_element(pieces.begin(), pieces.end());
    Dyadic half(it->num(), it->exp() + 1);
    *it = half;
    pieces.insert(it, half);
  }
}

}  // namespace

// --- PartialMap -------------------------------------------------------------

PartialMap PartialMap::from_nodes(std::vector<Node> nodes) {
  if (nodes.size() < 2) throw InvalidMap("a map needs at least two nodes");
  PartialMap m;
  m.slopes_.reserve(nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Node& a = nodes[i];
    const Node& b = nodes[i + 1];
    if (!(a.x < b.x) || !(a.y < b.y))
      throw InvalidMap("segment " + segment_text(a, b) + " is not increasing");
    auto s = Dyadic::ratio_pow2(b.y - a.y, b.x - a.x);
    if (!s) throw InvalidMap("segment " + segment_text(a, b) + " has a slope that is not a power of 2");
    m.slopes_.push_back(*s);
  }
  m.nodes_ = std::move(nodes);
  m.canonicalize();
  return m;
}

PartialMap PartialMap::affine(const Dyadic& lo, const Dyadic& hi, Pow2 slope,
                              const Dyadic& image_of_lo) {
  return from_nodes({{lo, image_of_lo}, {hi, image_of_lo + (hi - lo) * slope}});
}

void PartialMap::canonicalize() {
  if (nodes_.size() <= 2) return;
  std::vector<Node> nodes;
  std::vector<Pow2> slopes;
  nodes.reserve(nodes_.size());
  slopes.reserve(slopes_.size());
  nodes.push_back(std::move(nodes_[0]));
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    if (!slopes.empty() && slopes.back() == slopes_[i]) {
      nodes.back() = std::move(nodes_[i + 1]);
    } else {
      slopes.push_back(slopes_[i]);
      nodes.push_back(std::move(nodes_[i + 1]));
    }
  }
  nodes_ = std::move(nodes);
  slopes_ = std::move(slopes);
}

std::size_t PartialMap::segment_index(const Rat& t, Side side) const {
  const std::size_t n = slopes_.size();
  if (side == Side::Right) {
    if (!(nodes_.front().x <= t) || !(nodes_.back().x > t))
      throw std::out_of_range("no segment to the right of " + plconj::to_string(t));
    // Largest i with x_i <= t.
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                               [](const Rat& v, const Node& nd) { return nd.x > v; });
    return static_cast<std::size_t>(it - nodes_.begin()) - 1;
  }
  if (!(nodes_.front().x < t) || !(nodes_.back().x >= t))
    throw std::out_of_range("no segment to the left of " + plconj::to_string(t));
  // Smallest i with x_{i+1} >= t.
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t,
                             [](const Node& nd, const Rat& v) { return nd.x < v; });
  std::size_t idx = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  return std::min(idx, n - 1);
}

Dyadic PartialMap::eval(const Dyadic& t) const {
  if (t < nodes_.front().x || t > nodes_.back().x)
    throw std::out_of_range("eval: " + t.to_string() + " outside the domain");
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                             [](const Dyadic& v, const Node& nd) { return nd.x > v; });
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  if (i + 1 == nodes_.size()) return nodes_.back().y;
  return nodes_[i].y + (t - nodes_[i].x) * slopes_[i];
}

Rat PartialMap::eval(const Rat& t) const {
  if (nodes_.front().x > t || nodes_.back().x < t)
    throw std::out_of_range("eval: " + plconj::to_string(t) + " outside the domain");
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                             [](const Rat& v, const Node& nd) { return nd.x > v; });
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  if (i + 1 == nodes_.size()) return nodes_.back().y.to_rat();
  return nodes_[i].y.to_rat() + (t - nodes_[i].x.to_rat()) * slopes_[i].to_rat();
}

Dyadic PartialMap::eval_inverse(const Dyadic& v) const {
  if (v < nodes_.front().y || v > nodes_.back().y)
    throw std::out_of_range("eval_inverse: " + v.to_string() + " outside the range");
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), v,
                             [](const Dyadic& w, const Node& nd) { return nd.y > w; });
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  if (i + 1 == nodes_.size()) return nodes_.back().x;
  return nodes_[i].x + (v - nodes_[i].y) * slopes_[i].inverse();
}

Rat PartialMap::eval_inverse(const Rat& v) const {
  if (nodes_.front().y > v || nodes_.back().y < v)
    throw std::out_of_range("eval_inverse: " + plconj::to_string(v) + " outside the range");
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), v,
                             [](const Rat& w, const Node& nd) { return nd.y > w; });
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  if (i + 1 == nodes_.size()) return nodes_.back().x.to_rat();
  return nodes_[i].x.to_rat() + (v - nodes_[i].y.to_rat()) * slopes_[i].inverse().to_rat();
}

Pow2 PartialMap::slope_at(const Rat& t, Side side) const {
  return slopes_[segment_index(t, side)];
}

// --- PLMap ------------------------------------------------------------------

PLMap PLMap::from_nodes(std::vector<Node> nodes) {
  if (nodes.size() < 2) throw InvalidMap("a map needs at least two nodes");
  if (nodes.front().x != nodes.front().y || nodes.back().x != nodes.back().y)
    throw InvalidMap("endpoints must lie on the diagonal");
  return PLMap(PartialMap::from_nodes(std::move(nodes)));
}

PLMap PLMap::identity(const Interval& domain) {
  return from_nodes({{domain.lo, domain.lo}, {domain.hi, domain.hi}});
}

std::vector<Dyadic> PLMap::breakpoints() const {
  std::vector<Dyadic> out;
  const auto& n = nodes();
  for (std::size_t i = 1; i + 1 < n.size(); ++i) out.push_back(n[i].x);
  return out;
}

std::string PLMap::to_string() const {
  std::ostringstream os;
  os << "[";
  const auto& n = nodes();
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) os << ",";
    os << "(" << n[i].x << "," << n[i].y << ")";
  }
  os << "]";
  return os.str();
}

// --- FixedSet ---------------------------------------------------------------

std::vector<Rat> FixedSet::boundary() const {
  std::vector<Rat> out;
  for (const auto& c : components_) {
    if (const auto* p = std::get_if<IsolatedPoint>(&c)) {
      out.push_back(p->at);
    } else {
      const auto& iv = std::get<ClosedInterval>(c);
      out.push_back(iv.lo.to_rat());
      out.push_back(iv.hi.to_rat());
    }
  }
  return out;
}

std::vector<Dyadic> FixedSet::dyadic_boundary() const {
  std::vector<Dyadic> out;
  for (const auto& r : boundary()) {
    if (auto d = Dyadic::from_rat(r)) out.push_back(*d);
  }
  return out;
}

bool FixedSet::contains(const Rat& t) const {
  for (const auto& c : components_) {
    if (const auto* p = std::get_if<IsolatedPoint>(&c)) {
      if (p->at == t) return true;
    } else {
      const auto& iv = std::get<ClosedInterval>(c);
      if (iv.lo <= t && iv.hi >= t) return true;
    }
  }
  return false;
}

bool FixedSet::is_discrete() const {
  return std::all_of(components_.begin(), components_.end(), [](const FixedComponent& c) {
    return std::holds_alternative<IsolatedPoint>(c);
  });
}

// --- algebra ----------------------------------------------------------------

Rat eval(const PLMap& f, const Rat& t) { return f(t); }

PartialMap compose(const PartialMap& f, const PartialMap& g) {
  if (f.source() != g.target()) throw std::invalid_argument("compose: domain mismatch");
  const auto& gn = g.nodes();
  const auto& gs = g.slopes();
  const auto& fn = f.nodes();
  const auto& fs = f.slopes();

  // Merge g's nodes with the preimages of f's nodes, ordered by g-value.
  std::vector<Node> pts;  // (t, g(t))
  pts.reserve(gn.size() + fn.size());
  std::size_t a = 0, b = 0;
  while (a < gn.size() || b < fn.size()) {
    if (b == fn.size() || (a < gn.size() && gn[a].y < fn[b].x)) {
      pts.push_back(gn[a]);
      ++a;
    } else if (a == gn.size() || fn[b].x < gn[a].y) {
      const Dyadic& u = fn[b].x;
      const Node& base = gn[a - 1];
      pts.push_back({base.x + (u - base.y) * gs[a - 1].inverse(), u});
      ++b;
    } else {
      pts.push_back(gn[a]);
      ++a;
      ++b;
    }
  }

  std::vector<Node> out;
  out.reserve(pts.size());
  std::size_t c = 0;
  for (auto& p : pts) {
    while (c + 1 < fs.size() && fn[c + 1].x <= p.y) ++c;
    Dyadic v = fn[c].y + (p.y - fn[c].x) * fs[c];
    out.push_back({std::move(p.x), std::move(v)});
  }
  return PartialMap::from_nodes(std::move(out));
}

PartialMap invert(const PartialMap& f) {
  std::vector<Node> out;
  out.reserve(f.nodes().size());
  for (const auto& n : f.nodes()) out.push_back({n.y, n.x});
  return PartialMap::from_nodes(std::move(out));
}

PLMap compose(const PLMap& f, const PLMap& g) {
  if (f.domain() != g.domain()) throw std::invalid_argument("compose: domain mismatch");
  return PLMap::from_nodes(compose(f.graph(), g.graph()).nodes());
}

PLMap transport(const PLMap& f, const PartialMap& phi) {
  if (phi.source() != f.domain()) throw std::invalid_argument("transport: domain mismatch");
  return PLMap::from_nodes(compose(phi, compose(f.graph(), invert(phi))).nodes());
}

PLMap invert(const PLMap& f) {
  std::vector<Node> out;
  out.reserve(f.nodes().size());
  for (const auto& n : f.nodes()) out.push_back({n.y, n.x});
  return PLMap::from_nodes(std::move(out));
}

PLMap power(const PLMap& f, std::int64_t n) {
  PLMap base = n < 0 ? invert(f) : f;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  PLMap acc = PLMap::identity(f.domain());
  while (e) {
    if (e & 1) acc = compose(acc, base);
    e >>= 1;
    if (e) base = compose(base, base);
  }
  return acc;
}

PLMap conjugate_by(const PLMap& f, const PLMap& g) { return compose(invert(g), compose(f, g)); }

FixedSet fixed_set(const PLMap& f) {
  std::vector<FixedComponent> comps;
  auto add_point = [&](Rat p) {
    if (!comps.empty()) {
      if (const auto* iv = std::get_if<ClosedInterval>(&comps.back()); iv && iv->hi == p) return;
      if (const auto* q = std::get_if<IsolatedPoint>(&comps.back()); q && q->at == p) return;
    }
    comps.emplace_back(IsolatedPoint{std::move(p)});
  };
  auto add_interval = [&](const Dyadic& lo, const Dyadic& hi) {
    if (!comps.empty()) {
      if (auto* iv = std::get_if<ClosedInterval>(&comps.back()); iv && iv->hi == lo) {
        iv->hi = hi;
        return;
      }
      if (const auto* q = std::get_if<IsolatedPoint>(&comps.back()); q && lo == q->at) comps.pop_back();
    }
    comps.emplace_back(ClosedInterval{lo, hi});
  };

  const auto& n = f.nodes();
  for (std::size_t i = 0; i + 1 < n.size(); ++i) {
    Dyadic d0 = n[i].y - n[i].x;
    Dyadic d1 = n[i + 1].y - n[i + 1].x;
    if (d0.is_zero() && d1.is_zero()) {
      add_interval(n[i].x, n[i + 1].x);
      continue;
    }
    if (d0.is_zero()) add_point(n[i].x.to_rat());
    if (d0.sign() * d1.sign() < 0) {
      // f(t) - t is linear on the segment; solve for its zero.
      Rat dx = (n[i + 1].x - n[i].x).to_rat();
      Rat r0 = d0.to_rat();
      Rat r1 = d1.to_rat();
      add_point(n[i].x.to_rat() - r0 * dx / (r1 - r0));
    }
    if (d1.is_zero()) add_point(n[i + 1].x.to_rat());
  }
  return FixedSet(std::move(comps));
}

Orientation classify(const PLMap& f, const Interval& J) {
  if (f(J.lo) != J.lo || f(J.hi) != J.hi)
    throw std::invalid_argument("classify: map does not preserve the interval");
  PLMap r = restrict(f, J);
  if (r.is_identity()) return Orientation::Identity;
  FixedSet fs = fixed_set(r);
  if (fs.components().size() != 2 || !fs.is_discrete()) return Orientation::Mixed;
  // Only the endpoints are fixed; the sign is constant on the interior.
  const auto& nd = r.nodes();
  Dyadic probe = nd[1].x;
  return r(probe) < probe ? Orientation::Below : Orientation::Above;
}

Pow2 one_sided_slope(const PLMap& f, const Rat& t, Side side) {
  return f.graph().slope_at(t, side);
}

std::optional<LinearityBox> initial_box(const PLMap& y, const PLMap& z) {
  if (y.domain() != z.domain()) throw std::invalid_argument("initial_box: domain mismatch");
  Pow2 c = y.slopes().front();
  if (c != z.slopes().front() || c.is_one()) return std::nullopt;
  Dyadic extent = std::min(y.nodes()[1].x, z.nodes()[1].x);
  return LinearityBox{y.domain().lo, extent, c};
}

std::optional<LinearityBox> final_box(const PLMap& y, const PLMap& z) {
  if (y.domain() != z.domain()) throw std::invalid_argument("final_box: domain mismatch");
  Pow2 c = y.slopes().back();
  if (c != z.slopes().back() || c.is_one()) return std::nullopt;
  const auto& yn = y.nodes();
  const auto& zn = z.nodes();
  Dyadic extent = std::max(yn[yn.size() - 2].x, zn[zn.size() - 2].x);
  return LinearityBox{y.domain().hi, extent, c};
}

// --- construction -----------------------------------------------------------

PartialMap cell_map(const Interval& src, const Interval& dst) {
  if (!(src.lo < src.hi) || !(dst.lo < dst.hi))
    throw std::invalid_argument("cell_map: degenerate interval");
  std::vector<Dyadic> a = binary_pieces(src.length());
  std::vector<Dyadic> b = binary_pieces(dst.length());
  split_until(a, b.size());
  split_until(b, a.size());
  std::vector<Node> nodes;
  nodes.reserve(a.size() + 1);
  Dyadic x = src.lo, y = dst.lo;
  nodes.push_back({x, y});
  for (std::size_t i = 0; i < a.size(); ++i) {
    x += a[i];
    y += b[i];
    nodes.push_back({x, y});
  }
  return PartialMap::from_nodes(std::move(nodes));
}

PLMap from_partition(std::span<const Dyadic> xs, std::span<const Dyadic> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("from_partition: partitions must have equal length >= 2");
  if (xs.front() != ys.front() || xs.back() != ys.back())
    throw std::invalid_argument("from_partition: partitions must share their endpoints");
  std::vector<Node> nodes{{xs[0], ys[0]}};
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1]) || !(ys[i] < ys[i + 1]))
      throw std::invalid_argument("from_partition: partitions must be strictly increasing");
    PartialMap cell = cell_map({xs[i], xs[i + 1]}, {ys[i], ys[i + 1]});
    nodes.insert(nodes.end(), cell.nodes().begin() + 1, cell.nodes().end());
  }
  return PLMap::from_nodes(std::move(nodes));
}

PLMap extend_partial(const Interval& domain, std::span<const PartialMap> segments) {
  std::vector<Node> nodes{{domain.lo, domain.lo}};
  auto bridge_to = [&](const Dyadic& x, const Dyadic& y) {
    const Node& last = nodes.back();
    if (last.x == x && last.y == y) return;
    if (!(last.x < x) || !(last.y < y))
      throw std::invalid_argument("extend_partial: segments overlap or are out of order at " +
                                  x.to_string());
    PartialMap cell = cell_map({last.x, x}, {last.y, y});
    nodes.insert(nodes.end(), cell.nodes().begin() + 1, cell.nodes().end());
  };
  for (const auto& seg : segments) {
    Interval s = seg.source(), t = seg.target();
    if (!domain.contains(s) || !domain.contains(t))
      throw std::invalid_argument("extend_partial: segment leaves the domain");
    bridge_to(s.lo, t.lo);
    nodes.insert(nodes.end(), seg.nodes().begin() + 1, seg.nodes().end());
  }
  bridge_to(domain.hi, domain.hi);
  return PLMap::from_nodes(std::move(nodes));
}

// --- restriction and gluing ---------------------------------------------------

PartialMap restrict_partial(const PLMap& f, const Dyadic& lo, const Dyadic& hi) {
  if (!(lo < hi) || lo < f.domain().lo || hi > f.domain().hi)
    throw std::invalid_argument("restrict: bad sub-interval");
  std::vector<Node> nodes{{lo, f(lo)}};
  for (const auto& n : f.nodes()) {
    if (n.x > lo && n.x < hi) nodes.push_back(n);
  }
  nodes.push_back({hi, f(hi)});
  return PartialMap::from_nodes(std::move(nodes));
}

PLMap restrict(const PLMap& f, const Interval& J) {
  if (f(J.lo) != J.lo || f(J.hi) != J.hi)
    throw std::invalid_argument("restrict: map does not preserve [" + J.lo.to_string() + "," +
                                J.hi.to_string() + "]");
  if (J == f.domain()) return f;
  return PLMap::from_nodes(restrict_partial(f, J.lo, J.hi).nodes());
}

PLMap extend_by_identity(const PLMap& f, const Interval& domain) {
  Interval d = f.domain();
  if (!domain.contains(d)) throw std::invalid_argument("extend_by_identity: domain too small");
  std::vector<Node> nodes;
  if (domain.lo < d.lo) nodes.push_back({domain.lo, domain.lo});
  nodes.insert(nodes.end(), f.nodes().begin(), f.nodes().end());
  if (d.hi < domain.hi) nodes.push_back({domain.hi, domain.hi});
  return PLMap::from_nodes(std::move(nodes));
}

PLMap glue(std::span<const PLMap> pieces) {
  if (pieces.empty()) throw std::invalid_argument("glue: nothing to glue");
  std::vector<Node> nodes(pieces[0].nodes());
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].domain().lo != nodes.back().x)
      throw std::invalid_argument("glue: pieces are not consecutive");
    nodes.insert(nodes.end(), pieces[i].nodes().begin() + 1, pieces[i].nodes().end());
  }
  return PLMap::from_nodes(std::move(nodes));
}

PLMap reflect(const PLMap& f) {
  Dyadic s = f.domain().lo + f.domain().hi;
  std::vector<Node> nodes;
  nodes.reserve(f.nodes().size());
  for (auto it = f.nodes().rbegin(); it != f.nodes().rend(); ++it) {
    nodes.push_back({s - it->x, s - it->y});
  }
  return PLMap::from_nodes(std::move(nodes));
}

}  // namespace plconj
