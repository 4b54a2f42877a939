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

#include "plconj/detail/rational_pl.hpp"

#include <algorithm>
#include <stdexcept>

namespace plconj::detail {

RationalPL RationalPL::from_nodes(std::vector<RNode> nodes) {
  if (nodes.size() < 2) throw InvalidMap("a map needs at least two nodes");
  RationalPL f;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    Rat dx = nodes[i + 1].x - nodes[i].x;
    Rat dy = nodes[i + 1].y - nodes[i].y;
    if (dx <= 0 || dy <= 0) throw InvalidMap("rational segment is not increasing");
    auto s = as_pow2(Rat(dy / dx));
    if (!s) throw InvalidMap("rational segment slope is not a power of 2");
    if (!f.slopes_.empty() && f.slopes_.back() == *s) {
      f.nodes_.back() = nodes[i + 1];
    } else {
      if (f.nodes_.empty()) f.nodes_.push_back(nodes[i]);
      f.slopes_.push_back(*s);
      f.nodes_.push_back(nodes[i + 1]);
    }
  }
  return f;
}

RationalPL RationalPL::from(const PartialMap& g) {
  RationalPL f;
  for (const auto& n : g.nodes()) f.nodes_.push_back({n.x.to_rat(), n.y.to_rat()});
  f.slopes_ = g.slopes();
  return f;
}

RationalPL RationalPL::line(const Rat& x0, const Rat& y0, const Rat& x1, Pow2 slope) {
  RationalPL f;
  f.nodes_ = {{x0, y0}, {x1, y0 + (x1 - x0) * slope.to_rat()}};
  if (!(x0 < x1)) throw InvalidMap("degenerate line");
  f.slopes_ = {slope};
  return f;
}

std::size_t RationalPL::segment(const Rat& t) const {
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                             [](const Rat& v, const RNode& n) { return v < n.x; });
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin());
  if (i == 0) return 0;
  return std::min(i - 1, slopes_.size() - 1);
}

Rat RationalPL::eval(const Rat& t) const {
  if (t < lo() || t > hi()) throw std::out_of_range("rational eval outside the domain");
  std::size_t i = segment(t);
  return nodes_[i].y + (t - nodes_[i].x) * slopes_[i].to_rat();
}

Rat RationalPL::eval_inverse(const Rat& v) const {
  if (v < image_lo() || v > image_hi()) throw std::out_of_range("rational eval outside the range");
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), v,
                             [](const Rat& w, const RNode& n) { return w < n.y; });
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin());
  i = i == 0 ? 0 : std::min(i - 1, slopes_.size() - 1);
  return nodes_[i].x + (v - nodes_[i].y) * slopes_[i].inverse().to_rat();
}

Pow2 RationalPL::slope_right(const Rat& t) const {
  if (t < lo() || t >= hi()) throw std::out_of_range("no segment to the right");
  return slopes_[segment(t)];
}

Pow2 RationalPL::slope_left(const Rat& t) const {
  if (t <= lo() || t > hi()) throw std::out_of_range("no segment to the left");
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t,
                             [](const RNode& n, const Rat& v) { return n.x < v; });
  return slopes_[static_cast<std::size_t>(it - nodes_.begin()) - 1];
}

std::vector<Rat> RationalPL::breakpoints() const {
  std::vector<Rat> out;
  for (std::size_t i = 1; i + 1 < nodes_.size(); ++i) out.push_back(nodes_[i].x);
  return out;
}

RationalPL RationalPL::restrict(const Rat& a, const Rat& b) const {
  if (!(a < b) || a < lo() || b > hi()) throw std::invalid_argument("rational restrict: bad range");
  std::vector<RNode> nodes{{a, eval(a)}};
  for (const auto& n : nodes_) {
    if (n.x > a && n.x < b) nodes.push_back(n);
  }
  nodes.push_back({b, eval(b)});
  return from_nodes(std::move(nodes));
}

RationalPL RationalPL::inverse() const {
  RationalPL f;
  for (const auto& n : nodes_) f.nodes_.push_back({n.y, n.x});
  for (const auto& s : slopes_) f.slopes_.push_back(s.inverse());
  return f;
}

RationalPL RationalPL::reflect(const Rat& s) const {
  RationalPL f;
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) f.nodes_.push_back({s - it->x, s - it->y});
  f.slopes_.assign(slopes_.rbegin(), slopes_.rend());
  return f;
}

RationalPL compose(const RationalPL& f, const RationalPL& g) {
  if (g.image_lo() < f.lo() || g.image_hi() > f.hi())
    throw std::invalid_argument("rational compose: image leaves the domain");
  std::vector<Rat> ts;
  for (const auto& n : g.nodes()) ts.push_back(n.x);
  for (const auto& n : f.nodes()) {
    if (n.x > g.image_lo() && n.x < g.image_hi()) ts.push_back(g.eval_inverse(n.x));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<RNode> nodes;
  nodes.reserve(ts.size());
  for (auto& t : ts) {
    Rat v = f.eval(g.eval(t));
    nodes.push_back({std::move(t), std::move(v)});
  }
  return RationalPL::from_nodes(std::move(nodes));
}

RationalPL concat(const RationalPL& a, const RationalPL& b) {
  if (a.hi() != b.lo() || a.image_hi() != b.image_lo())
    throw std::invalid_argument("rational concat: pieces do not meet");
  std::vector<RNode> nodes(a.nodes());
  nodes.insert(nodes.end(), b.nodes().begin() + 1, b.nodes().end());
  return RationalPL::from_nodes(std::move(nodes));
}

std::optional<PLMap> to_plmap(const RationalPL& f) {
  std::vector<Node> nodes;
  for (const auto& n : f.nodes()) {
    auto x = Dyadic::from_rat(n.x);
    auto y = Dyadic::from_rat(n.y);
    if (!x || !y) return std::nullopt;
    nodes.push_back({*x, *y});
  }
  if (nodes.front().x != nodes.front().y || nodes.back().x != nodes.back().y) return std::nullopt;
  return PLMap::from_nodes(std::move(nodes));
}

}  // namespace plconj::detail
