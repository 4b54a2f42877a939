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

// Increasing PL bijections between intervals with rational endpoints. The
// conjugator search runs across cells bounded by non-dyadic fixed points,
// where PLMap cannot represent the pieces; results are converted back once
// every node is dyadic again.

#ifndef PLCONJ_DETAIL_RATIONAL_PL_HPP_
#define PLCONJ_DETAIL_RATIONAL_PL_HPP_

#include <optional>
#include <vector>

#include "plconj/exactnum.hpp"
#include "plconj/plmap.hpp"

namespace plconj::detail {

struct RNode {
  Rat x;
  Rat y;
  friend bool operator==(const RNode&, const RNode&) = default;
};

class RationalPL {
 public:
  // Throws InvalidMap on non-increasing nodes or slopes that are not powers of 2.
  static RationalPL from_nodes(std::vector<RNode> nodes);
  static RationalPL from(const PartialMap& f);
  static RationalPL from(const PLMap& f) { return from(f.graph()); }
  // Line through (x0, y0) with the given slope over [x0, x1].
  static RationalPL line(const Rat& x0, const Rat& y0, const Rat& x1, Pow2 slope);

  const std::vector<RNode>& nodes() const { return nodes_; }
  const std::vector<Pow2>& slopes() const { return slopes_; }
  const Rat& lo() const { return nodes_.front().x; }
  const Rat& hi() const { return nodes_.back().x; }
  const Rat& image_lo() const { return nodes_.front().y; }
  const Rat& image_hi() const { return nodes_.back().y; }

  Rat eval(const Rat& t) const;
  Rat eval_inverse(const Rat& v) const;
  Pow2 slope_right(const Rat& t) const;
  Pow2 slope_left(const Rat& t) const;
  // x coordinates of interior nodes.
  std::vector<Rat> breakpoints() const;

  RationalPL restrict(const Rat& lo, const Rat& hi) const;
  RationalPL inverse() const;
  // Conjugate by t -> s - t.
  RationalPL reflect(const Rat& s) const;

  friend bool operator==(const RationalPL&, const RationalPL&) = default;

 private:
  std::size_t segment(const Rat& t) const;

  std::vector<RNode> nodes_;
  std::vector<Pow2> slopes_;
};

// f o g; the image of g must lie inside the domain of f.
RationalPL compose(const RationalPL& f, const RationalPL& g);
// Joins maps on [a, b] and [b, c] that agree at b.
RationalPL concat(const RationalPL& a, const RationalPL& b);
// The PLMap with the same graph, if every node is dyadic and the ends lie on
// the diagonal.
std::optional<PLMap> to_plmap(const RationalPL& f);

}  // namespace plconj::detail

#endif  // PLCONJ_DETAIL_RATIONAL_PL_HPP_
