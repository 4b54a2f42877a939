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

// Elements of PL_2(J): orientation-preserving piecewise-linear homeomorphisms
// of a dyadic interval J with dyadic breakpoints and power-of-two slopes.
//
// Maps are stored as canonical node lists (no interior node is collinear with
// its neighbours), so two maps are equal as functions iff their node lists are
// equal. Every operation returns canonical maps.

#ifndef PLCONJ_PLMAP_HPP_
#define PLCONJ_PLMAP_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "plconj/exactnum.hpp"

namespace plconj {

struct Interval {
  Dyadic lo;
  Dyadic hi;

  static Interval unit() { return Interval{Dyadic(0), Dyadic(1)}; }

  Dyadic length() const { return hi - lo; }
  bool contains(const Rat& t) const { return lo <= t && hi >= t; }
  bool contains_open(const Rat& t) const { return lo < t && hi > t; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Node {
  Dyadic x;
  Dyadic y;
  friend bool operator==(const Node&, const Node&) = default;
};

// Thrown when a node list does not describe a PL_2 map.
class InvalidMap : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Side { Left, Right };

// Increasing PL bijection between two dyadic intervals with dyadic nodes and
// power-of-two slopes. Used for the pieces handed to extend_partial().
class PartialMap {
 public:
  static PartialMap from_nodes(std::vector<Node> nodes);
  // t -> image_of_lo + slope * (t - lo) on [lo, hi].
  static PartialMap affine(const Dyadic& lo, const Dyadic& hi, Pow2 slope,
                           const Dyadic& image_of_lo);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Pow2>& slopes() const { return slopes_; }
  Interval source() const { return {nodes_.front().x, nodes_.back().x}; }
  Interval target() const { return {nodes_.front().y, nodes_.back().y}; }

  Dyadic eval(const Dyadic& t) const;
  Rat eval(const Rat& t) const;
  Dyadic eval_inverse(const Dyadic& v) const;
  Rat eval_inverse(const Rat& v) const;

  // Slope of the segment to the given side of t.
  Pow2 slope_at(const Rat& t, Side side) const;

  friend bool operator==(const PartialMap&, const PartialMap&) = default;

 private:
  friend class PLMap;
  PartialMap() = default;
  void canonicalize();
  std::size_t segment_index(const Rat& t, Side side) const;

  std::vector<Node> nodes_;
  std::vector<Pow2> slopes_;
};

class PLMap {
 public:
  // Validates and canonicalizes. Throws InvalidMap naming the offending
  // segment on non-monotone input, non-power-of-two slopes, or endpoints off
  // the diagonal.
  static PLMap from_nodes(std::vector<Node> nodes);
  static PLMap identity(const Interval& domain = Interval::unit());

  const std::vector<Node>& nodes() const { return graph_.nodes_; }
  const std::vector<Pow2>& slopes() const { return graph_.slopes_; }
  const PartialMap& graph() const { return graph_; }
  Interval domain() const { return graph_.source(); }

  bool is_identity() const { return graph_.nodes_.size() == 2 && graph_.slopes_[0].is_one(); }

  Dyadic operator()(const Dyadic& t) const { return graph_.eval(t); }
  Rat operator()(const Rat& t) const { return graph_.eval(t); }
  Dyadic eval_inverse(const Dyadic& v) const { return graph_.eval_inverse(v); }
  Rat eval_inverse(const Rat& v) const { return graph_.eval_inverse(v); }

  // Interior breakpoints (x coordinates of interior nodes).
  std::vector<Dyadic> breakpoints() const;

  std::string to_string() const;

  friend bool operator==(const PLMap& a, const PLMap& b) { return a.graph_ == b.graph_; }

 private:
  explicit PLMap(PartialMap g) : graph_(std::move(g)) {}
  PartialMap graph_;
};

// --- fixed-point sets -------------------------------------------------------

struct IsolatedPoint {
  Rat at;
  friend bool operator==(const IsolatedPoint&, const IsolatedPoint&) = default;
};
struct ClosedInterval {
  Dyadic lo;
  Dyadic hi;
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};
using FixedComponent = std::variant<IsolatedPoint, ClosedInterval>;

class FixedSet {
 public:
  FixedSet() = default;
  explicit FixedSet(std::vector<FixedComponent> components)
      : components_(std::move(components)) {}

  const std::vector<FixedComponent>& components() const { return components_; }

  // Boundary points in increasing order; interval components contribute both
  // ends, so the domain endpoints are always present.
  std::vector<Rat> boundary() const;
  // The dyadic part of boundary().
  std::vector<Dyadic> dyadic_boundary() const;

  bool contains(const Rat& t) const;
  bool is_discrete() const;
  bool has_interval() const { return !is_discrete(); }

  friend bool operator==(const FixedSet&, const FixedSet&) = default;

 private:
  std::vector<FixedComponent> components_;
};

enum class Orientation { Identity, Below, Above, Mixed };

// Square neighbourhood of an endpoint on which two maps agree and are linear
// with a common slope other than 1.
struct LinearityBox {
  Dyadic anchor;
  Dyadic extent;
  Pow2 slope;
  friend bool operator==(const LinearityBox&, const LinearityBox&) = default;
};

// --- algebra ---------------------------------------------------------------

Rat eval(const PLMap& f, const Rat& t);
// f o g (apply g first). Domains must agree.
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
// f o g for partial maps; the target of g must be the source of f.
PartialMap compose(const PartialMap& f, const PartialMap& g);
PartialMap invert(const PartialMap& f);
// phi o f o phi^-1, an element of PL_2(phi.target()).
PLMap transport(const PLMap& f, const PartialMap& phi);
PLMap power(const PLMap& f, std::int64_t n);
// g^-1 o f o g.
PLMap conjugate_by(const PLMap& f, const PLMap& g);

FixedSet fixed_set(const PLMap& f);
Orientation classify(const PLMap& f, const Interval& J);

Pow2 one_sided_slope(const PLMap& f, const Rat& t, Side side);

std::optional<LinearityBox> initial_box(const PLMap& y, const PLMap& z);
std::optional<LinearityBox> final_box(const PLMap& y, const PLMap& z);

// --- construction ----------------------------------------------------------

// PL_2 bijection [src.lo, src.hi] -> [dst.lo, dst.hi] built from binary
// expansions of the two lengths.
PartialMap cell_map(const Interval& src, const Interval& dst);

// f with f(xs[i]) == ys[i]; both partitions strictly increasing with common
// first and last points.
PLMap from_partition(std::span<const Dyadic> xs, std::span<const Dyadic> ys);

// A map on `domain` agreeing with each segment on its source interval. The
// segments must be ordered with pairwise disjoint sources and targets; a
// segment may touch the domain boundary only if it fixes that endpoint.
PLMap extend_partial(const Interval& domain, std::span<const PartialMap> segments);

// --- restriction and gluing ------------------------------------------------

// Restriction to a sub-interval J with f(J) == J.
PLMap restrict(const PLMap& f, const Interval& J);
// The graph of f over [lo, hi] (not necessarily invariant).
PartialMap restrict_partial(const PLMap& f, const Dyadic& lo, const Dyadic& hi);
// Identity outside the domain of f.
PLMap extend_by_identity(const PLMap& f, const Interval& domain);
// Concatenates maps on consecutive intervals.
PLMap glue(std::span<const PLMap> pieces);
// t -> lo + hi - t conjugation.
PLMap reflect(const PLMap& f);

}  // namespace plconj

#endif  // PLCONJ_PLMAP_HPP_
