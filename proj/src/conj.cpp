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

#include "plconj/conj.hpp"

#include <stdexcept>
#include <vector>

#include "plconj/reach.hpp"
#include "plconj/stair.hpp"

namespace plconj {

std::string_view to_string(Obstruction o) {
  switch (o) {
    case Obstruction::None: return "none";
    case Obstruction::FixedSetMismatch: return "fixed-set mismatch";
    case Obstruction::SlopeMismatch: return "endpoint slope mismatch";
    case Obstruction::Exhausted: return "candidate slopes exhausted";
  }
  return "unknown";
}

bool verify(const PLMap& y, const PLMap& z, const PLMap& g) {
  if (y.domain() != z.domain() || y.domain() != g.domain()) return false;
  return compose(invert(g), compose(y, g)) == z;
}

ConjResult conjugate_pl20_explained(const PLMap& y, const PLMap& z) {
  if (y == z) return {ConjWitness{PLMap::identity(y.domain())}, Obstruction::None};
  if (y.slopes().front() != z.slopes().front() || y.slopes().back() != z.slopes().back())
    return {std::nullopt, Obstruction::SlopeMismatch};
  PLMap a = y, b = z;
  if (a.slopes().front().exp > 0) {
    a = invert(a);
    b = invert(b);
  }
  const std::int64_t u = a.slopes().front().exp;
  for (std::int64_t e = u; e < 0; ++e) {
    if (auto g = stair_pl20(a, b, StairParams{Pow2{e}})) return {ConjWitness{*g}, Obstruction::None};
  }
  return {std::nullopt, Obstruction::Exhausted};
}

std::optional<ConjWitness> conjugate_pl20(const PLMap& y, const PLMap& z) {
  return conjugate_pl20_explained(y, z).witness;
}

ConjResult conjugate_explained(const PLMap& y, const PLMap& z) {
  if (y.domain() != z.domain()) throw std::invalid_argument("conjugate: domain mismatch");
  const Interval J = y.domain();
  if (y == z) return {ConjWitness{PLMap::identity(J)}, Obstruction::None};
  auto m = match_fixed_sets(y, z);
  if (!m) return {std::nullopt, Obstruction::FixedSetMismatch};
  PLMap yh = compose(*m, compose(y, invert(*m)));
  std::vector<Dyadic> cuts = fixed_set(z).dyadic_boundary();
  std::vector<PLMap> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Interval cell{cuts[i], cuts[i + 1]};
    PLMap zc = restrict(z, cell);
    if (zc.is_identity()) {
      pieces.push_back(zc);
      continue;
    }
    ConjResult r = conjugate_pl20_explained(restrict(yh, cell), zc);
    if (!r.witness) return r;
    pieces.push_back(r.witness->conjugator);
  }
  PLMap g = compose(invert(*m), glue(pieces));
  if (!verify(y, z, g)) throw std::logic_error("conjugate: glued witness failed verification");
  return {ConjWitness{g}, Obstruction::None};
}

std::optional<ConjWitness> conjugate(const PLMap& y, const PLMap& z) {
  return conjugate_explained(y, z).witness;
}

}  // namespace plconj
