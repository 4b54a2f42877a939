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

// Conjugacy decision in PL_2(J) with witnesses.

#ifndef PLCONJ_CONJ_HPP_
#define PLCONJ_CONJ_HPP_

#include <optional>
#include <string_view>

#include "plconj/plmap.hpp"

namespace plconj {

struct ConjWitness {
  PLMap conjugator;
};

enum class Obstruction {
  None,
  FixedSetMismatch,  // no g carries D(y) onto D(z)
  SlopeMismatch,     // endpoint slopes of some cell differ
  Exhausted,         // no candidate initial slope produced a conjugator
};
std::string_view to_string(Obstruction o);

struct ConjResult {
  std::optional<ConjWitness> witness;
  Obstruction obstruction = Obstruction::None;
};

// g^-1 y g == z.
bool verify(const PLMap& y, const PLMap& z, const PLMap& g);

// For y, z in PL_2^0(J) with D(y) == D(z).
ConjResult conjugate_pl20_explained(const PLMap& y, const PLMap& z);
std::optional<ConjWitness> conjugate_pl20(const PLMap& y, const PLMap& z);

ConjResult conjugate_explained(const PLMap& y, const PLMap& z);
std::optional<ConjWitness> conjugate(const PLMap& y, const PLMap& z);

}  // namespace plconj

#endif  // PLCONJ_CONJ_HPP_
