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

// Document layer behind the plconj command-line tool: element parsing
// (node lists or generator words), JSON serialization and command dispatch.
//
// Every dyadic or rational value is written as a fraction string.

#ifndef PLCONJ_CLI_HPP_
#define PLCONJ_CLI_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "plconj/central.hpp"
#include "plconj/plmap.hpp"

namespace plconj::cli {

using nlohmann::json;

// Malformed input; the tool exits with status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Product of generator powers, e.g. "x0 x1^-1 x2". Juxtaposition is
// composition (the rightmost factor acts first), x_n = x0^-(n-1) x1 x0^(n-1)
// for n >= 2, and "id" is the identity.
PLMap parse_word(std::string_view word);
// A node list [["x","y"], ...], an object {"nodes": [...]} or {"word": "..."},
// or a JSON string holding a word.
PLMap parse_element(const json& doc);
// JSON text as above, or a bare word.
PLMap parse_element_text(std::string_view text);

json to_json(const PLMap& f);
json to_json(const FixedSet& d);
json to_json(const CentralizerDesc& desc);
CentralizerDesc parse_descriptor(const json& doc);

struct Output {
  int code = 0;  // 0 yes / ok, 1 no, 2 input error
  json doc;
  // Plain-text rendering used without --json.
  std::string text;
};

const std::vector<std::string>& commands();

// Runs one command on an input document. Never throws: input errors come
// back as code 2 with an "error" field.
Output run(std::string_view command, const json& input, std::optional<std::uint64_t> seed = {});

}  // namespace plconj::cli

#endif  // PLCONJ_CLI_HPP_
