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

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "plconj/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw plconj::cli::InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using plconj::cli::json;
  CLI::App app{"Exact decision procedures for Thompson's group F acting on [0,1]"};
  std::string command;
  std::vector<std::string> operands;
  std::string in_path = "-";
  bool as_json = false;
  std::uint64_t seed = 0;
  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(plconj::cli::commands()));
  app.add_option("operands", operands, "reach only: the two points alpha beta");
  auto* in_opt = app.add_option("--in", in_path, "Input document file, or - for stdin");
  app.add_flag("--json", as_json, "Print the result document as JSON");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for the gen command");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  json input = json::object();
  try {
    if (command == "reach" && !operands.empty()) {
      if (operands.size() != 2) throw plconj::cli::InputError("reach takes two points");
      input = {{"alpha", operands[0]}, {"beta", operands[1]}};
    } else if (!operands.empty()) {
      throw plconj::cli::InputError("only reach takes positional operands");
    } else if (command != "gen" || in_opt->count() > 0) {
      std::string text = slurp(in_path);
      try {
        input = json::parse(text);
      } catch (const json::parse_error& e) {
        throw plconj::cli::InputError("JSON parse error at byte " + std::to_string(e.byte));
      }
    }
  } catch (const plconj::cli::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::optional<std::uint64_t> s;
  if (seed_opt->count() > 0) s = seed;
  plconj::cli::Output out = plconj::cli::run(command, input, s);
  if (out.code == 2) std::cerr << out.text;
  if (as_json && command != "plot") {
    std::cout << out.doc.dump(2) << "\n";
  } else if (out.code != 2) {
    std::cout << out.text;
  }
  return out.code;
}
