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

#include "plconj/cli.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

#include "plconj/conj.hpp"
#include "plconj/reach.hpp"
#include "plconj/simconj.hpp"

namespace plconj::cli {

namespace {

PLMap fixture_x0() {
  return PLMap::from_nodes({{0, 0}, {parse_dyadic("1/2"), parse_dyadic("1/4")},
                            {parse_dyadic("3/4"), parse_dyadic("1/2")}, {1, 1}});
}

PLMap fixture_x1() {
  return PLMap::from_nodes({{0, 0}, {parse_dyadic("1/2"), parse_dyadic("1/2")},
                            {parse_dyadic("3/4"), parse_dyadic("5/8")},
                            {parse_dyadic("7/8"), parse_dyadic("3/4")}, {1, 1}});
}

PLMap generator(std::int64_t n) {
  if (n == 0) return fixture_x0();
  return conjugate_by(fixture_x1(), power(fixture_x0(), n - 1));
}

std::string text_of(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw InputError(std::string(what) + " must be a fraction string");
}

Rat rat_of(const json& v, const char* what) {
  try {
    return parse_rat(text_of(v, what));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::vector<PLMap> elements(const json& doc, const char* key) {
  const json& arr = field(doc, key);
  if (!arr.is_array()) throw InputError(std::string("field \"") + key + "\" must be a list");
  std::vector<PLMap> out;
  for (const auto& e : arr) out.push_back(parse_element(e));
  return out;
}

PLMap element(const json& doc, const char* key) {
  try {
    return parse_element(field(doc, key));
  } catch (const InputError& e) {
    throw InputError(std::string(key) + ": " + e.what());
  }
}

std::int64_t integer(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

bool is_node_list(const json& v) {
  if (!v.is_array() || v.size() < 2) return false;
  return std::all_of(v.begin(), v.end(), [](const json& p) {
    return p.is_array() && p.size() == 2 && p[0].is_string() && p[1].is_string();
  });
}

void render(const json& v, const std::string& indent, std::ostringstream& os) {
  for (const auto& [key, val] : v.items()) {
    os << indent << key << ":";
    if (is_node_list(val)) {
      for (const auto& p : val) os << " (" << p[0].get<std::string>() << "," << p[1].get<std::string>() << ")";
      os << "\n";
    } else if (val.is_object()) {
      os << "\n";
      render(val, indent + "  ", os);
    } else if (val.is_array() && std::any_of(val.begin(), val.end(), [](const json& e) {
                 return e.is_object() || is_node_list(e);
               })) {
      os << "\n";
      for (const auto& e : val) {
        if (e.is_object()) {
          os << indent << "  -\n";
          render(e, indent + "    ", os);
        } else {
          os << indent << "  -";
          for (const auto& p : e) os << " (" << p[0].get<std::string>() << "," << p[1].get<std::string>() << ")";
          os << "\n";
        }
      }
    } else if (val.is_string()) {
      os << " " << val.get<std::string>() << "\n";
    } else {
      os << " " << val.dump() << "\n";
    }
  }
}

Output finish(int code, json doc) {
  std::ostringstream os;
  render(doc, "", os);
  return Output{code, std::move(doc), os.str()};
}

Output yes(json doc) { return finish(0, std::move(doc)); }
Output no(json doc) { return finish(1, std::move(doc)); }

std::string kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Trivial:
      return "trivial";
    case FactorKind::Cyclic:
      return "cyclic";
    case FactorKind::Full:
      return "full";
  }
  return "";
}

// Random element of PL_2(I) with nodes on the 2^-8 grid.
PLMap random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 4), grid(1, 255);
  auto points = [&] {
    std::set<int> s;
    int k = count(rng);
    while (static_cast<int>(s.size()) < k) s.insert(grid(rng));
    return s;
  };
  std::set<int> xs = points(), ys;
  while (ys.size() != xs.size()) {
    ys = points();
    if (ys.size() > xs.size()) ys.erase(std::prev(ys.end()));
  }
  std::vector<Dyadic> px{0}, py{0};
  for (int v : xs) px.emplace_back(Int(v), 8);
  for (int v : ys) py.emplace_back(Int(v), 8);
  px.emplace_back(1);
  py.emplace_back(1);
  return from_partition(px, py);
}

Output cmd_eval(const json& in) {
  PLMap f = element(in, "f");
  Rat t = rat_of(field(in, "t"), "t");
  if (!f.domain().contains(t)) throw InputError("t is outside the domain");
  return yes({{"value", to_string(f(t))}});
}

Output cmd_compose(const json& in) {
  PLMap f = element(in, "f"), g = element(in, "g");
  if (f.domain() != g.domain()) throw InputError("domains differ");
  return yes({{"result", to_json(compose(f, g))}});
}

Output cmd_reach(const json& in) {
  Rat a = rat_of(field(in, "alpha"), "alpha"), b = rat_of(field(in, "beta"), "beta");
  if (a <= 0 || a >= 1 || b <= 0 || b >= 1) throw InputError("points must lie in (0,1)");
  std::vector<Rat> as{a}, bs{b};
  if (can_map(a, b)) {
    auto g = build_tuple_map(as, bs);
    return yes({{"reachable", true}, {"witness", to_json(*g)}});
  }
  OddDecomposition da = odd_decompose(a), db = odd_decompose(b);
  std::string why = da.n != db.n ? "odd denominators differ" : "exponent congruence unsolvable";
  return no({{"reachable", false}, {"obstruction", why}});
}

Output cmd_conjugate(const json& in) {
  PLMap y = element(in, "y"), z = element(in, "z");
  if (y.domain() != z.domain()) throw InputError("domains differ");
  ConjResult r = conjugate_explained(y, z);
  if (r.witness) return yes({{"conjugate", true}, {"witness", to_json(r.witness->conjugator)}});
  return no({{"conjugate", false}, {"obstruction", to_string(r.obstruction)}});
}

Output cmd_simconj(const json& in) {
  std::vector<PLMap> xs = elements(in, "xs"), ys = elements(in, "ys");
  if (xs.empty() || xs.size() != ys.size()) throw InputError("xs and ys must be non-empty lists of equal length");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].domain() != xs[0].domain() || ys[i].domain() != xs[0].domain())
      throw InputError("domains differ");
  }
  if (auto g = simultaneous_conjugate(xs, ys)) return yes({{"conjugate", true}, {"witness", to_json(*g)}});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ConjResult r = conjugate_explained(xs[i], ys[i]);
    if (!r.witness) {
      return no({{"conjugate", false},
                 {"obstruction", "coordinate " + std::to_string(i) + ": " + std::string(to_string(r.obstruction))}});
    }
  }
  return no({{"conjugate", false}, {"obstruction", "no common conjugator in the centralizer of the matched prefix"}});
}

Output cmd_roots(const json& in) {
  PLMap f = element(in, "f");
  if (f.is_identity()) throw InputError("the identity has infinitely many roots");
  if (in.contains("n")) {
    std::int64_t n = integer(in, "n");
    if (n < 1) throw InputError("n must be positive");
    if (auto h = nth_root(f, n)) return yes({{"n", n}, {"root", to_json(*h)}});
    return no({{"n", n}, {"obstruction", "no root of this degree"}});
  }
  json roots = json::array();
  for (const auto& [n, h] : all_roots(f)) roots.push_back({{"n", n}, {"root", to_json(h)}});
  return yes({{"roots", roots}});
}

Output cmd_verify(const json& in) {
  PLMap g = element(in, "g");
  std::vector<PLMap> xs, ys;
  if (in.contains("xs")) {
    xs = elements(in, "xs");
    ys = elements(in, "ys");
    if (xs.size() != ys.size()) throw InputError("xs and ys must have equal length");
  } else {
    xs.push_back(element(in, "y"));
    ys.push_back(element(in, "z"));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].domain() != g.domain() || ys[i].domain() != g.domain()) throw InputError("domains differ");
    if (!verify(xs[i], ys[i], g)) {
      return no({{"valid", false}, {"obstruction", "relation " + std::to_string(i) + " fails"}});
    }
  }
  return yes({{"valid", true}});
}

Output cmd_plot(const json& in) {
  PLMap f = element(in, "f");
  std::ostringstream os;
  os << "x\ty\tslope\n";
  const auto& nodes = f.nodes();
  const auto& slopes = f.slopes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    os << nodes[i].x << "\t" << nodes[i].y << "\t";
    if (i < slopes.size()) {
      os << to_string(slopes[i].to_rat());
    } else {
      os << "-";
    }
    os << "\n";
  }
  json rows = json::array();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    rows.push_back({nodes[i].x.to_string(), nodes[i].y.to_string(),
                    i < slopes.size() ? to_string(slopes[i].to_rat()) : "-"});
  }
  return Output{0, {{"rows", rows}}, os.str()};
}

Output cmd_gen(const json& in, std::optional<std::uint64_t> seed) {
  std::mt19937_64 rng(seed.value_or(0));
  std::string kind = in.is_object() && in.contains("kind") ? text_of(in["kind"], "kind") : "conjugacy";
  PLMap g = random_element(rng);
  if (kind == "conjugacy") {
    PLMap y = random_element(rng);
    return yes({{"kind", kind}, {"y", to_json(y)}, {"z", to_json(conjugate_by(y, g))}, {"g", to_json(g)}});
  }
  if (kind == "simconj") {
    std::int64_t k = in.contains("k") ? integer(in, "k") : 2;
    if (k < 1 || k > 16) throw InputError("k must be between 1 and 16");
    json xs = json::array(), ys = json::array();
    for (std::int64_t i = 0; i < k; ++i) {
      PLMap x = random_element(rng);
      xs.push_back(to_json(x));
      ys.push_back(to_json(conjugate_by(x, g)));
    }
    return yes({{"kind", kind}, {"xs", xs}, {"ys", ys}, {"g", to_json(g)}});
  }
  throw InputError("unknown kind \"" + kind + "\" (expected conjugacy or simconj)");
}

Output dispatch(std::string_view command, const json& in, std::optional<std::uint64_t> seed) {
  if (command == "eval") return cmd_eval(in);
  if (command == "compose") return cmd_compose(in);
  if (command == "invert") return yes({{"result", to_json(invert(element(in, "f")))}});
  if (command == "power") {
    PLMap f = element(in, "f");
    return yes({{"result", to_json(power(f, integer(in, "n")))}});
  }
  if (command == "fixedset") return yes(to_json(fixed_set(element(in, "f"))));
  if (command == "reach") return cmd_reach(in);
  if (command == "conjugate") return cmd_conjugate(in);
  if (command == "simconj") return cmd_simconj(in);
  if (command == "roots") return cmd_roots(in);
  if (command == "centralizer") return yes(to_json(centralizer(element(in, "f"))));
  if (command == "intersect") {
    std::vector<PLMap> xs = elements(in, "xs");
    if (xs.empty()) throw InputError("xs must be non-empty");
    for (const auto& x : xs) {
      if (x.domain() != xs[0].domain()) throw InputError("domains differ");
    }
    return yes(to_json(intersect_centralizers(xs)));
  }
  if (command == "reduce2") {
    CentralizerDesc desc;
    if (in.contains("descriptor")) {
      desc = parse_descriptor(in["descriptor"]);
    } else {
      std::vector<PLMap> xs = elements(in, "xs");
      if (xs.empty()) throw InputError("xs must be non-empty");
      desc = intersect_centralizers(xs);
    }
    auto [w1, w2] = reduce_to_two(desc);
    return yes({{"w1", to_json(w1)}, {"w2", to_json(w2)}});
  }
  if (command == "verify") return cmd_verify(in);
  if (command == "plot") return cmd_plot(in);
  if (command == "gen") return cmd_gen(in, seed);
  throw InputError("unknown command \"" + std::string(command) + "\"");
}

}  // namespace

PLMap parse_word(std::string_view word) {
  const PLMap x0 = fixture_x0();
  PLMap out = PLMap::identity();
  std::size_t i = 0;
  auto fail = [&](std::size_t at, const std::string& msg) -> InputError {
    return InputError("word position " + std::to_string(at) + ": " + msg);
  };
  auto read_int = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < word.size() && (word[i] == '-' || word[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
    if (i == digits || i - digits > 6) throw fail(start, "expected a small integer");
    return std::stoll(std::string(word.substr(start, i - start)));
  };
  bool any = false;
  while (true) {
    while (i < word.size() && (std::isspace(static_cast<unsigned char>(word[i])) || word[i] == '*')) ++i;
    if (i == word.size()) break;
    std::size_t start = i;
    PLMap factor = PLMap::identity();
    if (word.substr(i, 2) == "id") {
      i += 2;
    } else if (word[i] == 'x') {
      ++i;
      factor = generator(read_int(false));
    } else {
      throw fail(start, "expected a generator x<n> or id");
    }
    if (i < word.size() && word[i] == '^') {
      ++i;
      factor = power(factor, read_int(true));
    }
    if (i < word.size() && !std::isspace(static_cast<unsigned char>(word[i])) && word[i] != '*')
      throw fail(i, std::string("unexpected character '") + word[i] + "'");
    out = compose(out, factor);
    any = true;
  }
  if (!any) throw InputError("empty word");
  return out;
}

PLMap parse_element(const json& doc) {
  if (doc.is_string()) return parse_word(doc.get<std::string>());
  if (doc.is_object()) {
    if (doc.contains("word")) return parse_word(text_of(doc["word"], "word"));
    if (doc.contains("nodes")) return parse_element(doc["nodes"]);
    throw InputError("element object needs \"nodes\" or \"word\"");
  }
  if (!doc.is_array()) throw InputError("element must be a node list, an object or a word");
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& p = doc[i];
    if (!p.is_array() || p.size() != 2) throw InputError("node " + std::to_string(i) + " must be a pair");
    try {
      nodes.push_back({parse_dyadic(text_of(p[0], "coordinate")), parse_dyadic(text_of(p[1], "coordinate"))});
    } catch (const std::invalid_argument& e) {
      throw InputError("node " + std::to_string(i) + ": " + e.what());
    }
  }
  try {
    return PLMap::from_nodes(std::move(nodes));
  } catch (const InvalidMap& e) {
    throw InputError(e.what());
  }
}

PLMap parse_element_text(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InputError("empty element");
  char c = text[first];
  if (c != '[' && c != '{' && c != '"') return parse_word(text);
  try {
    return parse_element(json::parse(text));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

json to_json(const PLMap& f) {
  json out = json::array();
  for (const auto& n : f.nodes()) out.push_back({n.x.to_string(), n.y.to_string()});
  return out;
}

json to_json(const FixedSet& d) {
  json comps = json::array();
  for (const auto& c : d.components()) {
    if (const auto* p = std::get_if<IsolatedPoint>(&c)) {
      comps.push_back({{"point", to_string(p->at)}});
    } else {
      const auto& iv = std::get<ClosedInterval>(c);
      comps.push_back({{"interval", {iv.lo.to_string(), iv.hi.to_string()}}});
    }
  }
  json boundary = json::array();
  for (const auto& r : d.boundary()) boundary.push_back(to_string(r));
  return {{"components", comps}, {"boundary", boundary}};
}

json to_json(const CentralizerDesc& desc) {
  json partition = json::array();
  for (const auto& p : desc.partition) partition.push_back(p.to_string());
  json factors = json::array();
  for (const auto& f : desc.factors) {
    json e = {{"interval", {f.interval.lo.to_string(), f.interval.hi.to_string()}}, {"kind", kind_name(f.kind)}};
    if (f.generator) e["generator"] = to_json(*f.generator);
    factors.push_back(e);
  }
  return {{"domain", {desc.domain.lo.to_string(), desc.domain.hi.to_string()}},
          {"partition", partition},
          {"factors", factors},
          {"m", desc.m()},
          {"n", desc.n()}};
}

CentralizerDesc parse_descriptor(const json& doc) {
  auto dyadic = [](const json& v) {
    try {
      return parse_dyadic(text_of(v, "descriptor coordinate"));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  };
  CentralizerDesc desc;
  const json& partition = field(doc, "partition");
  if (!partition.is_array() || partition.size() < 2) throw InputError("partition needs at least two points");
  for (const auto& p : partition) desc.partition.push_back(dyadic(p));
  if (!std::is_sorted(desc.partition.begin(), desc.partition.end()) ||
      std::adjacent_find(desc.partition.begin(), desc.partition.end()) != desc.partition.end())
    throw InputError("partition must be strictly increasing");
  desc.domain = {desc.partition.front(), desc.partition.back()};
  const json& factors = field(doc, "factors");
  if (!factors.is_array() || factors.size() + 1 != desc.partition.size())
    throw InputError("factors must have one entry per partition cell");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Interval cell{desc.partition[i], desc.partition[i + 1]};
    std::string kind = text_of(field(factors[i], "kind"), "kind");
    CentralizerFactor f{cell, FactorKind::Trivial, std::nullopt};
    if (kind == "cyclic") {
      f.kind = FactorKind::Cyclic;
      f.generator = element(factors[i], "generator");
      if (f.generator->domain() != cell) throw InputError("generator domain differs from its cell");
    } else if (kind == "full") {
      f.kind = FactorKind::Full;
    } else if (kind != "trivial") {
      throw InputError("unknown factor kind \"" + kind + "\"");
    }
    desc.factors.push_back(std::move(f));
  }
  return desc;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> all{"eval",   "compose",     "invert",    "power",   "fixedset",
                                            "reach",  "conjugate",   "simconj",   "roots",   "centralizer",
                                            "intersect", "reduce2",  "verify",    "plot",    "gen"};
  return all;
}

Output run(std::string_view command, const json& input, std::optional<std::uint64_t> seed) {
  try {
    return dispatch(command, input, seed);
  } catch (const InputError& e) {
    return Output{2, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n"};
  } catch (const json::exception& e) {
    return Output{2, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return Output{2, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace plconj::cli
