// Copyright 2026 The Authors.
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

#include "minrank/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "minrank/errors.hpp"

namespace minrank {

using nlohmann::json;

WeightFn Instance::weights_or_ones() const {
  if (weights) return *weights;
  return WeightFn(static_cast<std::size_t>(n), Rational(1));
}

std::string Instance::name(Element e) const {
  if (static_cast<std::size_t>(e) < names.size()) return names[static_cast<std::size_t>(e)];
  return std::to_string(e);
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw DataError(field + ": " + message);
}

const json& member(const json& object, const char* key, const std::string& field) {
  if (!object.is_object()) fail(field, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) fail(field + "." + key, "missing");
  return *it;
}

int to_int(const json& value, const std::string& field) {
  if (!value.is_number_integer()) fail(field, "expected an integer");
  return value.get<int>();
}

Rational to_rational(const json& value, const std::string& field) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (!value.is_string()) fail(field, "expected a rational string such as \"3/4\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const DataError& e) {
    fail(field, e.what());
  }
}

std::vector<Element> to_elements(const json& value, int n, const std::string& field) {
  if (!value.is_array()) fail(field, "expected an array of elements");
  std::vector<Element> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    const int e = to_int(value[i], f);
    if (e < 0 || e >= n) fail(f, "element " + std::to_string(e) + " outside [0, n)");
    out.push_back(e);
  }
  return out;
}

Matroid parse_matroid(const json& spec, int n, const std::string& field) {
  const std::string kind = [&] {
    const json& k = member(spec, "kind", field);
    if (!k.is_string()) fail(field + ".kind", "expected a string");
    return k.get<std::string>();
  }();
  try {
    if (kind == "uniform") {
      return Matroid::uniform(n, to_int(member(spec, "rank", field), field + ".rank"));
    }
    if (kind == "partition") {
      const json& blocks = member(spec, "blocks", field);
      const json& caps = member(spec, "capacities", field);
      if (!blocks.is_array() || !caps.is_array()) fail(field, "blocks and capacities are arrays");
      std::vector<std::vector<Element>> b;
      std::vector<int> c;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        b.push_back(to_elements(blocks[i], n, field + ".blocks[" + std::to_string(i) + "]"));
      }
      for (std::size_t i = 0; i < caps.size(); ++i) {
        c.push_back(to_int(caps[i], field + ".capacities[" + std::to_string(i) + "]"));
      }
      return Matroid::partition(n, std::move(b), std::move(c));
    }
    if (kind == "graphic") {
      const int vertices = to_int(member(spec, "vertices", field), field + ".vertices");
      const json& edges = member(spec, "edges", field);
      if (!edges.is_array()) fail(field + ".edges", "expected an array");
      std::vector<std::pair<int, int>> e;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string f = field + ".edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) fail(f, "expected [u, v]");
        e.emplace_back(to_int(edges[i][0], f + "[0]"), to_int(edges[i][1], f + "[1]"));
      }
      if (static_cast<int>(e.size()) != n) fail(field + ".edges", "needs exactly n edges");
      return Matroid::graphic(vertices, std::move(e));
    }
    if (kind == "linear") {
      const json& rows = member(spec, "matrix", field);
      if (!rows.is_array()) fail(field + ".matrix", "expected an array of rows");
      std::vector<std::vector<Rational>> matrix;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string f = field + ".matrix[" + std::to_string(r) + "]";
        if (!rows[r].is_array()) fail(f, "expected a row array");
        std::vector<Rational> row;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
          row.push_back(to_rational(rows[r][c], f + "[" + std::to_string(c) + "]"));
        }
        matrix.push_back(std::move(row));
      }
      return Matroid::linear(std::move(matrix), n);
    }
    if (kind == "explicit") {
      const json& form = member(spec, "form", field);
      ExplicitKind::Form f;
      if (form == "independent-sets") {
        f = ExplicitKind::Form::kIndependentSets;
      } else if (form == "bases") {
        f = ExplicitKind::Form::kBases;
      } else {
        fail(field + ".form", "expected \"independent-sets\" or \"bases\"");
      }
      const json& family = member(spec, "family", field);
      if (!family.is_array()) fail(field + ".family", "expected an array of sets");
      std::vector<ElementSet> sets;
      for (std::size_t i = 0; i < family.size(); ++i) {
        sets.push_back(ElementSet::from_vector(
            to_elements(family[i], n, field + ".family[" + std::to_string(i) + "]")));
      }
      return Matroid::explicit_family(n, std::move(sets), f);
    }
  } catch (const DataError& e) {
    const std::string what = e.what();
    if (what.rfind(field, 0) == 0) throw;
    fail(field, what);
  }
  fail(field + ".kind", "unknown kind '" + kind + "'");
}

json emit_matroid(const Matroid& m) {
  json out;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, UniformKind>) {
          out = {{"kind", "uniform"}, {"rank", k.rank}};
        } else if constexpr (std::is_same_v<K, PartitionKind>) {
          out = {{"kind", "partition"}, {"blocks", k.blocks}, {"capacities", k.capacities}};
        } else if constexpr (std::is_same_v<K, GraphicKind>) {
          json edges = json::array();
          for (auto [u, v] : k.edges) edges.push_back({u, v});
          out = {{"kind", "graphic"}, {"vertices", k.vertices}, {"edges", edges}};
        } else if constexpr (std::is_same_v<K, LinearKind>) {
          json rows = json::array();
          for (const auto& row : k.matrix) {
            json r = json::array();
            for (const Rational& v : row) r.push_back(format_rational(v));
            rows.push_back(r);
          }
          out = {{"kind", "linear"}, {"matrix", rows}};
        } else {
          json family = json::array();
          for (ElementSet s : k.family) family.push_back(s.to_vector());
          out = {{"kind", "explicit"},
                 {"form", k.form == ExplicitKind::Form::kBases ? "bases" : "independent-sets"},
                 {"family", family}};
        }
      },
      m.kind());
  return out;
}

void check_valid(const Matroid& m, const std::string& field) {
  const ValidationReport report = validate(m);
  if (report.ok) return;
  std::string witnesses;
  for (ElementSet w : report.witnesses) witnesses += " " + w.to_string();
  fail(field, report.axiom + " fails: " + report.message +
                  (witnesses.empty() ? "" : " (witnesses" + witnesses + ")"));
}

int line_of(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace

Instance parse_instance(const std::string& text, const LoadOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  const int version = to_int(member(doc, "version", "instance"), "instance.version");
  if (version != kInstanceVersion) {
    fail("instance.version", "unsupported version " + std::to_string(version));
  }
  Instance inst{.n = to_int(member(doc, "n", "instance"), "instance.n"),
                .names = {},
                .weights = std::nullopt,
                .pair = {Matroid::uniform(0, 0), Matroid::uniform(0, 0)}};
  if (inst.n < 0 || inst.n > kMaxElements) fail("instance.n", "must lie in [0, 64]");
  if (const auto it = doc.find("names"); it != doc.end()) {
    if (!it->is_array() || static_cast<int>(it->size()) != inst.n) {
      fail("instance.names", "expected n strings");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) fail("instance.names[" + std::to_string(i) + "]", "expected a string");
      inst.names.push_back((*it)[i].get<std::string>());
    }
  }
  if (const auto it = doc.find("weights"); it != doc.end()) {
    if (!it->is_array() || static_cast<int>(it->size()) != inst.n) {
      fail("instance.weights", "expected n rationals");
    }
    WeightFn w;
    for (std::size_t i = 0; i < it->size(); ++i) {
      w.push_back(to_rational((*it)[i], "instance.weights[" + std::to_string(i) + "]"));
    }
    inst.weights = std::move(w);
  }
  const json& matroids = member(doc, "matroids", "instance");
  if (!matroids.is_array() || matroids.size() != 2) {
    fail("instance.matroids", "expected exactly two matroid specs");
  }
  Matroid first = parse_matroid(matroids[0], inst.n, "instance.matroids[0]");
  Matroid second = parse_matroid(matroids[1], inst.n, "instance.matroids[1]");
  if (options.validate) {
    check_valid(first, "instance.matroids[0]");
    check_valid(second, "instance.matroids[1]");
  }
  inst.pair = MatroidPair{std::move(first), std::move(second)};
  return inst;
}

Instance load_instance(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_instance(text.str(), options);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string emit_instance(const Instance& instance) {
  json doc;
  doc["version"] = kInstanceVersion;
  doc["n"] = instance.n;
  if (!instance.names.empty()) doc["names"] = instance.names;
  if (instance.weights) {
    json w = json::array();
    for (const Rational& v : *instance.weights) w.push_back(format_rational(v));
    doc["weights"] = w;
  }
  doc["matroids"] = {emit_matroid(instance.pair.first), emit_matroid(instance.pair.second)};
  return doc.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError(path + ": cannot write file");
  out << emit_instance(instance);
}

ElementSet parse_set(const std::string& text, int n) {
  ElementSet set;
  try {
    if (!text.empty() && text.front() == '{') {
      if (text.back() != '}') throw DataError("unterminated set literal");
      std::stringstream body(text.substr(1, text.size() - 2));
      std::string item;
      while (std::getline(body, item, ',')) {
        if (item.find_first_not_of(' ') == std::string::npos) continue;
        std::size_t used = 0;
        const int e = std::stoi(item, &used);
        if (item.find_first_not_of(' ', used) != std::string::npos) {
          throw DataError("bad element '" + item + "'");
        }
        if (e < 0 || e >= n) throw DataError("element " + item + " outside [0, n)");
        set.insert(e);
      }
      return set;
    }
    int base = 10;
    std::string digits = text;
    if (text.rfind("0b", 0) == 0) {
      base = 2;
      digits = text.substr(2);
    } else if (text.rfind("0x", 0) == 0) {
      base = 16;
      digits = text.substr(2);
    }
    std::size_t used = 0;
    const unsigned long long bits = std::stoull(digits, &used, base);
    if (used != digits.size() || digits.empty()) throw DataError("trailing characters");
    set = ElementSet(bits);
  } catch (const std::logic_error&) {
    throw DataError("malformed set '" + text + "'");
  }
  if (!set.is_subset_of(ElementSet::universe(n))) {
    throw DataError("set '" + text + "' leaves the ground set of size " + std::to_string(n));
  }
  return set;
}

}  // namespace minrank
