#pragma once
/**
 * JSON and TSV serialization.
 *
 *   arrangement  {"kind":"flat"|"cyl","k":int,"lengths":[int,...]}
 *   drawing      {"n":int,"edges":[[i,j],...]}         (i < j)
 *   graph        drawing shape, plus optional "labels":[...]
 *   peel trace   {"steps":[{"vertex":i,"length":l,"degree":d,"forced":bool}],
 *                 "output":arrangement}
 *
 * Output uses insertion-ordered objects so identical values always produce
 * byte-identical text. Parsing failures raise SchemaError.
 */

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "model.hpp"

namespace visikit {

using Json = nlohmann::ordered_json;
using Arrangement = std::variant<FlatArrangement, CylArrangement>;

/// Input that does not match the expected schema (CLI exit code 2).
class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const Json& require_key(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string(what) + ": missing key \"" + key + "\"");
  return *it;
}

inline long long require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return j.get<long long>();
}

inline std::size_t require_index(const Json& j, const std::string& where) {
  const long long v = require_int(j, where);
  if (v < 0) throw SchemaError(where + ": expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

template <typename A>
Json arrangement_json(const A& a, const char* kind) {
  Json j;
  j["kind"] = kind;
  j["k"] = a.k;
  j["lengths"] = a.lengths;
  return j;
}

inline Json edges_json(const std::vector<Edge>& edges) {
  Json arr = Json::array();
  for (const Edge& e : edges) {
    const Edge o = e.ordered();
    arr.push_back(Json::array({o.u, o.v}));
  }
  return arr;
}

inline std::vector<Edge> parse_edges(const Json& j) {
  if (!j.is_array()) throw SchemaError("edges: expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) throw SchemaError(where + ": expected [i, j]");
    edges.emplace_back(require_index(j[i][0], where), require_index(j[i][1], where));
  }
  return edges;
}

} // namespace detail

inline Json to_json(const FlatArrangement& a) { return detail::arrangement_json(a, "flat"); }
inline Json to_json(const CylArrangement& a) { return detail::arrangement_json(a, "cyl"); }
inline Json to_json(const Arrangement& a) {
  return std::visit([](const auto& x) { return to_json(x); }, a);
}

inline Json to_json(const ConvexDrawing& d) {
  Json j;
  j["n"] = d.n;
  j["edges"] = detail::edges_json(d.edges);
  return j;
}

inline Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.n;
  j["edges"] = detail::edges_json(g.edges);
  return j;
}

inline Json to_json(const PeelStep& s) {
  Json j;
  j["vertex"] = s.vertex;
  j["length"] = s.length;
  j["degree"] = s.degree;
  j["forced"] = s.forced;
  return j;
}

inline Json to_json(const PeelTrace& t) {
  Json j;
  j["steps"] = Json::array();
  for (const PeelStep& s : t.steps) j["steps"].push_back(to_json(s));
  j["output"] = std::visit([](const auto& a) { return to_json(a); }, t.output);
  return j;
}

inline Arrangement parse_arrangement(const Json& j) {
  const Json& kind = detail::require_key(j, "kind", "arrangement");
  if (!kind.is_string()) throw SchemaError("arrangement.kind: expected \"flat\" or \"cyl\"");
  const long long k = detail::require_int(detail::require_key(j, "k", "arrangement"), "arrangement.k");
  const Json& lengths_json = detail::require_key(j, "lengths", "arrangement");
  if (!lengths_json.is_array()) throw SchemaError("arrangement.lengths: expected an array");
  std::vector<Length> lengths;
  for (std::size_t i = 0; i < lengths_json.size(); ++i)
    lengths.push_back(detail::require_int(lengths_json[i], "lengths[" + std::to_string(i) + "]"));
  if (k < 0 || k > 1'000'000) throw SchemaError("arrangement.k: out of range");
  const std::string s = kind.get<std::string>();
  if (s == "flat") return FlatArrangement{std::move(lengths), static_cast<int>(k)};
  if (s == "cyl") return CylArrangement{std::move(lengths), static_cast<int>(k)};
  throw SchemaError("arrangement.kind: expected \"flat\" or \"cyl\", got \"" + s + "\"");
}

inline ConvexDrawing parse_drawing(const Json& j) {
  const std::size_t n = detail::require_index(detail::require_key(j, "n", "drawing"), "drawing.n");
  return ConvexDrawing{n, detail::parse_edges(detail::require_key(j, "edges", "drawing"))};
}

inline Graph parse_graph(const Json& j) {
  const std::size_t n = detail::require_index(detail::require_key(j, "n", "graph"), "graph.n");
  Graph g{n, detail::parse_edges(detail::require_key(j, "edges", "graph"))};
  if (const auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array() || it->size() != n)
      throw SchemaError("graph.labels: expected an array of n labels");
  }
  return g;
}

inline PeelTrace parse_peel_trace(const Json& j) {
  const Json& steps = detail::require_key(j, "steps", "peel trace");
  if (!steps.is_array()) throw SchemaError("peel trace.steps: expected an array");
  PeelTrace t;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string where = "steps[" + std::to_string(i) + "]";
    const Json& s = steps[i];
    PeelStep step;
    step.vertex = detail::require_index(detail::require_key(s, "vertex", where.c_str()), where + ".vertex");
    step.length = detail::require_int(detail::require_key(s, "length", where.c_str()), where + ".length");
    step.degree = detail::require_index(detail::require_key(s, "degree", where.c_str()), where + ".degree");
    const Json& forced = detail::require_key(s, "forced", where.c_str());
    if (!forced.is_boolean()) throw SchemaError(where + ".forced: expected a boolean");
    step.forced = forced.get<bool>();
    t.steps.push_back(step);
  }
  std::visit([&](auto&& a) { t.output = a; }, parse_arrangement(detail::require_key(j, "output", "peel trace")));
  return t;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out.flush()) throw Error("cannot write " + path);
}

namespace detail {

inline std::string tsv_scalar(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

inline void tsv_emit(const std::string& key, const Json& v, std::string& out) {
  if (v.is_object()) {
    for (const auto& [k, sub] : v.items()) tsv_emit(key.empty() ? k : key + "." + k, sub, out);
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    std::string header = key;
    for (const auto& [k, sub] : v.front().items()) header += "\t" + k;
    out += header + "\n";
    for (const Json& row : v) {
      std::string line = key;
      for (const auto& [k, sub] : row.items()) line += "\t" + tsv_scalar(sub);
      out += line + "\n";
    }
  } else if (v.is_array() && !v.empty() && v.front().is_array()) {
    for (const Json& row : v) {
      std::string line = key;
      for (const Json& cell : row) line += "\t" + tsv_scalar(cell);
      out += line + "\n";
    }
  } else if (v.is_array()) {
    std::string line = key;
    for (const Json& cell : v) line += "\t" + tsv_scalar(cell);
    out += line + "\n";
  } else {
    out += key + "\t" + tsv_scalar(v) + "\n";
  }
}

} // namespace detail

/// Tab-separated rendering: one "key<TAB>values..." line per scalar or list;
/// lists of objects become a header row followed by one row per object.
inline std::string to_tsv(const Json& j) {
  std::string out;
  detail::tsv_emit("", j, out);
  return out;
}

} // namespace visikit
