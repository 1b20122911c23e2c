#include "hrecolor/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hrecolor {

using nlohmann::json;

namespace {

void require_keys(const json& j, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!required.count(key) && !optional.count(key)) {
      throw ParseError(where + ": unknown key '" + key + "'");
    }
  }
  for (const auto& key : required) {
    if (!j.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
  }
}

std::string as_name(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a vertex name string");
  return j.get<std::string>();
}

Graph parse_graph(const json& j, const std::string& where, bool allows_loops) {
  require_keys(j, {"vertices", "edges"}, {}, where);
  if (!j["vertices"].is_array()) throw ParseError(where + ".vertices: expected an array");
  if (!j["edges"].is_array()) throw ParseError(where + ".edges: expected an array");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(as_name(v, where + ".vertices"));
  std::vector<Graph::Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError(where + ".edges: expected pairs");
    edges.emplace_back(as_name(e[0], where + ".edges"), as_name(e[1], where + ".edges"));
  }
  try {
    return Graph(std::move(vertices), edges, allows_loops);
  } catch (const UnknownVertex& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const PreconditionError& e) {
    if (e.check() == "vertices-unique") throw ParseError(where + ": " + e.what());
    throw;
  }
}

Coloring parse_coloring(const json& j, const Graph& g, const Graph& h, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  std::map<std::string, std::string> names;
  for (const auto& [v, c] : j.items()) names.emplace(v, as_name(c, where));
  try {
    return make_coloring(g, h, names);
  } catch (const UnknownVertex& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Instance parse_instance(const json& j) {
  require_keys(j, {"G", "H", "alpha", "beta"}, {"q"}, "instance");
  // G is parsed with loops allowed so a looped G reaches validate_instance
  // and is reported as a failed precondition, not a syntax error.
  Instance inst{parse_graph(j["G"], "G", true), parse_graph(j["H"], "H", true), {}, {}, {}};
  inst.alpha = parse_coloring(j["alpha"], inst.g, inst.h, "alpha");
  inst.beta = parse_coloring(j["beta"], inst.g, inst.h, "beta");
  if (j.contains("q")) {
    const std::string q = as_name(j["q"], "q");
    auto v = inst.g.find(q);
    if (!v) throw ParseError("q: unknown vertex '" + q + "'");
    inst.q = *v;
  }
  return inst;
}

Instance parse_instance_text(const std::string& text) { return parse_instance(parse_text(text)); }

Graph parse_target_only(const json& j) {
  require_keys(j, {"H"}, {"G", "alpha", "beta", "q"}, "instance");
  return parse_graph(j["H"], "H", true);
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return {{"edges", edges}, {"vertices", g.names()}};
}

json instance_to_json(const Instance& inst) {
  json j = {{"G", graph_to_json(inst.g)},
            {"H", graph_to_json(inst.h)},
            {"alpha", coloring_names(inst.g, inst.h, inst.alpha)},
            {"beta", coloring_names(inst.g, inst.h, inst.beta)}};
  if (inst.q) j["q"] = inst.g.name(*inst.q);
  return j;
}

json witness_to_json(const Instance& inst, const RecoloringSequence& s) {
  json steps = json::array();
  for (const auto& st : s.steps) {
    steps.push_back({{"from", inst.h.name(st.from)},
                     {"to", inst.h.name(st.to)},
                     {"vertex", inst.g.name(st.vertex)}});
  }
  return steps;
}

RecoloringSequence parse_witness(const Instance& inst, const json& j) {
  if (!j.is_array()) throw ParseError("witness: expected an array of steps");
  RecoloringSequence s{inst.alpha, {}};
  for (const auto& step : j) {
    require_keys(step, {"vertex", "from", "to"}, {}, "witness step");
    auto v = inst.g.find(as_name(step["vertex"], "witness step"));
    auto a = inst.h.find(as_name(step["from"], "witness step"));
    auto b = inst.h.find(as_name(step["to"], "witness step"));
    if (!v || !a || !b) throw ParseError("witness step: unknown vertex name");
    s.steps.push_back({*v, *a, *b});
  }
  return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace hrecolor
