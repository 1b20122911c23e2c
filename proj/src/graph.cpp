#include "hrecolor/graph.hpp"

#include <algorithm>
#include <queue>

namespace hrecolor {

PreconditionError::PreconditionError(std::string check, const std::string& detail)
    : std::invalid_argument(check + ": " + detail), check_(std::move(check)) {}

UnknownVertex::UnknownVertex(const std::string& name)
    : std::invalid_argument("unknown vertex '" + name + "'") {}

EmptyIntersection::EmptyIntersection(const std::string& a, const std::string& b)
    : std::invalid_argument("colors '" + a + "' and '" + b + "' have no common neighbor") {}

Graph::Graph(std::vector<std::string> vertices, const std::vector<Edge>& edges,
             bool allows_loops)
    : names_(std::move(vertices)), allows_loops_(allows_loops) {
  std::sort(names_.begin(), names_.end());
  if (auto dup = std::adjacent_find(names_.begin(), names_.end()); dup != names_.end()) {
    throw PreconditionError("vertices-unique", "duplicate vertex '" + *dup + "'");
  }
  adj_.assign(names_.size(), {});
  for (const auto& [a, b] : edges) {
    Vertex u = index(a);
    Vertex v = index(b);
    if (u == v && !allows_loops_) {
      throw PreconditionError("G-loopless", "loop at '" + a + "'");
    }
    adj_[u].push_back(v);
    if (u != v) adj_[v].push_back(u);
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

Vertex Graph::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw UnknownVertex(std::string(name));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& row = adj_.at(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::size_t Graph::edge_count() const {
  std::size_t count = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(size()); ++v) {
    for (Vertex w : adj_[v]) count += (w >= v);
  }
  return count;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < static_cast<Vertex>(size()); ++v) {
    for (Vertex w : adj_[v]) {
      if (w >= v) out.emplace_back(v, w);
    }
  }
  return out;
}

Coloring make_coloring(const Graph& g, const Graph& h,
                       const std::map<std::string, std::string>& assignment) {
  std::vector<Vertex> colors(g.size(), -1);
  for (const auto& [v, c] : assignment) {
    colors[g.index(v)] = h.index(c);
  }
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] < 0) {
      throw PreconditionError("coloring-total", "no color for '" + g.names()[v] + "'");
    }
  }
  return Coloring(std::move(colors));
}

std::map<std::string, std::string> coloring_names(const Graph& g, const Graph& h,
                                                  const Coloring& sigma) {
  std::map<std::string, std::string> out;
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    out.emplace(g.name(v), h.name(sigma[v]));
  }
  return out;
}

std::vector<int> components(const Graph& g) {
  std::vector<int> comp(g.size(), -1);
  int next = 0;
  for (Vertex s = 0; s < static_cast<Vertex>(g.size()); ++s) {
    if (comp[s] >= 0) continue;
    std::queue<Vertex> frontier;
    frontier.push(s);
    comp[s] = next;
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = next;
          frontier.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool check_connected(const Graph& g) {
  if (g.size() == 0) return false;
  auto comp = components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

namespace {

std::size_t common_count(const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
  std::size_t n = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

std::optional<std::pair<Vertex, Vertex>> check_mnp(const Graph& h) {
  const auto n = static_cast<Vertex>(h.size());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (common_count(h.neighbors(a), h.neighbors(b)) > 1) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

Vertex common_neighbor_color(const Graph& h, Vertex a, Vertex b) {
  std::vector<Vertex> common;
  std::set_intersection(h.neighbors(a).begin(), h.neighbors(a).end(),
                        h.neighbors(b).begin(), h.neighbors(b).end(),
                        std::back_inserter(common));
  if (common.empty()) throw EmptyIntersection(h.name(a), h.name(b));
  if (common.size() > 1) {
    throw std::logic_error("common_neighbor_color: '" + h.name(a) + "' and '" + h.name(b) +
                           "' share several neighbors; target lacks the monochromatic "
                           "neighborhood property");
  }
  return common.front();
}

bool is_homomorphism(const Graph& g, const Graph& h, const Coloring& sigma) {
  if (sigma.size() != g.size()) return false;
  for (Vertex c : sigma.colors()) {
    if (c < 0 || c >= static_cast<Vertex>(h.size())) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (!h.adjacent(sigma[u], sigma[v])) return false;
  }
  return true;
}

bool is_homomorphism(const Graph& g, const Graph& h,
                     const std::map<std::string, std::string>& sigma) {
  return is_homomorphism(g, h, make_coloring(g, h, sigma));
}

bool even_walk_exists(const Graph& h, Vertex a, Vertex b) {
  // 2-color the component of a; an odd cycle or a loop lets every pair in
  // the component be joined by an even walk.
  std::vector<int> side(h.size(), -1);
  std::queue<Vertex> frontier;
  side[a] = 0;
  frontier.push(a);
  bool bipartite = true;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : h.neighbors(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        frontier.push(w);
      } else if (side[w] == side[v]) {
        bipartite = false;
      }
    }
  }
  if (side[b] < 0) return false;
  return !bipartite || side[a] == side[b];
}

void validate_instance(const Instance& inst) {
  const Graph& g = inst.g;
  const Graph& h = inst.h;
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    if (g.has_loop(v)) throw PreconditionError("G-loopless", "loop at '" + g.name(v) + "'");
  }
  if (g.edge_count() == 0) throw PreconditionError("G-has-edge", "G has no edges");
  if (!check_connected(g)) throw PreconditionError("G-connected", "G is not connected");
  if (auto bad = check_mnp(h)) {
    throw PreconditionError("H-mnp", "colors '" + h.name(bad->first) + "' and '" +
                                         h.name(bad->second) +
                                         "' share more than one neighbor");
  }
  if (!is_homomorphism(g, h, inst.alpha)) {
    throw PreconditionError("alpha-homomorphism", "alpha is not an H-coloring of G");
  }
  if (!is_homomorphism(g, h, inst.beta)) {
    throw PreconditionError("beta-homomorphism", "beta is not an H-coloring of G");
  }
  if (inst.q && (*inst.q < 0 || *inst.q >= static_cast<Vertex>(g.size()))) {
    throw PreconditionError("q-vertex", "q is not a vertex of G");
  }
}

}  // namespace hrecolor
