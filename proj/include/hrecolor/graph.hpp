#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hrecolor {

// Vertices are dense indices into a graph's lexicographically sorted name
// list, so integer order is name order.
using Vertex = int;

// Raised when an instance fails one of the checks the engine relies on.
// check() names the failing check, e.g. "G-connected" or "H-mnp".
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string check, const std::string& detail);
  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

class UnknownVertex : public std::invalid_argument {
 public:
  explicit UnknownVertex(const std::string& name);
};

class EmptyIntersection : public std::invalid_argument {
 public:
  EmptyIntersection(const std::string& a, const std::string& b);
};

class Graph {
 public:
  using Edge = std::pair<std::string, std::string>;

  Graph() = default;
  // Duplicate edges collapse. Throws PreconditionError on duplicate vertex
  // names, on a loop when loops are not allowed, and UnknownVertex on edge
  // endpoints missing from the vertex list.
  Graph(std::vector<std::string> vertices, const std::vector<Edge>& edges,
        bool allows_loops);

  std::size_t size() const noexcept { return names_.size(); }
  bool allows_loops() const noexcept { return allows_loops_; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Vertex v) const { return names_.at(v); }
  std::optional<Vertex> find(std::string_view name) const;
  Vertex index(std::string_view name) const;  // throws UnknownVertex

  // Sorted; contains v itself when v carries a loop.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  bool adjacent(Vertex a, Vertex b) const;
  bool has_loop(Vertex v) const { return adjacent(v, v); }

  std::size_t edge_count() const;
  // Each undirected edge once as (u, v) with u <= v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Vertex>> adj_;
  bool allows_loops_ = false;
};

// Total map V(G) -> V(H), indexed by G-vertex.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<Vertex> colors) : colors_(std::move(colors)) {}

  Vertex operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  std::size_t size() const noexcept { return colors_.size(); }
  const std::vector<Vertex>& colors() const noexcept { return colors_; }

  Coloring with(Vertex v, Vertex color) const {
    Coloring out = *this;
    out.colors_[static_cast<std::size_t>(v)] = color;
    return out;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Vertex> colors_;
};

// Builds a coloring from names. Throws UnknownVertex for identifiers absent
// from g or h, PreconditionError("coloring-total") if a G-vertex is missing.
Coloring make_coloring(const Graph& g, const Graph& h,
                       const std::map<std::string, std::string>& assignment);
std::map<std::string, std::string> coloring_names(const Graph& g, const Graph& h,
                                                  const Coloring& sigma);

bool check_connected(const Graph& g);

// Component id per vertex, numbered in order of smallest member.
std::vector<int> components(const Graph& g);

// nullopt when every pair of distinct vertices shares at most one neighbor,
// otherwise the lexicographically first violating pair.
std::optional<std::pair<Vertex, Vertex>> check_mnp(const Graph& h);

// The unique element of N(a) ∩ N(b). Requires a != b and h with the
// monochromatic neighborhood property.
Vertex common_neighbor_color(const Graph& h, Vertex a, Vertex b);

bool is_homomorphism(const Graph& g, const Graph& h, const Coloring& sigma);
bool is_homomorphism(const Graph& g, const Graph& h,
                     const std::map<std::string, std::string>& sigma);

// True iff some walk of even length joins a and b.
bool even_walk_exists(const Graph& h, Vertex a, Vertex b);

struct Instance {
  Graph g;
  Graph h;
  Coloring alpha;
  Coloring beta;
  std::optional<Vertex> q;

  Vertex root() const { return q.value_or(0); }
};

// Throws PreconditionError naming the first failing check: G-loopless,
// G-has-edge, G-connected, H-mnp, alpha-homomorphism, beta-homomorphism,
// q-vertex.
void validate_instance(const Instance& inst);

}  // namespace hrecolor
