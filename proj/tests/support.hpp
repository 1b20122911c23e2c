#pragma once

// Shared fixtures for the unit and acceptance tests: named instances,
// random walks, and reference implementations kept deliberately naive.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hrecolor/generate.hpp"
#include "hrecolor/graph.hpp"
#include "hrecolor/groupoid.hpp"
#include "hrecolor/oracle.hpp"
#include "hrecolor/reconfig.hpp"
#include "hrecolor/topology.hpp"

namespace testkit {

using namespace hrecolor;

inline Graph graph(std::vector<std::string> vs, std::vector<Graph::Edge> es, bool loops = false) {
  return Graph(std::move(vs), es, loops);
}

inline Coloring coloring(const Graph& g, const Graph& h,
                         const std::map<std::string, std::string>& m) {
  return make_coloring(g, h, m);
}

inline ReducedWalk rw(const Graph& h, const std::vector<std::string>& names) {
  std::vector<Vertex> v;
  for (const auto& n : names) v.push_back(h.index(n));
  return ReducedWalk::checked(std::move(v));
}

inline Walk wk(const Graph& h, const std::vector<std::string>& names) {
  std::vector<Vertex> v;
  for (const auto& n : names) v.push_back(h.index(n));
  return Walk(std::move(v));
}

// Deletes one backtrack at a time, chosen by `pick` among all current
// backtracks, until none is left.
template <typename Pick>
std::vector<Vertex> naive_reduce(std::vector<Vertex> v, Pick pick) {
  for (;;) {
    if (v.size() < 2) return {};
    std::vector<std::size_t> spots;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
      if (v[i - 1] == v[i + 1]) spots.push_back(i);
    }
    if (spots.empty()) return v;
    const std::size_t i = spots[pick(spots.size())];
    // v[i-1], v[i], v[i+1] = x, y, x: drop y and one x.
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  }
}

inline std::vector<Vertex> naive_reduce(std::vector<Vertex> v) {
  return naive_reduce(std::move(v), [](std::size_t) { return std::size_t{0}; });
}

// Walk of exactly `len` steps from `from`; may backtrack.
inline std::vector<Vertex> random_walk(const Graph& h, Vertex from, std::size_t len, Rng& rng) {
  std::vector<Vertex> v{from};
  for (std::size_t i = 0; i < len; ++i) {
    const auto& nb = h.neighbors(v.back());
    v.push_back(nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)]);
  }
  return v;
}

// Non-backtracking walk of `len` steps from `from`, or shorter if stuck.
inline ReducedWalk random_reduced(const Graph& h, Vertex from, std::size_t len, Rng& rng) {
  std::vector<Vertex> v{from};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Vertex> options;
    for (Vertex w : h.neighbors(v.back())) {
      if (v.size() < 2 || w != v[v.size() - 2]) options.push_back(w);
    }
    if (options.empty()) break;
    v.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
  }
  return ReducedWalk::checked(std::move(v));
}

// Random closed reduced walk at `at`: reduce a random walk that is forced
// back home along a shortest path.
inline ReducedWalk random_closed(const Graph& h, Vertex at, std::size_t len, Rng& rng) {
  auto v = random_walk(h, at, len, rng);
  // Walk back to `at` by BFS.
  std::vector<Vertex> parent(h.size(), -1);
  std::vector<Vertex> queue{at};
  parent[at] = at;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : h.neighbors(queue[i])) {
      if (parent[w] < 0) {
        parent[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
  for (Vertex x = v.back(); x != at; x = parent[x]) v.push_back(parent[x]);
  return reduce(Walk(std::move(v)));
}

inline Instance make_instance(Graph g, Graph h, Coloring a, Coloring b,
                              std::optional<Vertex> q = std::nullopt) {
  return Instance{std::move(g), std::move(h), std::move(a), std::move(b), q};
}

// G = C10 wound twice around H = C5.
inline Instance double_wind(std::size_t shift = 0) {
  Graph g = cycle_graph(10, "g");
  Graph h = cycle_graph(5, "h");
  std::vector<Vertex> a(10), b(10);
  for (std::size_t i = 0; i < 10; ++i) {
    a[i] = static_cast<Vertex>(i % 5);
    b[i] = static_cast<Vertex>((i + shift) % 5);
  }
  return make_instance(g, h, Coloring(a), Coloring(b), 0);
}

inline Instance k2_swap() {
  Graph g = graph({"u", "v"}, {{"u", "v"}});
  Graph h = graph({"a", "b"}, {{"a", "b"}});
  return make_instance(g, h, coloring(g, h, {{"u", "a"}, {"v", "b"}}),
                       coloring(g, h, {{"u", "b"}, {"v", "a"}}));
}

// Two triangles x-a-b and x-c-d sharing x.
inline Graph bowtie_named() {
  return graph({"a", "b", "c", "d", "x"},
               {{"x", "a"}, {"a", "b"}, {"b", "x"}, {"x", "c"}, {"c", "d"}, {"d", "x"}});
}

// Winding number of a K3-coloring of a cycle: signed steps around the
// cycle, divided by three. Recoloring one vertex keeps it fixed.
inline int k3_winding(const Coloring& c) {
  int sum = 0;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int d = (c[static_cast<Vertex>((i + 1) % n)] - c[static_cast<Vertex>(i)] + 3) % 3;
    sum += d == 1 ? 1 : -1;
  }
  return sum / 3;
}

struct SuiteCase {
  std::string target;
  Instance inst;
};

// Every connected G on 2..5 vertices plus longer cycles and paths, against
// every standard target, with `per_pair` homomorphism pairs each: half with
// beta drawn from alpha's component, half with beta drawn uniformly. Every
// third case pins q to a random vertex.
inline std::vector<SuiteCase> suite(std::size_t per_pair, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SuiteCase> out;
  const auto targets = standard_targets();
  auto sources = connected_graphs(5);
  for (std::size_t n = 6; n <= 9; ++n) sources.push_back(cycle_graph(n, "g"));
  for (std::size_t n = 6; n <= 8; ++n) sources.push_back(path_graph(n, "g"));
  for (const auto& g : sources) {
    for (const auto& t : targets) {
      const auto homs = all_homomorphisms(g, t.graph);
      if (homs.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
      for (std::size_t k = 0; k < per_pair; ++k) {
        const Coloring& alpha = homs[pick(rng)];
        Coloring beta = homs[pick(rng)];
        if (k % 2 == 0) {
          const auto scan = bfs_scan(g, t.graph, alpha);
          beta = scan.states[std::uniform_int_distribution<std::size_t>(0, scan.size() - 1)(rng)];
        }
        std::optional<Vertex> q;
        if (k % 3 == 1) {
          q = std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(g.size()) - 1)(rng);
        }
        out.push_back({t.name, make_instance(g, t.graph, alpha, beta, q)});
      }
    }
  }
  return out;
}

// red(S(v)) for every v of a sequence, via the engine's extraction.
inline std::vector<ReducedWalk> reduced_vertex_walks(const Instance& inst,
                                                     const RecoloringSequence& s) {
  std::vector<ReducedWalk> out;
  for (const auto& w : vertex_walks(inst.g, inst.h, s)) out.push_back(reduce(w));
  return out;
}

// A random legal sequence of up to `len` steps from `start`.
inline RecoloringSequence random_sequence(const Graph& g, const Graph& h, const Coloring& start,
                                          std::size_t len, Rng& rng) {
  RecoloringSequence s{start, {}};
  Coloring cur = start;
  for (std::size_t i = 0; i < len; ++i) {
    const auto moves = legal_moves(g, h, cur);
    if (moves.empty()) break;
    const auto [v, b] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    s.steps.push_back({v, cur[v], b});
    cur = cur.with(v, b);
  }
  return s;
}

}  // namespace testkit
