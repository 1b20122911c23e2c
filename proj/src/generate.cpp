#include "hrecolor/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hrecolor {

namespace {

std::vector<std::string> names(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Graph from_pairs(std::size_t n, const std::string& prefix,
                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs, bool loops) {
  const auto vs = names(n, prefix);
  std::vector<Graph::Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(vs[a], vs[b]);
  return Graph(vs, edges, loops);
}

}  // namespace

Graph path_graph(std::size_t n, const std::string& prefix) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_pairs(n, prefix, e, false);
}

Graph cycle_graph(std::size_t n, const std::string& prefix) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_pairs(n, prefix, e, false);
}

Graph complete_graph(std::size_t n, const std::string& prefix) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return from_pairs(n, prefix, e, false);
}

std::vector<NamedTarget> standard_targets() {
  return {
      {"K3", complete_graph(3, "h")},
      {"C5", cycle_graph(5, "h")},
      {"P4", path_graph(4, "h")},
      {"bowtie", from_pairs(5, "h", {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}, false)},
      {"C6", cycle_graph(6, "h")},
      {"K3+pendant", from_pairs(4, "h", {{0, 1}, {0, 2}, {1, 2}, {2, 3}}, false)},
      {"star-loops", from_pairs(4, "h", {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {2, 2}, {3, 3}}, true)},
  };
}

std::vector<Graph> connected_graphs(std::size_t max_vertices) {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    // Canonical form: the smallest edge mask over all relabelings.
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<std::size_t>> slot_of(n, std::vector<std::size_t>(n));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      slot_of[slots[s].first][slots[s].second] = s;
      slot_of[slots[s].second][slots[s].first] = s;
    }
    std::set<unsigned long> seen;
    for (unsigned long mask = 1; mask < (1UL << slots.size()); ++mask) {
      unsigned long canon = mask;
      for (const auto& perm : perms) {
        unsigned long image = 0;
        for (std::size_t s = 0; s < slots.size(); ++s) {
          if (mask >> s & 1UL) image |= 1UL << slot_of[perm[slots[s].first]][perm[slots[s].second]];
        }
        canon = std::min(canon, image);
      }
      if (!seen.insert(canon).second) continue;
      std::vector<std::pair<std::size_t, std::size_t>> e;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (canon >> s & 1UL) e.push_back(slots[s]);
      }
      Graph g = from_pairs(n, "g", e, false);
      if (check_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Coloring> all_homomorphisms(const Graph& g, const Graph& h, std::size_t limit) {
  std::vector<Coloring> out;
  const auto n = static_cast<Vertex>(g.size());
  std::vector<Vertex> c(g.size(), -1);
  auto extend = [&](auto&& self, Vertex v) -> void {
    if (out.size() >= limit) return;
    if (v == n) {
      out.emplace_back(c);
      return;
    }
    for (Vertex x = 0; x < static_cast<Vertex>(h.size()); ++x) {
      bool ok = true;
      for (Vertex w : g.neighbors(v)) {
        if (w < v && !h.adjacent(c[w], x)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      c[v] = x;
      self(self, v + 1);
    }
    c[v] = -1;
  };
  extend(extend, 0);
  return out;
}

std::optional<Coloring> random_homomorphism(const Graph& g, const Graph& h, Rng& rng) {
  // Desk-scale graphs only: pick uniformly from the full list.
  const auto all = all_homomorphisms(g, h);
  if (all.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

Instance random_instance(Rng& rng) {
  static const auto targets = standard_targets();
  static const auto sources = connected_graphs(5);
  for (;;) {
    const auto& h = targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
    const auto& g = sources[std::uniform_int_distribution<std::size_t>(0, sources.size() - 1)(rng)];
    auto alpha = random_homomorphism(g, h.graph, rng);
    if (!alpha) continue;
    auto beta = random_homomorphism(g, h.graph, rng);
    return Instance{g, h.graph, *alpha, *beta, std::nullopt};
  }
}

}  // namespace hrecolor
