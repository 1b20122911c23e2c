#include "hrecolor/topology.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace hrecolor {

TreeData build_tree(const Graph& g, Vertex q) {
  const std::size_t n = g.size();
  if (q < 0 || static_cast<std::size_t>(q) >= n) throw Disconnected("build_tree: root not in G");
  TreeData t;
  t.root = q;
  t.parent.assign(n, -1);
  t.depth.assign(n, 0);
  t.tree_walk.assign(n, {});
  std::vector<bool> seen(n, false);
  std::queue<Vertex> frontier;
  seen[q] = true;
  t.tree_walk[q] = {q};
  frontier.push(q);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = v;
      t.depth[w] = t.depth[v] + 1;
      t.tree_walk[w] = t.tree_walk[v];
      t.tree_walk[w].push_back(w);
      frontier.push(w);
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw Disconnected("build_tree: G is not connected");
  }
  for (auto [u, v] : g.edges()) {
    if (u == v) continue;
    if (t.parent[v] == u || t.parent[u] == v) continue;
    t.non_tree_edges.emplace_back(u, v);
  }
  return t;
}

std::vector<std::vector<Vertex>> cycle_basis(const TreeData& tree) {
  std::vector<std::vector<Vertex>> out;
  for (auto [u, v] : tree.non_tree_edges) {
    std::vector<Vertex> c = tree.tree_walk[u];
    c.insert(c.end(), tree.tree_walk[v].rbegin(), tree.tree_walk[v].rend());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::pair<std::size_t, int>> basis_word(const TreeData& tree,
                                                    const std::vector<Vertex>& closed_walk) {
  std::map<std::pair<Vertex, Vertex>, std::size_t> index;
  for (std::size_t i = 0; i < tree.non_tree_edges.size(); ++i) index[tree.non_tree_edges[i]] = i;
  std::vector<std::pair<std::size_t, int>> word;
  for (std::size_t i = 0; i + 1 < closed_walk.size(); ++i) {
    const Vertex a = closed_walk[i];
    const Vertex b = closed_walk[i + 1];
    if (auto it = index.find({a, b}); it != index.end()) {
      word.emplace_back(it->second, +1);
    } else if (auto jt = index.find({b, a}); jt != index.end()) {
      word.emplace_back(jt->second, -1);
    }
  }
  return word;
}

std::vector<ReducedWalk> tree_images(const Coloring& sigma, const TreeData& tree) {
  const std::size_t n = tree.parent.size();
  std::vector<Vertex> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<Vertex>(v);
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return tree.depth[a] < tree.depth[b]; });
  std::vector<ReducedWalk> out(n);
  for (Vertex v : order) {
    const Vertex p = tree.parent[v];
    if (p < 0) continue;
    out[v] = gconcat(out[p], edge_walk(sigma[p], sigma[v]));
  }
  return out;
}

namespace {

std::vector<ReducedWalk> basis_images_from(const Coloring& sigma, const TreeData& tree,
                                           const std::vector<ReducedWalk>& images) {
  std::vector<ReducedWalk> out;
  out.reserve(tree.non_tree_edges.size());
  for (auto [u, v] : tree.non_tree_edges) {
    out.push_back(gconcat(images[u], edge_walk(sigma[u], sigma[v]), ginverse(images[v])));
  }
  return out;
}

}  // namespace

std::vector<ReducedWalk> basis_images(const Coloring& sigma, const TreeData& tree) {
  return basis_images_from(sigma, tree, tree_images(sigma, tree));
}

bool is_topologically_valid(const Coloring& alpha, const Coloring& beta, const TreeData& tree,
                            const ReducedWalk& q) {
  if (!q.runs(alpha[tree.root], beta[tree.root])) return false;
  const auto a = basis_images(alpha, tree);
  const auto b = basis_images(beta, tree);
  const ReducedWalk q_inv = ginverse(q);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (gconcat(q_inv, a[i], q) != b[i]) return false;
  }
  return true;
}

WalkFamily enumerate_valid_family(const Graph& h, const Coloring& alpha, const Coloring& beta,
                                  const TreeData& tree) {
  const Vertex from = alpha[tree.root];
  const Vertex to = beta[tree.root];
  if (components(h)[from] != components(h)[to]) return WalkFamily::empty(from, to);

  const auto a = basis_images(alpha, tree);
  const auto b = basis_images(beta, tree);
  std::vector<std::pair<ReducedWalk, ReducedWalk>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace_back(a[i], b[i]);
  WalkFamily solved = solve_conjugacy_simultaneous(pairs, from, to);
  if (solved.kind() == WalkFamily::Kind::Empty) return solved;

  // Classify by the alpha-images alone, then make sure the conjugacy solver
  // landed on the same case.
  std::vector<ReducedWalk> nonempty;
  for (const auto& x : a) {
    if (!x.empty()) nonempty.push_back(x);
  }
  WalkFamily::Kind expected = WalkFamily::Kind::AllReduced;
  if (!nonempty.empty()) {
    expected = WalkFamily::Kind::Coset;
    for (std::size_t i = 1; i < nonempty.size() && expected == WalkFamily::Kind::Coset; ++i) {
      if (!commutes(nonempty[0], nonempty[i])) expected = WalkFamily::Kind::Single;
    }
  }
  if (solved.kind() != expected) {
    throw std::logic_error("enumerate_valid_family: solver returned " +
                           std::string(kind_name(solved.kind())) + ", images say " +
                           kind_name(expected));
  }
  if (expected == WalkFamily::Kind::Coset &&
      solved.root() != normalized_root(primitive_root(nonempty[0]).root)) {
    throw std::logic_error("enumerate_valid_family: coset root is not the image root");
  }
  return solved;
}

std::optional<TightWitness> find_tight_walk(const Graph& g, const Graph& /*h*/,
                                            const Coloring& alpha) {
  // Nodes of the step digraph are oriented edges of G.
  std::vector<std::pair<Vertex, Vertex>> nodes;
  for (auto [u, v] : g.edges()) {
    nodes.emplace_back(u, v);
    nodes.emplace_back(v, u);
  }
  std::sort(nodes.begin(), nodes.end());
  const std::size_t n = nodes.size();
  auto id = [&](Vertex u, Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), std::pair{u, v}) - nodes.begin());
  };

  // (u,v) -> (v,w) unless the image of (v,w) undoes the image of (u,v). With
  // vertex-sequence walks this is alpha(w) != alpha(u); a loop image is its
  // own inverse and is caught by the same test.
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::vector<std::size_t>> in(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [u, v] = nodes[i];
    for (Vertex w : g.neighbors(v)) {
      if (alpha[w] == alpha[u]) continue;
      const std::size_t j = id(v, w);
      out[i].push_back(j);
      in[j].push_back(i);
    }
  }

  std::vector<std::size_t> outdeg(n);
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> dead;
  for (std::size_t i = 0; i < n; ++i) {
    outdeg[i] = out[i].size();
    if (outdeg[i] == 0) {
      alive[i] = false;
      dead.push_back(i);
    }
  }
  while (!dead.empty()) {
    const std::size_t i = dead.back();
    dead.pop_back();
    for (std::size_t p : in[i]) {
      if (alive[p] && --outdeg[p] == 0) {
        alive[p] = false;
        dead.push_back(p);
      }
    }
  }

  auto start = std::find(alive.begin(), alive.end(), true);
  if (start == alive.end()) return std::nullopt;

  // Every surviving node keeps a surviving successor, so following the
  // smallest one must revisit a node.
  std::vector<std::size_t> seen_at(n, SIZE_MAX);
  std::vector<std::size_t> trail;
  std::size_t cur = static_cast<std::size_t>(start - alive.begin());
  while (seen_at[cur] == SIZE_MAX) {
    seen_at[cur] = trail.size();
    trail.push_back(cur);
    for (std::size_t j : out[cur]) {
      if (alive[j]) {
        cur = j;
        break;
      }
    }
  }
  TightWitness w;
  for (std::size_t k = seen_at[cur]; k < trail.size(); ++k) w.cycle.push_back(nodes[trail[k]].first);
  w.cycle.push_back(w.cycle.front());
  w.vertices = w.cycle;
  std::sort(w.vertices.begin(), w.vertices.end());
  w.vertices.erase(std::unique(w.vertices.begin(), w.vertices.end()), w.vertices.end());
  return w;
}

std::optional<ReducedWalk> tight_pinned_walk(const TightWitness& witness, const TreeData& tree,
                                             const Coloring& alpha, const Coloring& beta) {
  const auto a = tree_images(alpha, tree);
  const auto b = tree_images(beta, tree);
  std::optional<ReducedWalk> pinned;
  for (Vertex v : witness.vertices) {
    if (alpha[v] != beta[v]) return std::nullopt;
    // W_v runs root -> v, so walking it backwards gives
    // red(alpha(W))^-1 = a[v] and red(beta(W)) = b[v]^-1.
    ReducedWalk q = gconcat(a[v], ginverse(b[v]));
    if (pinned && *pinned != q) return std::nullopt;
    pinned = std::move(q);
  }
  return pinned;
}

}  // namespace hrecolor
