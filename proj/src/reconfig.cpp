#include "hrecolor/reconfig.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <tuple>

namespace hrecolor {

InvalidSequence::InvalidSequence(std::size_t index, const std::string& what)
    : std::invalid_argument(what), index_(index) {}

const char* reason_name(NotRealizableReason r) {
  switch (r) {
    case NotRealizableReason::Parity:
      return "parity";
    case NotRealizableReason::Topology:
      return "topology";
    case NotRealizableReason::Tight:
      return "tight";
  }
  return "?";
}

std::vector<Coloring> replay(const Graph& g, const Graph& h, const RecoloringSequence& s) {
  if (!is_homomorphism(g, h, s.start)) {
    throw InvalidSequence(s.steps.size(), "start is not an H-coloring of G");
  }
  const auto nh = static_cast<Vertex>(h.size());
  std::vector<Coloring> out{s.start};
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& st = s.steps[i];
    const Coloring& cur = out.back();
    if (st.vertex < 0 || st.vertex >= static_cast<Vertex>(g.size())) {
      throw InvalidSequence(i, "step names a vertex outside G");
    }
    if (st.to < 0 || st.to >= nh) throw InvalidSequence(i, "step names a color outside H");
    if (cur[st.vertex] != st.from) throw InvalidSequence(i, "step starts from the wrong color");
    if (st.from == st.to) throw InvalidSequence(i, "step does not change the color");
    for (Vertex w : g.neighbors(st.vertex)) {
      if (!h.adjacent(cur[w], st.to)) throw InvalidSequence(i, "step breaks an edge");
    }
    out.push_back(cur.with(st.vertex, st.to));
  }
  return out;
}

std::vector<Walk> vertex_walks(const Graph& g, const Graph& h, const RecoloringSequence& s) {
  replay(g, h, s);
  std::vector<std::vector<Vertex>> seq(g.size());
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) seq[v] = {s.start[v]};
  for (const auto& st : s.steps) {
    seq[st.vertex].push_back(common_neighbor_color(h, st.from, st.to));
    seq[st.vertex].push_back(st.to);
  }
  std::vector<Walk> out;
  out.reserve(seq.size());
  for (auto& v : seq) out.emplace_back(std::move(v));
  return out;
}

Walk vertex_walk(const Graph& g, const Graph& h, const RecoloringSequence& s, Vertex v) {
  return vertex_walks(g, h, s).at(v);
}

VertexWalkTable transport(const ReducedWalk& q, const Coloring& alpha, const Coloring& beta,
                          const TreeData& tree) {
  const auto a = tree_images(alpha, tree);
  const auto b = tree_images(beta, tree);
  VertexWalkTable table(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) table[v] = gconcat(ginverse(a[v]), q, b[v]);
  return table;
}

std::size_t sequence_cost(const ReducedWalk& q, const Coloring& alpha, const Coloring& beta,
                          const TreeData& tree) {
  std::size_t total = 0;
  for (const auto& s : transport(q, alpha, beta, tree)) total += s.length();
  return total / 2;
}

namespace {

void validate_output(const Instance& inst, const RecoloringSequence& seq,
                     const VertexWalkTable& table) {
  std::vector<Walk> walks;
  try {
    walks = vertex_walks(inst.g, inst.h, seq);
  } catch (const InvalidSequence& e) {
    throw InternalValidationFailure(std::string("emitted sequence is invalid: ") + e.what());
  }
  Coloring end = seq.start;
  for (const auto& st : seq.steps) end = end.with(st.vertex, st.to);
  if (end != inst.beta) throw InternalValidationFailure("emitted sequence misses beta");
  for (std::size_t v = 0; v < walks.size(); ++v) {
    if (walks[v] != table[v].walk()) {
      throw InternalValidationFailure("vertex walk of '" + inst.g.name(static_cast<Vertex>(v)) +
                                      "' differs from its table entry");
    }
  }
}

}  // namespace

std::variant<RecoloringSequence, NotRealizable> check_and_build(const Instance& inst,
                                                                const TreeData& tree,
                                                                const ReducedWalk& q) {
  const Vertex root = tree.root;
  if (!q.runs(inst.alpha[root], inst.beta[root])) {
    throw EndpointMismatch("check_and_build: Q does not run alpha(q) -> beta(q)");
  }
  if (!q.even()) return NotRealizable{NotRealizableReason::Parity, "Q has odd length"};
  if (!is_topologically_valid(inst.alpha, inst.beta, tree, q)) {
    return NotRealizable{NotRealizableReason::Topology, "Q is not topologically valid"};
  }

  const VertexWalkTable table = transport(q, inst.alpha, inst.beta, tree);
  const std::size_t n = inst.g.size();

  // u -> v when S_v starts where S_u takes its first step, i.e. v follows u.
  std::vector<std::vector<Vertex>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [u, v] : inst.g.edges()) {
    const auto& su = table[u];
    const auto& sv = table[v];
    if (su.empty() || sv.empty()) continue;
    if (sv.vertices()[0] == su.vertices()[1]) {
      succ[u].push_back(v);
      ++indeg[v];
    } else {
      succ[v].push_back(u);
      ++indeg[u];
    }
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(static_cast<Vertex>(v));
  }
  std::vector<Vertex> order;
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : succ[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (order.size() != n) {
    return NotRealizable{NotRealizableReason::Tight,
                         "vertex walks force a cyclic order of moves (tight closed walk)"};
  }

  RecoloringSequence seq{inst.alpha, {}};
  std::size_t longest = 0;
  for (const auto& s : table) longest = std::max(longest, s.length());
  for (std::size_t r = 1; 2 * r <= longest; ++r) {
    for (Vertex v : order) {
      const auto& s = table[v].vertices();
      if (table[v].length() >= 2 * r) seq.steps.push_back({v, s[2 * r - 2], s[2 * r]});
    }
  }
  validate_output(inst, seq, table);
  return seq;
}

WalkFamily enumerate_realizable(const Instance& inst, const TreeData& tree) {
  const Vertex from = inst.alpha[tree.root];
  const Vertex to = inst.beta[tree.root];
  if (auto tight = find_tight_walk(inst.g, inst.h, inst.alpha)) {
    auto pinned = tight_pinned_walk(*tight, tree, inst.alpha, inst.beta);
    if (!pinned) return WalkFamily::empty(from, to);
    if (std::holds_alternative<RecoloringSequence>(check_and_build(inst, tree, *pinned))) {
      return WalkFamily::single(*pinned, from, to);
    }
    return WalkFamily::empty(from, to);
  }
  const WalkFamily valid = enumerate_valid_family(inst.h, inst.alpha, inst.beta, tree);
  if (valid.kind() == WalkFamily::Kind::AllReduced && !even_walk_exists(inst.h, from, to)) {
    return WalkFamily::empty(from, to);
  }
  return even_part(valid);
}

namespace {

// Shortest non-backtracking walk from `from` to `to` of the given parity.
// `before` is the vertex preceding `from` in a larger walk (-1 for none), so
// the first step may not return to it; `after` is the vertex following `to`,
// so the last step may not arrive from it. An empty result is allowed only
// when allow_empty is set.
std::optional<ReducedWalk> shortest_reduced(const Graph& h, Vertex from, Vertex to,
                                            unsigned parity, Vertex before, Vertex after,
                                            bool allow_empty) {
  if (allow_empty && from == to && parity == 0) return ReducedWalk{};
  const auto n = static_cast<int>(h.size());
  // State (prev + 1, cur, parity).
  auto key = [n](Vertex prev, Vertex cur, unsigned par) {
    return ((prev + 1) * n + cur) * 2 + static_cast<int>(par);
  };
  std::vector<int> parent(static_cast<std::size_t>((n + 1) * n * 2), -2);
  std::queue<std::tuple<Vertex, Vertex, unsigned>> frontier;
  const int start = key(before, from, 0);
  parent[start] = -1;
  frontier.emplace(before, from, 0);
  while (!frontier.empty()) {
    const auto [prev, cur, par] = frontier.front();
    frontier.pop();
    const int here = key(prev, cur, par);
    for (Vertex next : h.neighbors(cur)) {
      if (next == prev) continue;
      const unsigned np = par ^ 1U;
      const int k = key(cur, next, np);
      if (parent[k] != -2) continue;
      parent[k] = here;
      if (next == to && np == parity && cur != after) {
        std::vector<Vertex> path;
        for (int s = k; s != -1; s = parent[s]) path.push_back((s / 2) % n);
        std::reverse(path.begin(), path.end());
        return ReducedWalk::checked(std::move(path));
      }
      frontier.emplace(cur, next, np);
    }
  }
  return std::nullopt;
}

ReducedWalk decision_walk(const Instance& inst, const WalkFamily& family) {
  switch (family.kind()) {
    case WalkFamily::Kind::Single:
    case WalkFamily::Kind::Coset:
      // The canonical coset offset is already its shortest member.
      return family.walk();
    case WalkFamily::Kind::AllEvenReduced:
    case WalkFamily::Kind::AllReduced: {
      auto w = shortest_reduced(inst.h, family.from(), family.to(), 0, -1, -1, true);
      if (!w) throw InternalValidationFailure("no even walk in a nonempty even family");
      return *w;
    }
    case WalkFamily::Kind::Empty:
      break;
  }
  throw std::logic_error("decision_walk: empty family");
}

RecoloringSequence build_or_throw(const Instance& inst, const TreeData& tree,
                                  const ReducedWalk& q) {
  auto built = check_and_build(inst, tree, q);
  if (auto* nr = std::get_if<NotRealizable>(&built)) {
    throw InternalValidationFailure(std::string("family member rejected: ") + nr->detail);
  }
  return std::get<RecoloringSequence>(std::move(built));
}

// Prefixes of each walk, as reduced walks, including the empty walk.
std::set<ReducedWalk> all_prefixes(const std::vector<ReducedWalk>& walks) {
  std::set<ReducedWalk> out{ReducedWalk{}};
  for (const auto& w : walks) {
    const auto& v = w.vertices();
    for (std::size_t k = 2; k <= v.size(); ++k) {
      out.insert(ReducedWalk::checked(std::vector<Vertex>(v.begin(), v.begin() + k)));
    }
  }
  return out;
}

std::vector<ReducedWalk> shortest_candidates(const Instance& inst, const TreeData& tree,
                                             const WalkFamily& family) {
  std::vector<ReducedWalk> out;
  switch (family.kind()) {
    case WalkFamily::Kind::Empty:
      break;
    case WalkFamily::Kind::Single:
      out.push_back(family.walk());
      break;
    case WalkFamily::Kind::Coset: {
      if (family.torsion()) {
        out.push_back(family.walk());
        out.push_back(gconcat(family.root(), family.walk()));
        break;
      }
      const long reach =
          static_cast<long>(2 * inst.g.size() + family.walk().length()) + 2;
      const ReducedWalk inv = ginverse(family.root());
      ReducedWalk up = family.walk();
      ReducedWalk down = family.walk();
      out.push_back(up);
      for (long n = 1; n <= reach; ++n) {
        up = gconcat(family.root(), up);
        down = gconcat(inv, down);
        out.push_back(up);
        out.push_back(down);
      }
      break;
    }
    case WalkFamily::Kind::AllReduced:
    case WalkFamily::Kind::AllEvenReduced: {
      // Q = P1 . M . P2: P1 a prefix of some red(alpha(W_v)), P2 the reverse
      // of a prefix of some red(beta(W_v)), M a shortest connector between
      // them (or nothing, letting P1 and P2 overlap and cancel).
      const Vertex from = family.from();
      const Vertex to = family.to();
      const auto heads = all_prefixes(tree_images(inst.alpha, tree));
      std::vector<ReducedWalk> tails;
      for (const auto& p : all_prefixes(tree_images(inst.beta, tree))) tails.push_back(ginverse(p));
      std::map<std::tuple<Vertex, Vertex, unsigned, Vertex, Vertex>, std::optional<ReducedWalk>>
          connectors;
      for (const auto& p1 : heads) {
        const Vertex x = p1.empty() ? from : p1.back();
        const Vertex before = p1.empty() ? -1 : p1.vertices()[p1.vertices().size() - 2];
        for (const auto& p2 : tails) {
          const Vertex y = p2.empty() ? to : p2.front();
          const Vertex after = p2.empty() ? -1 : p2.vertices()[1];
          if (x == y) {
            ReducedWalk q = gconcat(p1, p2);
            if (q.even()) out.push_back(std::move(q));
          }
          const unsigned parity = static_cast<unsigned>((p1.length() + p2.length()) % 2);
          const auto ck = std::tuple{x, y, parity, before, after};
          auto it = connectors.find(ck);
          if (it == connectors.end()) {
            it = connectors
                     .emplace(ck, shortest_reduced(inst.h, x, y, parity, before, after, false))
                     .first;
          }
          if (it->second) out.push_back(gconcat(p1, *it->second, p2));
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace

Decision decide_reachable(const Instance& inst) {
  validate_instance(inst);
  const TreeData tree = build_tree(inst.g, inst.root());
  Decision d;
  d.family = enumerate_realizable(inst, tree);
  if (d.family.kind() == WalkFamily::Kind::Empty) return d;
  d.reachable = true;
  d.walk = decision_walk(inst, d.family);
  d.witness = build_or_throw(inst, tree, *d.walk);
  return d;
}

std::optional<ShortestResult> shortest_sequence(const Instance& inst) {
  validate_instance(inst);
  const TreeData tree = build_tree(inst.g, inst.root());
  const WalkFamily family = enumerate_realizable(inst, tree);
  if (family.kind() == WalkFamily::Kind::Empty) return std::nullopt;

  const auto a = tree_images(inst.alpha, tree);
  const auto b = tree_images(inst.beta, tree);
  auto cost = [&](const ReducedWalk& q) {
    std::size_t total = 0;
    for (std::size_t v = 0; v < a.size(); ++v) total += gconcat(ginverse(a[v]), q, b[v]).length();
    return total / 2;
  };

  std::optional<std::pair<std::size_t, ReducedWalk>> best;
  for (auto& q : shortest_candidates(inst, tree, family)) {
    if (!family.contains(q)) continue;
    const std::size_t c = cost(q);
    if (!best || c < best->first || (c == best->first && q.vertices() < best->second.vertices())) {
      best.emplace(c, std::move(q));
    }
  }
  if (!best) throw InternalValidationFailure("no candidate walk in a nonempty family");
  ShortestResult result{best->second, build_or_throw(inst, tree, best->second)};
  if (result.length() != best->first) {
    throw InternalValidationFailure("built sequence length differs from its walk cost");
  }
  return result;
}

}  // namespace hrecolor
