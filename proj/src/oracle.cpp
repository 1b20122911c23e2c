#include "hrecolor/oracle.hpp"

#include <algorithm>
#include <set>

namespace hrecolor {

StateBudgetExceeded::StateBudgetExceeded(std::size_t budget)
    : std::runtime_error("solution graph exceeds " + std::to_string(budget) + " states"),
      budget_(budget) {}

std::size_t ColoringHash::operator()(const Coloring& c) const noexcept {
  std::size_t seed = c.size();
  for (Vertex x : c.colors()) {
    seed ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

std::optional<std::size_t> SolutionGraphScan::find(const Coloring& c) const {
  auto it = id.find(c);
  if (it == id.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SolutionGraphScan::distance_to(const Coloring& c) const {
  if (auto i = find(c)) return distance[*i];
  return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> legal_moves(const Graph& g, const Graph& h,
                                                   const Coloring& sigma) {
  std::vector<std::pair<Vertex, Vertex>> out;
  const auto nh = static_cast<Vertex>(h.size());
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    for (Vertex b = 0; b < nh; ++b) {
      if (b == sigma[v]) continue;
      bool ok = true;
      for (Vertex w : g.neighbors(v)) {
        if (!h.adjacent(sigma[w], b)) {
          ok = false;
          break;
        }
      }
      if (ok) out.emplace_back(v, b);
    }
  }
  return out;
}

SolutionGraphScan bfs_scan(const Graph& g, const Graph& h, const Coloring& start,
                           std::size_t max_states, bool partial_ok) {
  SolutionGraphScan scan;
  scan.start = start;
  scan.states.push_back(start);
  scan.distance.push_back(0);
  scan.parent.push_back(0);
  scan.id.emplace(start, 0);
  for (std::size_t i = 0; i < scan.states.size(); ++i) {
    const Coloring cur = scan.states[i];
    for (auto [v, b] : legal_moves(g, h, cur)) {
      Coloring next = cur.with(v, b);
      if (scan.id.count(next)) continue;
      if (scan.states.size() >= max_states) {
        if (!partial_ok) throw StateBudgetExceeded(max_states);
        scan.complete = false;
        return scan;
      }
      scan.id.emplace(next, scan.states.size());
      scan.states.push_back(std::move(next));
      scan.distance.push_back(scan.distance[i] + 1);
      scan.parent.push_back(i);
    }
  }
  return scan;
}

std::optional<RecoloringSequence> bfs_path(const SolutionGraphScan& scan,
                                           const Coloring& target) {
  auto t = scan.find(target);
  if (!t) return std::nullopt;
  std::vector<std::size_t> chain;
  for (std::size_t i = *t; i != 0; i = scan.parent[i]) chain.push_back(i);
  std::reverse(chain.begin(), chain.end());
  RecoloringSequence seq{scan.start, {}};
  std::size_t prev = 0;
  for (std::size_t i : chain) {
    const auto& a = scan.states[prev].colors();
    const auto& b = scan.states[i].colors();
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (a[v] != b[v]) seq.steps.push_back({static_cast<Vertex>(v), a[v], b[v]});
    }
    prev = i;
  }
  return seq;
}

SequenceCheck validate_sequence(const Graph& g, const Graph& h, const RecoloringSequence& s) {
  auto proper = [&](const std::vector<Vertex>& c) {
    if (c.size() != g.size()) return false;
    for (Vertex x : c) {
      if (x < 0 || x >= static_cast<Vertex>(h.size())) return false;
    }
    for (Vertex u = 0; u < static_cast<Vertex>(g.size()); ++u) {
      for (Vertex w : g.neighbors(u)) {
        if (!h.adjacent(c[u], c[w])) return false;
      }
    }
    return true;
  };
  std::vector<Vertex> cur = s.start.colors();
  if (!proper(cur)) return {false, s.steps.size(), "start is not an H-coloring"};
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& st = s.steps[i];
    if (st.vertex < 0 || st.vertex >= static_cast<Vertex>(cur.size())) {
      return {false, i, "no such vertex"};
    }
    if (cur[st.vertex] != st.from) return {false, i, "from-color does not match"};
    if (st.from == st.to) return {false, i, "color unchanged"};
    std::vector<Vertex> next = cur;
    next[st.vertex] = st.to;
    // Exactly one vertex differs by construction; the full check catches
    // everything else.
    if (!proper(next)) return {false, i, "result is not an H-coloring"};
    cur = std::move(next);
  }
  return {};
}

std::vector<Vertex> frozen_set(const SolutionGraphScan& scan) {
  if (!scan.complete) throw IncompleteScan("frozen_set: scan was cut short");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(scan.start.size()); ++v) {
    const bool fixed = std::all_of(scan.states.begin(), scan.states.end(),
                                   [&](const Coloring& c) { return c[v] == scan.start[v]; });
    if (fixed) out.push_back(v);
  }
  return out;
}

namespace {

struct Move {
  std::size_t target;
  Vertex vertex;
  Vertex from;
  Vertex to;
  Vertex via;  // color of the moving vertex's neighbors
};

// Successors of every scanned state, computed once per trace.
std::vector<std::vector<Move>> move_table(const Graph& g, const Graph& h,
                                          const SolutionGraphScan& scan) {
  std::vector<std::vector<Move>> table(scan.size());
  for (std::size_t i = 0; i < scan.size(); ++i) {
    const Coloring& cur = scan.states[i];
    for (auto [v, b] : legal_moves(g, h, cur)) {
      auto j = scan.find(cur.with(v, b));
      if (!j) continue;
      table[i].push_back({*j, v, cur[v], b, cur[g.neighbors(v).front()]});
    }
  }
  return table;
}

}  // namespace

TraceReport trace_family_check(const Graph& g, const Graph& h, const SolutionGraphScan& scan,
                               const Coloring& beta, Vertex q, const WalkFamily& family,
                               const TraceCaps& caps) {
  if (!scan.complete) throw IncompleteScan("trace_family_check: scan was cut short");
  TraceReport report;
  const auto moves = move_table(g, h, scan);
  const auto target = scan.find(beta);

  // Paths alpha -> beta, each carrying red(S(q)).
  if (target) {
    const std::size_t depth_cap = scan.distance[*target] + caps.extra_depth;
    std::vector<std::set<ReducedWalk>> seen(scan.size());
    std::vector<std::pair<std::size_t, ReducedWalk>> layer{{0, ReducedWalk{}}};
    seen[0].insert(ReducedWalk{});
    std::set<ReducedWalk> traced;
    std::size_t pairs = 1;
    for (std::size_t depth = 0; !layer.empty(); ++depth) {
      std::vector<std::pair<std::size_t, ReducedWalk>> next;
      for (const auto& [i, w] : layer) {
        if (i == *target) traced.insert(w);
        if (depth == depth_cap || report.truncated) continue;
        for (const auto& m : moves[i]) {
          ReducedWalk nw =
              m.vertex == q ? gconcat(w, ReducedWalk::checked({m.from, m.via, m.to})) : w;
          if (!seen[m.target].insert(nw).second) continue;
          if (++pairs > caps.max_pairs) {
            report.truncated = true;
            break;
          }
          next.emplace_back(m.target, std::move(nw));
        }
      }
      layer = std::move(next);
    }
    report.traced_walks = traced.size();
    for (const auto& w : traced) {
      if (!family.contains(w)) {
        report.ok = false;
        report.failure = "traced walk " + format_walk(h, w) + " is not in " + family.describe(h);
        return report;
      }
    }
  }

  // Each short member must be traced by a path whose q-moves spell it out.
  const auto members =
      family.members_up_to(h, 2 * h.size() + caps.member_slack, caps.max_members);
  for (const auto& member : members) {
    ++report.members_checked;
    if (!target) {
      report.ok = false;
      report.failure = "member " + format_walk(h, member) + " but beta is unreachable";
      return report;
    }
    const auto& mv = member.vertices();
    const std::size_t rounds = member.length() / 2;
    if (member.length() % 2 != 0) {
      report.ok = false;
      report.failure = "member " + format_walk(h, member) + " has odd length";
      return report;
    }
    const std::size_t width = rounds + 1;
    std::vector<bool> seen(scan.size() * width, false);
    std::vector<std::pair<std::size_t, std::size_t>> frontier{{0, 0}};
    seen[0] = true;
    bool found = false;
    std::size_t pairs = 1;
    bool cut = false;
    while (!frontier.empty() && !found && !cut) {
      std::vector<std::pair<std::size_t, std::size_t>> next;
      for (auto [i, k] : frontier) {
        if (i == *target && k == rounds) {
          found = true;
          break;
        }
        for (const auto& m : moves[i]) {
          std::size_t nk = k;
          if (m.vertex == q) {
            if (k == rounds || m.from != mv[2 * k] || m.via != mv[2 * k + 1] ||
                m.to != mv[2 * k + 2]) {
              continue;
            }
            nk = k + 1;
          }
          const std::size_t key = m.target * width + nk;
          if (seen[key]) continue;
          seen[key] = true;
          if (++pairs > caps.max_pairs) {
            cut = true;
            break;
          }
          next.emplace_back(m.target, nk);
        }
        if (cut) break;
      }
      frontier = std::move(next);
    }
    if (cut && !found) {
      report.truncated = true;
      continue;
    }
    if (!found) {
      report.ok = false;
      report.failure = "member " + format_walk(h, member) + " is not realized";
      return report;
    }
  }
  return report;
}

}  // namespace hrecolor
