#pragma once

// Brute-force ground truth over the solution graph: colorings as nodes, an
// edge wherever two colorings differ at one vertex. Shares only the data
// types with the engine.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hrecolor/graph.hpp"
#include "hrecolor/groupoid.hpp"
#include "hrecolor/reconfig.hpp"

namespace hrecolor {

class StateBudgetExceeded : public std::runtime_error {
 public:
  explicit StateBudgetExceeded(std::size_t budget);
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

class IncompleteScan : public std::logic_error {
  using std::logic_error::logic_error;
};

struct ColoringHash {
  std::size_t operator()(const Coloring& c) const noexcept;
};

inline constexpr std::size_t kDefaultMaxStates = 2'000'000;

struct SolutionGraphScan {
  Coloring start;
  std::vector<Coloring> states;  // BFS order; states[0] == start
  std::vector<std::size_t> distance;
  std::vector<std::size_t> parent;  // BFS tree; parent[0] == 0
  std::unordered_map<Coloring, std::size_t, ColoringHash> id;
  bool complete = true;

  std::size_t size() const noexcept { return states.size(); }
  std::optional<std::size_t> find(const Coloring& c) const;
  std::optional<std::size_t> distance_to(const Coloring& c) const;
};

// Every legal single-vertex recoloring of sigma as (vertex, new color), in
// (vertex, color) order.
std::vector<std::pair<Vertex, Vertex>> legal_moves(const Graph& g, const Graph& h,
                                                   const Coloring& sigma);

// Throws StateBudgetExceeded once more than max_states colorings are found,
// unless partial_ok, in which case the scan stops and is marked incomplete.
SolutionGraphScan bfs_scan(const Graph& g, const Graph& h, const Coloring& start,
                           std::size_t max_states = kDefaultMaxStates, bool partial_ok = false);

// A geodesic from scan.start to target along the BFS tree.
std::optional<RecoloringSequence> bfs_path(const SolutionGraphScan& scan,
                                           const Coloring& target);

struct SequenceCheck {
  bool ok = true;
  std::size_t failing_index = 0;  // step index; steps.size() for a bad start
  std::string reason;
};
SequenceCheck validate_sequence(const Graph& g, const Graph& h, const RecoloringSequence& s);

// Vertices whose color never changes across the scanned component.
std::vector<Vertex> frozen_set(const SolutionGraphScan& scan);

struct TraceCaps {
  std::size_t extra_depth = 6;     // paths up to distance(beta) + extra_depth steps
  std::size_t member_slack = 4;    // members up to 2|V(H)| + member_slack edges
  std::size_t max_members = 24;    // shortest members checked
  std::size_t max_pairs = 400'000;  // (coloring, walk) states explored per direction
};

struct TraceReport {
  bool ok = true;
  std::size_t traced_walks = 0;      // distinct red(S(q)) reaching beta
  std::size_t members_checked = 0;
  bool truncated = false;            // a state budget cut a search short
  std::string failure;
};

// Checks `family` against the solution graph in both directions: every walk
// red(S(q)) traced by a path alpha -> beta is a member, and every short
// member is traced by some path.
TraceReport trace_family_check(const Graph& g, const Graph& h, const SolutionGraphScan& scan,
                               const Coloring& beta, Vertex q, const WalkFamily& family,
                               const TraceCaps& caps = {});

}  // namespace hrecolor
