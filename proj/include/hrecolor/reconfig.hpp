#pragma once

// Recoloring sequences and the engine that decides, builds and minimizes
// them through walks in the fundamental groupoid of H.

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hrecolor/graph.hpp"
#include "hrecolor/groupoid.hpp"
#include "hrecolor/topology.hpp"

namespace hrecolor {

struct RecoloringStep {
  Vertex vertex = 0;
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const RecoloringStep&, const RecoloringStep&) = default;
  friend auto operator<=>(const RecoloringStep&, const RecoloringStep&) = default;
};

struct RecoloringSequence {
  Coloring start;
  std::vector<RecoloringStep> steps;

  std::size_t length() const noexcept { return steps.size(); }
};

class InvalidSequence : public std::invalid_argument {
 public:
  InvalidSequence(std::size_t index, const std::string& what);
  // Index of the offending step; steps.size() when the start itself is bad.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class InternalValidationFailure : public std::logic_error {
  using std::logic_error::logic_error;
};

enum class NotRealizableReason { Parity, Topology, Tight };
const char* reason_name(NotRealizableReason r);

struct NotRealizable {
  NotRealizableReason reason;
  std::string detail;
};

// S_v per G-vertex.
using VertexWalkTable = std::vector<ReducedWalk>;

// Colorings sigma_0 .. sigma_l. Throws InvalidSequence.
std::vector<Coloring> replay(const Graph& g, const Graph& h, const RecoloringSequence& s);

// S(v): for each step moving v from a to b, the two edges a -> c -> b through
// the unique common neighbor c of a and b. Not reduced.
Walk vertex_walk(const Graph& g, const Graph& h, const RecoloringSequence& s, Vertex v);
std::vector<Walk> vertex_walks(const Graph& g, const Graph& h, const RecoloringSequence& s);

// S_v = red(alpha(W_v))^-1 . q . red(beta(W_v)).
VertexWalkTable transport(const ReducedWalk& q, const Coloring& alpha, const Coloring& beta,
                          const TreeData& tree);

// Builds a sequence with S(root) = q, or explains why none exists. The tree
// must be rooted at the vertex q is attached to.
std::variant<RecoloringSequence, NotRealizable> check_and_build(const Instance& inst,
                                                                const TreeData& tree,
                                                                const ReducedWalk& q);

// Every Q realized by some sequence from alpha to beta.
WalkFamily enumerate_realizable(const Instance& inst, const TreeData& tree);

struct Decision {
  bool reachable = false;
  WalkFamily family = WalkFamily::empty(0, 0);
  std::optional<ReducedWalk> walk;  // the member the witness realizes
  std::optional<RecoloringSequence> witness;
};

// Validates the instance (PreconditionError) and roots the tree at
// inst.root().
Decision decide_reachable(const Instance& inst);

struct ShortestResult {
  ReducedWalk q;
  RecoloringSequence sequence;
  std::size_t length() const noexcept { return sequence.length(); }
};

std::optional<ShortestResult> shortest_sequence(const Instance& inst);

// Total steps a sequence realizing q would take: half the summed lengths of
// its vertex walks.
std::size_t sequence_cost(const ReducedWalk& q, const Coloring& alpha, const Coloring& beta,
                          const TreeData& tree);

}  // namespace hrecolor
