#pragma once

// Spanning-tree bookkeeping over G and the conditions it induces on walks in
// H: topological validity, the family of valid walks, and tight closed walks
// that freeze every vertex they visit.

#include <optional>
#include <utility>
#include <vector>

#include "hrecolor/graph.hpp"
#include "hrecolor/groupoid.hpp"

namespace hrecolor {

class Disconnected : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TreeData {
  Vertex root = 0;
  std::vector<Vertex> parent;  // -1 at the root
  std::vector<std::size_t> depth;
  // W_v as a vertex sequence root .. v; {root} for the root itself.
  std::vector<std::vector<Vertex>> tree_walk;
  // Non-tree edges, oriented (u, v) with u < v. Each yields one fundamental
  // cycle.
  std::vector<std::pair<Vertex, Vertex>> non_tree_edges;
};

// BFS tree rooted at q, neighbors visited in increasing order.
TreeData build_tree(const Graph& g, Vertex q);

// C_e = W_u, e, W_v reversed, for each non-tree edge (u, v); closed at the
// root. A list of vertex sequences in G.
std::vector<std::vector<Vertex>> cycle_basis(const TreeData& tree);

// Expresses a closed walk at the root as a word over the basis: entry
// (i, +1) stands for C_i, (i, -1) for its reverse. Tree edges contribute
// nothing.
std::vector<std::pair<std::size_t, int>> basis_word(const TreeData& tree,
                                                    const std::vector<Vertex>& closed_walk);

// red(sigma(W_v)) for every v.
std::vector<ReducedWalk> tree_images(const Coloring& sigma, const TreeData& tree);

// red(sigma(C_e)) for every basis cycle, in basis order.
std::vector<ReducedWalk> basis_images(const Coloring& sigma, const TreeData& tree);

bool is_topologically_valid(const Coloring& alpha, const Coloring& beta, const TreeData& tree,
                            const ReducedWalk& q);

// All topologically valid Q from alpha(root) to beta(root).
WalkFamily enumerate_valid_family(const Graph& h, const Coloring& alpha, const Coloring& beta,
                                  const TreeData& tree);

struct TightWitness {
  std::vector<Vertex> cycle;     // closed walk in G, first vertex repeated at the end
  std::vector<Vertex> vertices;  // sorted, distinct
};

// A closed walk in G whose alpha-image is cyclically reduced, or nullopt.
std::optional<TightWitness> find_tight_walk(const Graph& g, const Graph& h,
                                            const Coloring& alpha);

// The one Q a tight walk leaves possible: red(alpha(W))^-1 . red(beta(W)) for
// W the tree walk from a witness vertex to the root. nullopt when no Q can
// work: a witness vertex changes color between alpha and beta, or two witness
// vertices pin different walks.
std::optional<ReducedWalk> tight_pinned_walk(const TightWitness& witness, const TreeData& tree,
                                             const Coloring& alpha, const Coloring& beta);

}  // namespace hrecolor
