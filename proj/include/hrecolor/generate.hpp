#pragma once

// Small graphs and random instances for tests and the `gen` command.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hrecolor/graph.hpp"

namespace hrecolor {

using Rng = std::mt19937_64;

// Vertices prefix0 .. prefix{n-1}. Names sort in index order for n <= 10.
Graph path_graph(std::size_t n, const std::string& prefix = "g");
Graph cycle_graph(std::size_t n, const std::string& prefix = "g");
Graph complete_graph(std::size_t n, const std::string& prefix = "g");

struct NamedTarget {
  std::string name;
  Graph graph;
};

// K3, C5, P4, two triangles sharing a vertex, C6, K3 with a pendant, and the
// star K1,3 with a loop on each leaf. All have the monochromatic
// neighborhood property.
std::vector<NamedTarget> standard_targets();

// Every connected loopless graph on 2..max_vertices vertices, one per
// isomorphism class.
std::vector<Graph> connected_graphs(std::size_t max_vertices);

// All homomorphisms g -> h in lexicographic order, at most `limit`.
std::vector<Coloring> all_homomorphisms(const Graph& g, const Graph& h,
                                        std::size_t limit = SIZE_MAX);

// A uniformly chosen homomorphism, or nullopt if none exists.
std::optional<Coloring> random_homomorphism(const Graph& g, const Graph& h, Rng& rng);

// Random target from standard_targets(), random connected G on 2..5
// vertices, two random homomorphisms.
Instance random_instance(Rng& rng);

}  // namespace hrecolor
