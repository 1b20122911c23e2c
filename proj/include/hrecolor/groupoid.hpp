#pragma once

// The fundamental groupoid of a target graph H: non-backtracking walks under
// reduce-after-concatenate composition and reversal.
//
// Walks are stored as vertex sequences. H has no parallel edges, so the
// vertex sequence determines the edge sequence, and a loop at v shows up as
// a repeated vertex v, v. A walk backtracks at position i exactly when
// v[i-1] == v[i+1]; this also covers a loop traversed twice, since a loop
// edge is its own inverse.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hrecolor/graph.hpp"

namespace hrecolor {

class GroupoidError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
class EndpointMismatch : public GroupoidError {
  using GroupoidError::GroupoidError;
};
class NotClosed : public GroupoidError {
  using GroupoidError::GroupoidError;
};
class EmptyWalk : public GroupoidError {
  using GroupoidError::GroupoidError;
};
class BasepointMismatch : public GroupoidError {
  using GroupoidError::GroupoidError;
};

// A walk of any shape. Fewer than two vertices means the empty walk, which
// carries no endpoints.
class Walk {
 public:
  Walk() = default;
  explicit Walk(std::vector<Vertex> vertices);

  bool empty() const noexcept { return vertices_.empty(); }
  std::size_t length() const noexcept { return empty() ? 0 : vertices_.size() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  bool closed() const noexcept { return empty() || vertices_.front() == vertices_.back(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// An element of the fundamental groupoid. The invariant (no backtracking)
// holds for every value; construct through reduce() or checked().
class ReducedWalk {
 public:
  ReducedWalk() = default;

  // Throws GroupoidError if the sequence backtracks.
  static ReducedWalk checked(std::vector<Vertex> vertices);

  bool empty() const noexcept { return walk_.empty(); }
  std::size_t length() const noexcept { return walk_.length(); }
  Vertex front() const { return walk_.front(); }
  Vertex back() const { return walk_.back(); }
  bool closed() const noexcept { return walk_.closed(); }
  bool even() const noexcept { return length() % 2 == 0; }
  const std::vector<Vertex>& vertices() const noexcept { return walk_.vertices(); }
  const Walk& walk() const noexcept { return walk_; }

  // True when the walk can stand between `from` and `to`; the empty walk
  // only fits from == to.
  bool runs(Vertex from, Vertex to) const {
    return empty() ? from == to : front() == from && back() == to;
  }

  friend bool operator==(const ReducedWalk&, const ReducedWalk&) = default;
  friend auto operator<=>(const ReducedWalk&, const ReducedWalk&) = default;

 private:
  friend ReducedWalk reduce(const Walk& w);
  explicit ReducedWalk(Walk w) : walk_(std::move(w)) {}
  Walk walk_;
};

bool is_reduced(const Walk& w);
bool is_walk_in(const Graph& h, const Walk& w);

ReducedWalk reduce(const Walk& w);
ReducedWalk gconcat(const ReducedWalk& x, const ReducedWalk& y);
ReducedWalk ginverse(const ReducedWalk& x);
ReducedWalk gpower(const ReducedWalk& r, long n);

// Convenience for chains such as a^-1 · q · b.
template <typename... Rest>
ReducedWalk gconcat(const ReducedWalk& x, const ReducedWalk& y, const Rest&... rest) {
  return gconcat(gconcat(x, y), rest...);
}

// Single edge (a, b) as a reduced walk.
ReducedWalk edge_walk(Vertex a, Vertex b);

// Pointwise image of a vertex sequence under a coloring.
Walk map_walk(const Coloring& sigma, const std::vector<Vertex>& g_walk);

// Reduced and, when nonempty, the last edge is not the inverse of the
// first. A single loop is its own inverse, so it is never cyclically reduced.
bool is_cyclically_reduced(const ReducedWalk& c);

// original == conjugator^-1 · core · conjugator. The core is cyclically
// reduced, or a single loop (the one closed reduced walk that cannot be
// peeled further).
struct CyclicDecomposition {
  ReducedWalk conjugator;
  ReducedWalk core;
};
CyclicDecomposition cyclic_reduce(const ReducedWalk& c);

struct PrimitiveRoot {
  ReducedWalk root;
  long exponent = 0;
};
// c == gpower(root, exponent). A conjugate of a single loop has order two;
// it is reported as its own root with exponent 1.
PrimitiveRoot primitive_root(const ReducedWalk& c);

// Lexicographically smaller of r and r^-1; both generate the same cyclic
// subgroup.
ReducedWalk normalized_root(const ReducedWalk& r);

bool commutes_by_product(const ReducedWalk& c1, const ReducedWalk& c2);
bool commutes_by_roots(const ReducedWalk& c1, const ReducedWalk& c2);
// Product equality, cross-checked against the root criterion (throws
// std::logic_error if they ever disagree).
bool commutes(const ReducedWalk& c1, const ReducedWalk& c2);

// A possibly infinite set of reduced walks from `from` to `to`.
class WalkFamily {
 public:
  enum class Kind { Empty, Single, Coset, AllReduced, AllEvenReduced };

  static WalkFamily empty(Vertex from, Vertex to);
  static WalkFamily single(ReducedWalk q, Vertex from, Vertex to);
  // {root^n · offset | n ∈ Z}. The root is normalized and the offset is
  // replaced by the shortest (then lexicographically least) member, so equal
  // sets get equal representations.
  static WalkFamily coset(const ReducedWalk& root, const ReducedWalk& offset, Vertex from,
                          Vertex to);
  static WalkFamily all_reduced(Vertex from, Vertex to);
  static WalkFamily all_even_reduced(Vertex from, Vertex to);

  Kind kind() const noexcept { return kind_; }
  Vertex from() const noexcept { return from_; }
  Vertex to() const noexcept { return to_; }
  // Q for Single, P for Coset.
  const ReducedWalk& walk() const noexcept { return walk_; }
  // R for Coset.
  const ReducedWalk& root() const noexcept { return root_; }
  // Root of finite order: the coset has exactly two members.
  bool torsion() const;

  bool contains(const ReducedWalk& q) const;
  // Members of length <= max_length, sorted by (length, vertices), keeping
  // the first max_count. AllReduced / AllEvenReduced enumerate
  // non-backtracking walks in h one length at a time.
  std::vector<ReducedWalk> members_up_to(const Graph& h, std::size_t max_length,
                                         std::size_t max_count = SIZE_MAX) const;

  std::string describe(const Graph& h) const;

  friend bool operator==(const WalkFamily&, const WalkFamily&) = default;

 private:
  WalkFamily(Kind kind, Vertex from, Vertex to) : kind_(kind), from_(from), to_(to) {}

  Kind kind_ = Kind::Empty;
  Vertex from_ = 0;
  Vertex to_ = 0;
  ReducedWalk walk_;
  ReducedWalk root_;
};

const char* kind_name(WalkFamily::Kind kind);
std::string format_walk(const Graph& h, const ReducedWalk& w);
std::string format_walk(const Graph& h, const Walk& w);

bool is_member_of_cyclic(const ReducedWalk& d, const ReducedWalk& root);

// All Q from `from` to `to` with b == Q^-1 · a · Q.
WalkFamily solve_conjugacy_single(const ReducedWalk& a, const ReducedWalk& b, Vertex from,
                                  Vertex to);

// Intersection of the single-equation solution sets.
WalkFamily solve_conjugacy_simultaneous(
    const std::vector<std::pair<ReducedWalk, ReducedWalk>>& pairs, Vertex from, Vertex to);

// Intersection of two families over the same endpoints.
WalkFamily intersect(const WalkFamily& x, const WalkFamily& y);

// The even-length members of f, again as a family. A coset with an odd
// generator R becomes a coset of R^2.
WalkFamily even_part(const WalkFamily& f);

}  // namespace hrecolor
