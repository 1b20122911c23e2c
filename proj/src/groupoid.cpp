#include "hrecolor/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hrecolor {

Walk::Walk(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) vertices_.clear();
}

bool is_reduced(const Walk& w) {
  const auto& v = w.vertices();
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i - 1] == v[i + 1]) return false;
  }
  return true;
}

bool is_walk_in(const Graph& h, const Walk& w) {
  const auto& v = w.vertices();
  const auto n = static_cast<Vertex>(h.size());
  for (Vertex x : v) {
    if (x < 0 || x >= n) return false;
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (!h.adjacent(v[i], v[i + 1])) return false;
  }
  return true;
}

ReducedWalk ReducedWalk::checked(std::vector<Vertex> vertices) {
  Walk w(std::move(vertices));
  if (!is_reduced(w)) throw GroupoidError("walk backtracks");
  return ReducedWalk(std::move(w));
}

ReducedWalk reduce(const Walk& w) {
  // The stack is reduced after every push, so a single check of the top three
  // entries restores the invariant.
  std::vector<Vertex> stack;
  stack.reserve(w.vertices().size());
  for (Vertex x : w.vertices()) {
    stack.push_back(x);
    const auto n = stack.size();
    if (n >= 3 && stack[n - 1] == stack[n - 3]) {
      stack.resize(n - 2);
    }
  }
  return ReducedWalk(Walk(std::move(stack)));
}

ReducedWalk gconcat(const ReducedWalk& x, const ReducedWalk& y) {
  if (x.empty()) return y;
  if (y.empty()) return x;
  if (x.back() != y.front()) throw EndpointMismatch("gconcat: walks do not meet");
  // Cancel across the junction only; both halves are already reduced.
  const auto& a = x.vertices();
  const auto& b = y.vertices();
  std::size_t i = a.size() - 1;  // junction in a
  std::size_t j = 0;             // junction in b
  while (i >= 1 && j + 1 < b.size() && a[i - 1] == b[j + 1]) {
    --i;
    ++j;
  }
  std::vector<Vertex> out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j) + 1, b.end());
  return ReducedWalk::checked(std::move(out));
}

ReducedWalk ginverse(const ReducedWalk& x) {
  std::vector<Vertex> v(x.vertices().rbegin(), x.vertices().rend());
  return ReducedWalk::checked(std::move(v));
}

ReducedWalk gpower(const ReducedWalk& r, long n) {
  if (n == 0 || r.empty()) return {};
  if ((n > 1 || n < -1) && !r.closed()) throw NotClosed("gpower: walk is not closed");
  const ReducedWalk base = n < 0 ? ginverse(r) : r;
  ReducedWalk out;
  for (long i = 0; i < std::abs(n); ++i) out = gconcat(out, base);
  return out;
}

ReducedWalk edge_walk(Vertex a, Vertex b) { return ReducedWalk::checked({a, b}); }

Walk map_walk(const Coloring& sigma, const std::vector<Vertex>& g_walk) {
  std::vector<Vertex> out;
  out.reserve(g_walk.size());
  for (Vertex v : g_walk) out.push_back(sigma[v]);
  return Walk(std::move(out));
}

bool is_cyclically_reduced(const ReducedWalk& c) {
  if (!c.closed()) return false;
  if (c.empty()) return true;
  const auto& v = c.vertices();
  const auto k = c.length();
  return k >= 2 && v[1] != v[k - 1];
}

CyclicDecomposition cyclic_reduce(const ReducedWalk& c) {
  if (!c.closed()) throw NotClosed("cyclic_reduce: walk is not closed");
  if (c.empty()) return {};
  const auto& v = c.vertices();
  const std::size_t k = c.length();
  std::size_t peel = 0;
  // Peel the first and last edge while they are mutually inverse. A closed
  // reduced walk never has length 2, so the core keeps at least one edge.
  while (k - 2 * peel >= 2 && v[peel + 1] == v[k - 1 - peel]) ++peel;
  std::vector<Vertex> core(v.begin() + static_cast<std::ptrdiff_t>(peel),
                           v.begin() + static_cast<std::ptrdiff_t>(k - peel) + 1);
  std::vector<Vertex> conj(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(peel) + 1);
  std::reverse(conj.begin(), conj.end());
  return {ReducedWalk::checked(std::move(conj)), ReducedWalk::checked(std::move(core))};
}

namespace {

// Smallest p dividing word.size() with word a p-periodic rotation of itself,
// via the border array.
std::size_t cyclic_period(const std::vector<Vertex>& word) {
  const std::size_t n = word.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && word[i] != word[b]) b = border[b - 1];
    if (word[i] == word[b]) ++b;
    border[i] = b;
  }
  const std::size_t p = n - border[n - 1];
  return n % p == 0 ? p : n;
}

std::vector<Vertex> cyclic_word(const ReducedWalk& core) {
  const auto& v = core.vertices();
  return {v.begin(), v.end() - 1};
}

// Length of the cyclic core; 1 for a conjugate of a loop.
std::size_t core_length(const ReducedWalk& closed) {
  return cyclic_reduce(closed).core.length();
}

bool is_torsion(const ReducedWalk& closed) {
  return !closed.empty() && core_length(closed) == 1;
}

bool shorter(const ReducedWalk& a, const ReducedWalk& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.vertices() < b.vertices();
}

}  // namespace

PrimitiveRoot primitive_root(const ReducedWalk& c) {
  if (c.empty()) throw EmptyWalk("primitive_root: empty walk has no root");
  const auto [conj, core] = cyclic_reduce(c);
  const auto word = cyclic_word(core);
  const std::size_t p = cyclic_period(word);
  std::vector<Vertex> root_core(core.vertices().begin(),
                                core.vertices().begin() + static_cast<std::ptrdiff_t>(p) + 1);
  ReducedWalk root = gconcat(ginverse(conj), ReducedWalk::checked(std::move(root_core)), conj);
  return {root, static_cast<long>(word.size() / p)};
}

ReducedWalk normalized_root(const ReducedWalk& r) {
  ReducedWalk inv = ginverse(r);
  return inv.vertices() < r.vertices() ? inv : r;
}

namespace {

void require_common_base(const ReducedWalk& c1, const ReducedWalk& c2) {
  if (!c1.closed() || !c2.closed()) throw NotClosed("commutes: walks must be closed");
  if (!c1.empty() && !c2.empty() && c1.front() != c2.front()) {
    throw BasepointMismatch("commutes: closed walks at different basepoints");
  }
}

}  // namespace

bool commutes_by_product(const ReducedWalk& c1, const ReducedWalk& c2) {
  require_common_base(c1, c2);
  return gconcat(c1, c2) == gconcat(c2, c1);
}

bool commutes_by_roots(const ReducedWalk& c1, const ReducedWalk& c2) {
  require_common_base(c1, c2);
  if (c1.empty() || c2.empty()) return true;
  return normalized_root(primitive_root(c1).root) == normalized_root(primitive_root(c2).root);
}

bool commutes(const ReducedWalk& c1, const ReducedWalk& c2) {
  const bool by_product = commutes_by_product(c1, c2);
  if (by_product != commutes_by_roots(c1, c2)) {
    throw std::logic_error("commutes: product and root criteria disagree");
  }
  return by_product;
}

bool is_member_of_cyclic(const ReducedWalk& d, const ReducedWalk& generator) {
  if (d.empty()) return true;
  if (!d.closed() || generator.empty() || d.front() != generator.front()) return false;
  const auto g = primitive_root(generator);
  const auto x = primitive_root(d);
  if (is_torsion(g.root)) return x.root == g.root;
  if (x.root != g.root && x.root != ginverse(g.root)) return false;
  return x.exponent % g.exponent == 0;
}

// ---------------------------------------------------------------------------
// WalkFamily

WalkFamily WalkFamily::empty(Vertex from, Vertex to) { return {Kind::Empty, from, to}; }

WalkFamily WalkFamily::single(ReducedWalk q, Vertex from, Vertex to) {
  if (!q.runs(from, to)) throw EndpointMismatch("single: walk does not run from -> to");
  WalkFamily f(Kind::Single, from, to);
  f.walk_ = std::move(q);
  return f;
}

WalkFamily WalkFamily::coset(const ReducedWalk& root, const ReducedWalk& offset, Vertex from,
                             Vertex to) {
  if (root.empty()) return single(offset, from, to);
  if (!root.closed() || root.front() != from) {
    throw BasepointMismatch("coset: generator must be closed at the source vertex");
  }
  if (!offset.runs(from, to)) throw EndpointMismatch("coset: offset does not run from -> to");
  WalkFamily f(Kind::Coset, from, to);
  f.root_ = normalized_root(root);
  // Canonical offset: the shortest member, ties broken lexicographically.
  ReducedWalk best = offset;
  if (is_torsion(f.root_)) {
    ReducedWalk other = gconcat(f.root_, offset);
    if (shorter(other, best)) best = other;
  } else {
    const long reach =
        static_cast<long>((2 * offset.length() + 2 * f.root_.length()) / core_length(f.root_)) + 2;
    const ReducedWalk inv = ginverse(f.root_);
    ReducedWalk up = offset;
    ReducedWalk down = offset;
    for (long n = 1; n <= reach; ++n) {
      up = gconcat(f.root_, up);
      down = gconcat(inv, down);
      if (shorter(up, best)) best = up;
      if (shorter(down, best)) best = down;
    }
  }
  f.walk_ = std::move(best);
  return f;
}

WalkFamily WalkFamily::all_reduced(Vertex from, Vertex to) {
  return {Kind::AllReduced, from, to};
}

WalkFamily WalkFamily::all_even_reduced(Vertex from, Vertex to) {
  return {Kind::AllEvenReduced, from, to};
}

bool WalkFamily::torsion() const { return kind_ == Kind::Coset && is_torsion(root_); }

bool WalkFamily::contains(const ReducedWalk& q) const {
  if (!q.runs(from_, to_)) return false;
  switch (kind_) {
    case Kind::Empty:
      return false;
    case Kind::Single:
      return q == walk_;
    case Kind::Coset:
      return is_member_of_cyclic(gconcat(q, ginverse(walk_)), root_);
    case Kind::AllReduced:
      return true;
    case Kind::AllEvenReduced:
      return q.even();
  }
  return false;
}

std::vector<ReducedWalk> WalkFamily::members_up_to(const Graph& h, std::size_t max_length,
                                                   std::size_t max_count) const {
  std::vector<ReducedWalk> out;
  switch (kind_) {
    case Kind::Empty:
      break;
    case Kind::Single:
      if (walk_.length() <= max_length) out.push_back(walk_);
      break;
    case Kind::Coset: {
      if (torsion()) {
        for (const auto& m : {walk_, gconcat(root_, walk_)}) {
          if (m.length() <= max_length) out.push_back(m);
        }
        break;
      }
      const long reach = static_cast<long>((max_length + walk_.length() + 2 * root_.length()) /
                                           core_length(root_)) +
                         2;
      const ReducedWalk inv = ginverse(root_);
      ReducedWalk up = walk_;
      ReducedWalk down = walk_;
      if (walk_.length() <= max_length) out.push_back(walk_);
      for (long n = 1; n <= reach; ++n) {
        up = gconcat(root_, up);
        down = gconcat(inv, down);
        if (up.length() <= max_length) out.push_back(up);
        if (down.length() <= max_length) out.push_back(down);
      }
      break;
    }
    case Kind::AllReduced:
    case Kind::AllEvenReduced: {
      const bool even_only = kind_ == Kind::AllEvenReduced;
      if (from_ == to_) out.emplace_back();
      std::vector<std::vector<Vertex>> layer{{from_}};
      for (std::size_t len = 1; len <= max_length && out.size() < max_count; ++len) {
        std::vector<std::vector<Vertex>> next_layer;
        for (const auto& path : layer) {
          const Vertex prev = path.size() >= 2 ? path[path.size() - 2] : -1;
          for (Vertex next : h.neighbors(path.back())) {
            if (next == prev) continue;
            next_layer.push_back(path);
            next_layer.back().push_back(next);
            if (next == to_ && (!even_only || len % 2 == 0)) {
              out.push_back(ReducedWalk::checked(next_layer.back()));
            }
          }
        }
        layer = std::move(next_layer);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), shorter);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > max_count) out.resize(max_count);
  return out;
}

const char* kind_name(WalkFamily::Kind kind) {
  switch (kind) {
    case WalkFamily::Kind::Empty:
      return "Empty";
    case WalkFamily::Kind::Single:
      return "Single";
    case WalkFamily::Kind::Coset:
      return "Coset";
    case WalkFamily::Kind::AllReduced:
      return "AllReduced";
    case WalkFamily::Kind::AllEvenReduced:
      return "AllEvenReduced";
  }
  return "?";
}

std::string format_walk(const Graph& h, const Walk& w) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < w.vertices().size(); ++i) {
    if (i) out << ',';
    out << h.name(w.vertices()[i]);
  }
  out << ']';
  return out.str();
}

std::string format_walk(const Graph& h, const ReducedWalk& w) { return format_walk(h, w.walk()); }

std::string WalkFamily::describe(const Graph& h) const {
  std::string out = kind_name(kind_);
  switch (kind_) {
    case Kind::Single:
      out += " Q=" + format_walk(h, walk_);
      break;
    case Kind::Coset:
      out += " R=" + format_walk(h, root_) + " P=" + format_walk(h, walk_);
      break;
    default:
      out += " from=" + h.name(from_) + " to=" + h.name(to_);
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjugacy

WalkFamily solve_conjugacy_single(const ReducedWalk& a, const ReducedWalk& b, Vertex from,
                                  Vertex to) {
  if (!a.runs(from, from) || !b.runs(to, to)) {
    throw BasepointMismatch("solve_conjugacy_single: equation sides not closed at endpoints");
  }
  if (a.empty()) return b.empty() ? WalkFamily::all_reduced(from, to) : WalkFamily::empty(from, to);
  if (b.empty()) return WalkFamily::empty(from, to);

  const auto da = cyclic_reduce(a);
  const auto db = cyclic_reduce(b);
  const auto wa = cyclic_word(da.core);
  const auto wb = cyclic_word(db.core);
  if (wa.size() != wb.size()) return WalkFamily::empty(from, to);

  std::vector<Vertex> doubled(wa);
  doubled.insert(doubled.end(), wa.begin(), wa.end());
  doubled.pop_back();
  auto hit = std::search(doubled.begin(), doubled.end(), wb.begin(), wb.end());
  if (hit == doubled.end()) return WalkFamily::empty(from, to);
  const auto shift = static_cast<std::size_t>(hit - doubled.begin());

  // The rotation by `shift` conjugates core(a) to core(b); carry it back
  // through both peel-offs.
  std::vector<Vertex> prefix(da.core.vertices().begin(),
                             da.core.vertices().begin() + static_cast<std::ptrdiff_t>(shift) + 1);
  const ReducedWalk offset =
      gconcat(ginverse(da.conjugator), ReducedWalk::checked(std::move(prefix)), db.conjugator);
  if (gconcat(ginverse(offset), a, offset) != b) {
    throw std::logic_error("solve_conjugacy_single: assembled conjugator is wrong");
  }
  return WalkFamily::coset(primitive_root(a).root, offset, from, to);
}

using Kind = WalkFamily::Kind;

WalkFamily even_part(const WalkFamily& f) {
  switch (f.kind()) {
    case Kind::Empty:
      return f;
    case Kind::Single:
      return f.walk().even() ? f : WalkFamily::empty(f.from(), f.to());
    case Kind::Coset: {
      const ReducedWalk& r = f.root();
      const ReducedWalk& p = f.walk();
      if (r.even()) return p.even() ? f : WalkFamily::empty(f.from(), f.to());
      const ReducedWalk r2 = gconcat(r, r);
      return WalkFamily::coset(r2, p.even() ? p : gconcat(r, p), f.from(), f.to());
    }
    case Kind::AllReduced:
    case Kind::AllEvenReduced:
      return WalkFamily::all_even_reduced(f.from(), f.to());
  }
  return f;
}

namespace {

WalkFamily intersect_cosets(const WalkFamily& x, const WalkFamily& y) {
  const Vertex from = x.from();
  const Vertex to = x.to();
  auto filtered = [&](const std::vector<ReducedWalk>& candidates, const WalkFamily& other) {
    std::vector<ReducedWalk> hits;
    for (const auto& c : candidates) {
      if (other.contains(c)) hits.push_back(c);
    }
    return hits;
  };

  for (const auto* finite : {&x, &y}) {
    if (!finite->torsion()) continue;
    const WalkFamily& other = finite == &x ? y : x;
    auto hits = filtered({finite->walk(), gconcat(finite->root(), finite->walk())}, other);
    if (hits.empty()) return WalkFamily::empty(from, to);
    if (hits.size() == 1) return WalkFamily::single(hits.front(), from, to);
    return *finite;
  }

  const auto gx = primitive_root(x.root());
  const auto gy = primitive_root(y.root());
  if (normalized_root(gx.root) == normalized_root(gy.root)) {
    // Both generators are powers of one primitive root R, say R^a and R^b.
    // The intersection is empty or a coset of R^lcm(a, b).
    const long a = std::abs(gx.exponent);
    const long b = std::abs(gy.exponent);
    const ReducedWalk step = x.root();
    ReducedWalk probe = x.walk();
    for (long i = 0; i < b; ++i) {
      if (y.contains(probe)) {
        return WalkFamily::coset(gpower(gx.root, std::lcm(a, b)), probe, from, to);
      }
      probe = gconcat(step, probe);
    }
    return WalkFamily::empty(from, to);
  }

  // Unrelated roots: at most one common member, and winding x's generator
  // further than the bound only lengthens the candidate past anything that
  // can still satisfy y.
  const std::size_t slack = x.walk().length() + y.walk().length() + 4 * x.root().length() +
                            4 * y.root().length();
  const long reach = static_cast<long>(slack / core_length(x.root())) + 4;
  const ReducedWalk inv = ginverse(x.root());
  ReducedWalk up = x.walk();
  ReducedWalk down = x.walk();
  if (y.contains(up)) return WalkFamily::single(up, from, to);
  for (long n = 1; n <= reach; ++n) {
    up = gconcat(x.root(), up);
    down = gconcat(inv, down);
    if (y.contains(up)) return WalkFamily::single(up, from, to);
    if (y.contains(down)) return WalkFamily::single(down, from, to);
  }
  return WalkFamily::empty(from, to);
}

}  // namespace

WalkFamily intersect(const WalkFamily& x, const WalkFamily& y) {
  if (x.from() != y.from() || x.to() != y.to()) {
    throw EndpointMismatch("intersect: families over different endpoints");
  }
  if (x.kind() == Kind::Empty) return x;
  if (y.kind() == Kind::Empty) return y;
  if (x.kind() == Kind::AllReduced) return y;
  if (y.kind() == Kind::AllReduced) return x;
  if (x.kind() == Kind::AllEvenReduced) return even_part(y);
  if (y.kind() == Kind::AllEvenReduced) return even_part(x);
  if (x.kind() == Kind::Single) return y.contains(x.walk()) ? x : WalkFamily::empty(x.from(), x.to());
  if (y.kind() == Kind::Single) return x.contains(y.walk()) ? y : WalkFamily::empty(x.from(), x.to());
  return intersect_cosets(x, y);
}

WalkFamily solve_conjugacy_simultaneous(
    const std::vector<std::pair<ReducedWalk, ReducedWalk>>& pairs, Vertex from, Vertex to) {
  WalkFamily acc = WalkFamily::all_reduced(from, to);
  for (const auto& [a, b] : pairs) {
    acc = intersect(acc, solve_conjugacy_single(a, b, from, to));
    if (acc.kind() == Kind::Empty) break;
  }
  return acc;
}

}  // namespace hrecolor
