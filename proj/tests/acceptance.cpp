// Acceptance suite. Prints one PASS/FAIL line per criterion; exits nonzero
// if any selected criterion fails. `acceptance 3 5` runs criteria 3 and 5.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace hrecolor;
using namespace testkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

constexpr std::size_t kPairsPerSourceTarget = 24;
constexpr std::uint64_t kSuiteSeed = 20240611;

const std::vector<SuiteCase>& shared_suite() {
  static const auto cases = suite(kPairsPerSourceTarget, kSuiteSeed);
  return cases;
}

Outcome decision_equivalence() {
  const auto& cases = shared_suite();
  const auto t0 = Clock::now();
  std::size_t agree = 0;
  std::size_t yes = 0;
  std::string first_bad;
  for (const auto& c : cases) {
    const auto scan = bfs_scan(c.inst.g, c.inst.h, c.inst.alpha);
    const bool truth = scan.find(c.inst.beta).has_value();
    const bool engine = decide_reachable(c.inst).reachable;
    yes += truth;
    if (truth == engine) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = " first mismatch on target " + c.target;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << agree << "/" << cases.size() << " agree (" << yes << " reachable), " << secs << "s"
    << first_bad;
  return {cases.size() >= 2000 && agree == cases.size() && secs < 300.0, d.str()};
}

Outcome shortest_equivalence() {
  std::size_t checked = 0;
  std::size_t equal = 0;
  std::string first_bad;
  for (const auto& c : shared_suite()) {
    const auto scan = bfs_scan(c.inst.g, c.inst.h, c.inst.alpha);
    const auto dist = scan.distance_to(c.inst.beta);
    if (!dist) continue;
    ++checked;
    const auto best = shortest_sequence(c.inst);
    if (best && best->length() == *dist) {
      ++equal;
    } else if (first_bad.empty()) {
      std::ostringstream m;
      m << " first mismatch on target " << c.target << ": oracle " << *dist << ", engine "
        << (best ? std::to_string(best->length()) : "none");
      first_bad = m.str();
    }
  }
  std::ostringstream d;
  d << equal << "/" << checked << " reachable pairs at oracle distance" << first_bad;
  return {checked > 0 && equal == checked, d.str()};
}

Outcome c5_k3_census() {
  const auto t0 = Clock::now();
  const Graph g = cycle_graph(5, "g");
  const Graph h = complete_graph(3, "h");
  const auto homs = all_homomorphisms(g, h);
  std::set<std::size_t> component_sizes;
  std::set<Coloring> covered;
  std::size_t components = 0;
  for (const auto& c : homs) {
    if (covered.count(c)) continue;
    const auto scan = bfs_scan(g, h, c);
    covered.insert(scan.states.begin(), scan.states.end());
    component_sizes.insert(scan.size());
    ++components;
  }
  std::size_t yes = 0;
  std::size_t pairs = 0;
  for (const auto& a : homs) {
    for (const auto& b : homs) {
      if (a == b) continue;
      ++pairs;
      yes += decide_reachable(make_instance(g, h, a, b)).reachable;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << homs.size() << " colorings, " << components << " component(s) of size";
  for (auto s : component_sizes) d << " " << s;
  d << ", YES on " << yes << "/" << pairs << " ordered pairs, " << secs << "s";
  return {homs.size() == 30 && components == 1 && yes == 870 && pairs == 870 && secs < 10.0,
          d.str()};
}

Outcome frozen_decagon() {
  const auto t0 = Clock::now();
  const Instance base = double_wind();
  const auto tight = find_tight_walk(base.g, base.h, base.alpha);
  const bool covers = tight && tight->vertices.size() == 10;
  const auto scan = bfs_scan(base.g, base.h, base.alpha);
  std::size_t others = 0;
  std::size_t no = 0;
  for (const auto& beta : all_homomorphisms(base.g, base.h)) {
    if (beta == base.alpha) continue;
    ++others;
    no += !decide_reachable(make_instance(base.g, base.h, base.alpha, beta)).reachable;
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "tight walk covers " << (tight ? tight->vertices.size() : 0) << " vertices, component "
    << scan.size() << ", NO on " << no << "/" << others << " other colorings, " << secs << "s";
  return {covers && scan.size() == 1 && no == others && secs < 5.0, d.str()};
}

// One emitted sequence: valid, realizes q at the root, all vertex walks
// reduced.
bool sound(const Instance& inst, const RecoloringSequence& s, const ReducedWalk& q,
           std::string& why) {
  const auto check = validate_sequence(inst.g, inst.h, s);
  if (!check.ok) {
    why = "invalid at step " + std::to_string(check.failing_index) + ": " + check.reason;
    return false;
  }
  Coloring end = s.start;
  for (const auto& st : s.steps) end = end.with(st.vertex, st.to);
  if (end != inst.beta) {
    why = "does not end at beta";
    return false;
  }
  const auto walks = vertex_walks(inst.g, inst.h, s);
  if (reduce(walks[inst.root()]) != q) {
    why = "S(q) does not reduce to the requested walk";
    return false;
  }
  for (const auto& w : walks) {
    if (!is_reduced(w)) {
      why = "a vertex walk backtracks";
      return false;
    }
  }
  return true;
}

Outcome witness_soundness() {
  std::size_t emitted = 0;
  std::size_t good = 0;
  std::string first_bad;
  auto record = [&](const Instance& inst, const RecoloringSequence& s, const ReducedWalk& q) {
    ++emitted;
    std::string why;
    if (sound(inst, s, q, why)) {
      ++good;
    } else if (first_bad.empty()) {
      first_bad = " first failure: " + why;
    }
  };
  for (const auto& c : shared_suite()) {
    const auto d = decide_reachable(c.inst);
    if (d.reachable) record(c.inst, *d.witness, *d.walk);
    if (const auto best = shortest_sequence(c.inst)) record(c.inst, best->sequence, best->q);
    const TreeData tree = build_tree(c.inst.g, c.inst.root());
    for (const auto& q : d.family.members_up_to(c.inst.h, 8, 6)) {
      auto built = check_and_build(c.inst, tree, q);
      if (auto* s = std::get_if<RecoloringSequence>(&built)) record(c.inst, *s, q);
    }
  }
  std::ostringstream d;
  d << good << "/" << emitted << " emitted sequences sound" << first_bad;
  return {emitted > 0 && good == emitted, d.str()};
}

Outcome transport_identity() {
  Rng rng(77);
  const auto& cases = shared_suite();
  std::size_t probes = 0;
  std::size_t exact = 0;
  while (probes < 1000) {
    const auto& inst =
        cases[std::uniform_int_distribution<std::size_t>(0, cases.size() - 1)(rng)].inst;
    const auto s = random_sequence(inst.g, inst.h, inst.alpha, 12, rng);
    Coloring end = s.start;
    for (const auto& st : s.steps) end = end.with(st.vertex, st.to);
    const auto walks = reduced_vertex_walks(inst, s);
    const Vertex u =
        std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(inst.g.size()) - 1)(rng);
    const auto w = random_walk(inst.g, u, std::uniform_int_distribution<std::size_t>(0, 8)(rng), rng);
    const Vertex v = w.back();
    const ReducedWalk lhs = walks[v];
    const ReducedWalk rhs = gconcat(ginverse(reduce(map_walk(s.start, w))), walks[u],
                                    reduce(map_walk(end, w)));
    ++probes;
    exact += lhs == rhs;
  }
  std::ostringstream d;
  d << exact << "/" << probes << " probes exact";
  return {exact == probes, d.str()};
}

Outcome family_correctness() {
  std::size_t passed = 0;
  std::size_t truncated = 0;
  std::size_t traced = 0;
  std::size_t members = 0;
  std::string first_bad;
  const auto& cases = shared_suite();
  for (const auto& c : cases) {
    const TreeData tree = build_tree(c.inst.g, c.inst.root());
    const WalkFamily family = enumerate_realizable(c.inst, tree);
    const auto scan = bfs_scan(c.inst.g, c.inst.h, c.inst.alpha);
    const auto report =
        trace_family_check(c.inst.g, c.inst.h, scan, c.inst.beta, c.inst.root(), family);
    traced += report.traced_walks;
    members += report.members_checked;
    truncated += report.truncated;
    if (report.ok) {
      ++passed;
    } else if (first_bad.empty()) {
      first_bad = " first failure on target " + c.target + ": " + report.failure;
    }
  }
  std::ostringstream d;
  d << passed << "/" << cases.size() << " instances, " << traced << " traced walks, " << members
    << " members realized, " << truncated << " searches hit the state cap" << first_bad;
  return {passed == cases.size(), d.str()};
}

Outcome groupoid_axioms() {
  Rng rng(8);
  const auto targets = standard_targets();
  std::size_t checks = 0;
  std::size_t failures = 0;
  auto expect = [&](bool ok) {
    ++checks;
    failures += !ok;
  };
  for (int round = 0; round < 1800; ++round) {
    const Graph& h =
        targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)].graph;
    const auto pick_vertex = [&] {
      return std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(h.size()) - 1)(rng);
    };
    // Confluence against a random-order deletion and parity.
    const auto raw = random_walk(h, pick_vertex(), std::uniform_int_distribution<std::size_t>(0, 14)(rng), rng);
    const auto by_random = naive_reduce(raw, [&](std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    });
    const ReducedWalk red = reduce(Walk(raw));
    expect(red.walk() == Walk(by_random));
    expect(raw.size() < 2 || red.length() % 2 == (raw.size() - 1) % 2);

    // Associativity and inverse law on a composable triple.
    const ReducedWalk x = random_reduced(h, pick_vertex(), 5, rng);
    const Vertex xe = x.empty() ? pick_vertex() : x.back();
    const ReducedWalk y = random_reduced(h, xe, 5, rng);
    const Vertex ye = y.empty() ? xe : y.back();
    const ReducedWalk z = random_reduced(h, ye, 5, rng);
    expect(gconcat(gconcat(x, y), z) == gconcat(x, gconcat(y, z)));
    expect(gconcat(x, ginverse(x)).empty());

    // Primitive root round trip and commutation criteria.
    const Vertex base = pick_vertex();
    const ReducedWalk c1 = random_closed(h, base, 6, rng);
    const ReducedWalk c2 = std::uniform_int_distribution<int>(0, 2)(rng) == 0
                               ? gpower(c1, std::uniform_int_distribution<long>(-2, 2)(rng))
                               : random_closed(h, base, 6, rng);
    if (!c1.empty()) {
      const auto pr = primitive_root(c1);
      expect(gpower(pr.root, pr.exponent) == c1);
      expect(primitive_root(pr.root).exponent == 1);
    }
    expect(commutes_by_product(c1, c2) == commutes_by_roots(c1, c2));
  }
  std::ostringstream d;
  d << checks - failures << "/" << checks << " checks hold";
  return {checks >= 10000 && failures == 0, d.str()};
}

Outcome bipartite_gate() {
  const Instance inst = k2_swap();
  const auto d = decide_reachable(inst);
  const TreeData tree = build_tree(inst.g, inst.root());
  const auto family = enumerate_realizable(inst, tree);
  std::ostringstream out;
  out << "decide " << (d.reachable ? "YES" : "NO") << ", Pi' " << kind_name(family.kind());
  return {!d.reachable && family.kind() == WalkFamily::Kind::Empty, out.str()};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "oracle equivalence (decision)", decision_equivalence},
      {2, "oracle equivalence (shortest)", shortest_equivalence},
      {3, "C5 -> K3 census", c5_k3_census},
      {4, "frozen decagon on C5", frozen_decagon},
      {5, "witness soundness", witness_soundness},
      {6, "transport identity", transport_identity},
      {7, "family correctness", family_correctness},
      {8, "groupoid axioms", groupoid_axioms},
      {9, "bipartite parity gate", bipartite_gate},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[criterion %d] %s  %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
