#include "hrecolor/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "hrecolor/generate.hpp"
#include "hrecolor/instance_io.hpp"
#include "hrecolor/oracle.hpp"
#include "hrecolor/reconfig.hpp"
#include "hrecolor/topology.hpp"

namespace hrecolor {

namespace {

struct Options {
  std::string file;
  std::string sequence_file;
  std::string q;
  std::string witness_out;
  std::size_t max_states = kDefaultMaxStates;
  std::uint64_t seed = 1;
  bool expect_yes = false;
};

std::string join_names(const Graph& g, const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += g.name(vs[i]);
  }
  return out + "}";
}

// Loads the instance and applies --q.
Instance load(const Options& opt) {
  Instance inst = parse_instance_text(read_file(opt.file));
  if (!opt.q.empty()) {
    auto v = inst.g.find(opt.q);
    if (!v) throw PreconditionError("q-vertex", "'" + opt.q + "' is not a vertex of G");
    inst.q = *v;
  }
  return inst;
}

void write_witness(const Options& opt, const Instance& inst, const RecoloringSequence& s) {
  if (!opt.witness_out.empty()) write_file(opt.witness_out, dump(witness_to_json(inst, s)));
}

int cmd_check_h(const Options& opt, std::ostream& out) {
  const Graph h = parse_target_only(nlohmann::json::parse(read_file(opt.file)));
  if (auto bad = check_mnp(h)) {
    out << "FAIL " << h.name(bad->first) << " " << h.name(bad->second) << "\n";
    return kExitPrecondition;
  }
  out << "PASS\n";
  return kExitOk;
}

int cmd_decide(const Options& opt, std::ostream& out) {
  const Instance inst = load(opt);
  const Decision d = decide_reachable(inst);
  if (!d.reachable) {
    out << "NO\n";
    return opt.expect_yes ? kExitPrecondition : kExitOk;
  }
  out << "YES\n" << "steps: " << d.witness->length() << "\n";
  write_witness(opt, inst, *d.witness);
  return kExitOk;
}

int cmd_shortest(const Options& opt, std::ostream& out) {
  const Instance inst = load(opt);
  const auto best = shortest_sequence(inst);
  if (!best) {
    out << "NO\n";
    return opt.expect_yes ? kExitPrecondition : kExitOk;
  }
  out << best->length() << "\n";
  write_witness(opt, inst, best->sequence);
  return kExitOk;
}

int cmd_families(const Options& opt, std::ostream& out) {
  const Instance inst = load(opt);
  validate_instance(inst);
  const TreeData tree = build_tree(inst.g, inst.root());
  out << "q: " << inst.g.name(inst.root()) << "\n";
  out << "Pi: " << enumerate_valid_family(inst.h, inst.alpha, inst.beta, tree).describe(inst.h)
      << "\n";
  out << "Pi': " << enumerate_realizable(inst, tree).describe(inst.h) << "\n";
  return kExitOk;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  const Instance inst = load(opt);
  validate_instance(inst);
  const SolutionGraphScan scan = bfs_scan(inst.g, inst.h, inst.alpha, opt.max_states);
  const auto dist = scan.distance_to(inst.beta);
  out << "component: " << scan.size() << "\n";
  out << "distance: " << (dist ? std::to_string(*dist) : "unreachable") << "\n";
  out << "frozen: " << join_names(inst.g, frozen_set(scan)) << "\n";

  const Decision d = decide_reachable(inst);
  const auto best = shortest_sequence(inst);
  bool agree = d.reachable == dist.has_value() && best.has_value() == dist.has_value();
  if (agree && best) agree = best->length() == *dist;
  out << "engine: " << (d.reachable ? "YES" : "NO");
  if (best) out << " shortest " << best->length();
  out << "\n";
  out << "agreement: " << (agree ? "yes" : "no") << "\n";
  return agree ? kExitOk : kExitPrecondition;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance_text(read_file(opt.file));
  nlohmann::json steps;
  try {
    steps = nlohmann::json::parse(read_file(opt.sequence_file));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const RecoloringSequence s = parse_witness(inst, steps);
  const SequenceCheck check = validate_sequence(inst.g, inst.h, s);
  if (!check.ok) {
    out << "FAIL at step " << check.failing_index << ": " << check.reason << "\n";
    return kExitPrecondition;
  }
  Coloring end = s.start;
  for (const auto& st : s.steps) end = end.with(st.vertex, st.to);
  out << "OK\n" << "reaches beta: " << (end == inst.beta ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  Rng rng(opt.seed);
  out << dump(instance_to_json(random_instance(rng)));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide, build and minimize H-recoloring sequences", "hrecolor"};
  app.require_subcommand(1);
  Options opt;

  auto* check_h = app.add_subcommand("check-h", "Test H for the monochromatic neighborhood property");
  check_h->add_option("file", opt.file, "Instance or target file")->required();

  auto* decide = app.add_subcommand("decide", "Is beta reachable from alpha?");
  auto* shortest = app.add_subcommand("shortest", "Minimum number of recoloring steps");
  auto* families = app.add_subcommand("families", "Valid and realizable walk families");
  auto* oracle = app.add_subcommand("oracle", "Brute-force the solution graph and compare");
  for (auto* sub : {decide, shortest, families, oracle}) {
    sub->add_option("file", opt.file, "Instance file")->required();
    sub->add_option("--q", opt.q, "Distinguished vertex of G");
  }
  for (auto* sub : {decide, shortest}) {
    sub->add_option("--witness-out", opt.witness_out, "Write the step list here");
    sub->add_flag("--expect-yes", opt.expect_yes, "Exit 2 when the answer is NO");
  }
  oracle->add_option("--max-states", opt.max_states, "State budget for the scan");

  auto* verify = app.add_subcommand("verify", "Check a step list against an instance");
  verify->add_option("instance", opt.file, "Instance file")->required();
  verify->add_option("sequence", opt.sequence_file, "Witness file")->required();

  auto* gen = app.add_subcommand("gen", "Print a random valid instance");
  gen->add_option("--seed", opt.seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (check_h->parsed()) return cmd_check_h(opt, out);
    if (decide->parsed()) return cmd_decide(opt, out);
    if (shortest->parsed()) return cmd_shortest(opt, out);
    if (families->parsed()) return cmd_families(opt, out);
    if (oracle->parsed()) return cmd_oracle(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (gen->parsed()) return cmd_gen(opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const StateBudgetExceeded& e) {
    err << "StateBudgetExceeded: " << e.what() << "\n";
    return kExitBudget;
  }
  return kExitParse;
}

}  // namespace hrecolor
