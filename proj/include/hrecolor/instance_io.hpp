#pragma once

// JSON instance and witness files.
//
//   {"G": {"edges": [["u","v"], ...], "vertices": [...]},
//    "H": {"edges": [["a","a"], ["a","b"], ...], "vertices": [...]},
//    "alpha": {"u": "a", ...}, "beta": {...}, "q": "u"}
//
// "q" is optional; loops in H are written as a repeated pair. Unknown keys
// are rejected. A witness is a list of {"from", "to", "vertex"} steps that
// starts at alpha.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hrecolor/graph.hpp"
#include "hrecolor/reconfig.hpp"

namespace hrecolor {

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Both throw ParseError for malformed JSON, missing or unknown keys, and
// names that do not resolve. Graph-level checks (MNP, homomorphism, ...) are
// left to validate_instance.
Instance parse_instance(const nlohmann::json& j);
Instance parse_instance_text(const std::string& text);
Graph parse_target_only(const nlohmann::json& j);  // reads just "H"

nlohmann::json graph_to_json(const Graph& g);
nlohmann::json instance_to_json(const Instance& inst);

nlohmann::json witness_to_json(const Instance& inst, const RecoloringSequence& s);
RecoloringSequence parse_witness(const Instance& inst, const nlohmann::json& j);

// Two-space indent, sorted keys, trailing newline.
std::string dump(const nlohmann::json& j);

std::string read_file(const std::string& path);  // throws ParseError
void write_file(const std::string& path, const std::string& text);

}  // namespace hrecolor
