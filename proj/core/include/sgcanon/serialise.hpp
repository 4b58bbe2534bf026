#pragma once

#include <string>

#include "json.hpp"

#include "sgcanon/colgraph.hpp"
#include "sgcanon/sitegraph.hpp"

namespace sgcanon {

using json = nlohmann::ordered_json;

// Site graph document:
//   {"agents": [{"id": 1, "name": "A"}, ...],
//    "bonds":  [[[1, "x"], [2, "y"]], ...]}
// Agents are listed in id order 1..n; each bond lists its smaller endpoint
// first and bonds are sorted.
json site_graph_to_json(const SiteGraph& s);
SiteGraph site_graph_from_json(const json& doc);

// Coloured graph document:
//   {"n": 3,
//    "edges": [{"from": 1, "to": 2,
//               "colour": {"kind": "pairs", "pairs": [["a", "b"]]}}, ...]}
// Protein colours use {"kind": "protein", "name": "B"} with an optional
// "pairs" array when the colour also carries site pairs.  Edges are sorted
// by (from, to, colour).
json coloured_graph_to_json(const ColouredGraph& g);
ColouredGraph coloured_graph_from_json(const json& doc);

// Canonical byte serialisation of a coloured graph: the compact (no
// whitespace) dump of coloured_graph_to_json.  Equal graphs always produce
// equal bytes.
std::string coloured_graph_bytes(const ColouredGraph& g);

}  // namespace sgcanon
