#pragma once

// DOT and JSON forms of crystal graphs and check reports.
//
// JSON graph schema:
//   {"n": rank,
//    "nodes": [{"id", "kind": "word"|"tableau", "payload", "weight"}],
//    "edges": [{"src", "label": "1".."n-1"|"1bar", "dst"}]}
// A word payload is its list of letters; a tableau payload is
// {"shape": [parts], "cells": [{"row", "col", "entry"}]}.

#include "qcrystal/crystal_graph.hpp"
#include "qcrystal/report.hpp"
#include "qcrystal/theorems.hpp"

#include <json.hpp>

#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace qcrystal {

// Even arrows solid with label "i", 1bar arrows dashed with label "1̄".
std::string to_dot(const CrystalGraph& g);

nlohmann::ordered_json to_json(const CrystalGraph& g);
// Inverse of to_json. Tableau nodes are keyed by their row reading word.
// Throws std::invalid_argument on malformed input.
CrystalGraph graph_from_json(const nlohmann::json& j);

// Node labels and (source, label, target) triples, by node label text.
struct GraphSketch {
    std::multiset<std::string> nodes;
    std::multiset<std::tuple<std::string, std::string, std::string>> edges;
    friend bool operator==(const GraphSketch&, const GraphSketch&) = default;
};
// Parses the subset of DOT written by to_dot.
GraphSketch sketch_from_dot(const std::string& dot);
GraphSketch sketch_from_json(const nlohmann::json& j);

// Node label as written in DOT: the word, e.g. "1⊗2".
std::string node_label(const CrystalNode& node);
// "1".."n-1" or "1bar".
std::string label_key(Label l);
Label parse_label_key(const std::string& key);

nlohmann::ordered_json to_json(const Report& r);
nlohmann::ordered_json to_json(const ConjectureReport& r);

} // namespace qcrystal
