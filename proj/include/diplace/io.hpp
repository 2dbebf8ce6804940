#pragma once

// Digraph serialization.
//
// JSON: {"name": "...", "vertices": [{"id": "a", "color": "blue"}],
//        "arcs": [["a", "b"]], "edges": [["a", "c"]]}
// where each edge stands for two opposing arcs.

#include <string>

#include "diplace/digraph.hpp"
#include "diplace/errors.hpp"

namespace diplace {

/// Throws ParseError, or DigraphError for self-loops, duplicate arcs and
/// duplicate labels.
DigraphGame parse_digraph(const std::string& json_text);
DigraphGame load_digraph(const std::string& path);

/// Opposing arc pairs are written as "edges", the rest as "arcs".
std::string emit_digraph_json(const DigraphGame& g, int indent = 2);
/// Blue vertices as circles, red as boxes; opposing arc pairs drawn as one
/// undirected edge.
std::string emit_digraph_dot(const DigraphGame& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace diplace
