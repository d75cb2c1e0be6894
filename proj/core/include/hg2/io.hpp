#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hg2/hg2.hpp"

namespace hg2::io {

/// Parses an instance document:
///
///   {
///     "hypergraph": {"nodes": [...], "edges": [{"id", "head", "tail", "weight"?}]},
///     "graph":      {"nodes": [...], "edges": [{"src", "dst", "weight"?}]},
///     "connectors": {"node": [{"h", "g", "weight"?}], "edge": [{"h", "g", "weight"?}]}
///   }
///
/// Weights default to 1. Unknown fields are rejected. Throws hg2::Error with
/// code ParseError, SchemaError or SemanticError; `location()` is a JSON
/// pointer to the offending element and, for SemanticError, `cause()` is
/// the construction error.
Hg2 load(std::string_view text);

/// Reads and loads a file. An unreadable file is reported as ParseError.
Hg2 load_file(const std::filesystem::path& path);

/// Canonical document: keys sorted, lists sorted by label or id, weights in
/// shortest decimal form. Byte-identical for equal instances.
std::string save(const Hg2& hg);

/// save(load(text)).
std::string canonicalize(std::string_view text);

/// Graphviz digraph. Hyperedges are star-expanded into box nodes with arcs
/// head -> box -> tail; node connectors are dashed and edge connectors bold,
/// both pointing from the hypergraph layer to the graph layer.
std::string export_dot(const Hg2& hg);

}  // namespace hg2::io
