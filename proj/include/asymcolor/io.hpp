#pragma once

// Text formats.
//
// Graph file: one edge "u v" per line, '#' starts a comment, blank lines are
// ignored, "vertex u" declares a vertex (needed only for a lone vertex).
// Tokens are [A-Za-z0-9_]+.
//
// Coloring file: one "u v color" line per edge, color in {black, grey}
// ("gray" accepted). Every edge of the companion graph exactly once. A JSON
// report carrying a "coloring" array is accepted in place of a coloring file.

#include <optional>
#include <string>
#include <string_view>

#include "asymcolor/graph.hpp"

namespace asymcolor {

/// Throws Error(ParseError, ...) or the validation error of the parsed edge
/// list, both with line/column provenance where one exists.
Graph parse_graph_file(std::string_view text);

EdgeColoring parse_coloring_file(std::string_view text, const Graph& g);

/// "u v color" lines in edge order.
std::string format_coloring_file(const Graph& g, const EdgeColoring& c);
std::string format_graph_file(const Graph& g);

/// Graphviz DOT; grey edges get color="gray50", black edges color="black";
/// uncoloured edges carry no attribute. Vertices first, then edges, both sorted.
std::string export_dot(const Graph& g, const std::optional<EdgeColoring>& c = std::nullopt);

}  // namespace asymcolor
