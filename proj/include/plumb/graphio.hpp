#pragma once

// Line-based plumbing files, JSON q-series and Graphviz DOT export.
//
//   # comment
//   v <id> <integer weight>
//   e <id1> <id2>
//   root <id>

#include "plumb/dagcat.hpp"
#include "plumb/plumbing.hpp"
#include "plumb/qseries.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace plumb {

/// Throws ParseError (line/column, 1-based) on any syntax or graph error.
PlumbedGraph parse_plumbing(std::string_view text);
PlumbedGraph load_plumbing(const std::string& path);

/// Canonical text: vertices by id, edges by (id, id), root last.
std::string print_plumbing(const PlumbedGraph& pg);

bool same_plumbing(const PlumbedGraph& a, const PlumbedGraph& b);

/// Tree edges point from parent to child when a root is given, else from smaller to larger id.
std::string emit_dot(const Tree& tree, std::optional<VertexId> root = std::nullopt);
/// Nodes in key order, labeled "bits,depth"; one edge per line.
std::string emit_dot(const dag::ColoredDag& q);

/// [{"exponent":"p/q","coefficient":n}, ...] sorted by exponent.
std::string serialize_series(const QSeries& s);

/// Inverse of serialize_series. Without an explicit order the largest exponent (0 for the
/// empty series) is used. Throws Error(parse) on malformed input or duplicate exponents.
QSeries deserialize_series(std::string_view text, std::optional<Rational> order = std::nullopt);

}  // namespace plumb
