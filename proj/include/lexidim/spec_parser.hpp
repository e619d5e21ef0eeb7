#pragma once

#include <string>
#include <vector>

#include "lexidim/graph.hpp"

namespace lexidim {

/// Parses a graph specification. Two forms are accepted:
///
///   edge list     "n m" header line, then m lines "u v" (0-based)
///   generator     path:n | cycle:n | complete:n | complete_bipartite:r,s |
///                 empty:n | complement(spec) | join(spec,spec)
///
/// Single-letter aliases: P=path, C=cycle, K=complete (K:r,s means
/// complete_bipartite), N=empty. A leading digit selects the edge-list form.
Graph parse_graph_spec(const std::string& text);

/// Splits a semicolon-separated list of member specs and parses each.
std::vector<Graph> parse_member_list(const std::string& list);

}  // namespace lexidim
