#pragma once

// Byte-deterministic serialization of the independent graph and of
// invariant records. Vertices are declared 0..n-1 in order and edges are
// listed as (a, b) with a < b in lexicographic order.

#include <string>

#include "indegraph/invariants.hpp"
#include "indegraph/oracle_graph.hpp"

namespace indegraph {

enum class GraphFormat { kDot, kJson, kEdgeList };

/// Throws std::invalid_argument for an unknown name ("dot", "json", "edgelist").
GraphFormat parse_graph_format(const std::string& name);

/// DOT: `graph indep_<n> { ... }` with `a -- b;` edges. `label_orders` adds
/// `[label="a o=<order>"]` to vertex declarations (DOT only).
std::string export_graph(const IndependentGraph& g, GraphFormat format,
                         bool label_orders = false);

/// One JSON object per invariant record; absent optionals become null.
std::string invariants_to_json(const InvariantSet& inv);

}  // namespace indegraph
