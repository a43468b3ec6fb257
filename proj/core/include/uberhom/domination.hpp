#pragma once

#include <vector>

#include "uberhom/graph.hpp"
#include "uberhom/polynomial.hpp"

namespace uberhom {

// Vertex sets inducing a connected subgraph whose closed neighbourhood is the
// whole graph, in (size, lexicographic) order. Empty for disconnected graphs.
// Graphs above 28 vertices throw kGuard unless allow_large is set.
std::vector<VertexSet> connected_dominating_sets(const Graph& g, bool allow_large = false);

// Connected subsets grown by neighbour expansion, in (size, lexicographic) order.
std::vector<VertexSet> connected_subsets(const Graph& g, bool allow_large = false);

IntPolynomial connected_domination_polynomial(const Graph& g, bool allow_large = false);
// Counts all dominating sets; exhaustive over subsets, so limited to 28 vertices.
IntPolynomial domination_polynomial(const Graph& g, bool allow_large = false);

// Minimum size of a connected dominating set, or -1 when none exists.
int connected_domination_number(const Graph& g);

}  // namespace uberhom
