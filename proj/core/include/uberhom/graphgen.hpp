#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uberhom/graph.hpp"

namespace uberhom {

// Families and parameters:
//   complete n            K_n
//   complete_bipartite m n  parts 0..m-1 and m..m+n-1
//   cycle n               0..n-1 around, n >= 3
//   wheel n               n vertices in total, rim 0..n-2, hub n-1, n >= 4
//   path n                L_n
//   cube n                vertex bits are coordinates
//   petersen              generalized_petersen 5 2
//   generalized_petersen n k  outer 0..n-1, inner n..2n-1, inner i ~ i+k
//   star n                n vertices in total, centre 0
//   random_tree n         uniform via a Pruefer sequence
//   random_connected n p  random tree plus each other edge with probability p percent
struct FamilySpec {
  std::string family;
  std::vector<long long> params;
  std::optional<std::uint64_t> seed;
};

// Throws kInvalidSpec for unknown names or out-of-range parameters.
Graph generate(const FamilySpec& spec);

// Vertex (a, b) is a * |h| + b.
Graph cartesian_product(const Graph& g, const Graph& h);
// Apex vertex n joined to everything.
Graph cone(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
// g0, then g1, then a path of j new vertices from r0 to r1; j = 0 joins r0 and
// r1 by an edge.
Graph neck_stretch(const Graph& g0, std::uint32_t r0, const Graph& g1, std::uint32_t r1, std::size_t j);

// First line n, then one "u v" pair per line, 0-indexed.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

}  // namespace uberhom
