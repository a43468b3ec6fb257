#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "uberhom/poset.hpp"
#include "uberhom/simplicial.hpp"

namespace uberhom {

// Vertex subset as a bit mask; graphs hold at most 64 vertices.
using VertexSet = std::uint64_t;
using Edge = std::pair<std::uint32_t, std::uint32_t>;

std::vector<std::uint32_t> vertices_of(VertexSet s);
VertexSet set_of(const std::vector<std::uint32_t>& vertices);
// Lexicographic order of the sorted vertex tuples.
bool lex_less(VertexSet a, VertexSet b);
// Size first, then lexicographic.
bool size_lex_less(VertexSet a, VertexSet b);

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Throws kMalformedInput for loops, repeated edges, or out-of-range endpoints.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  void add_edge(std::uint32_t u, std::uint32_t v);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  VertexSet neighbours(std::uint32_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::uint32_t v) const;
  VertexSet all() const noexcept;
  // Sorted pairs (u, v) with u < v.
  std::vector<Edge> edges() const;

  // Closed neighbourhood of a set.
  VertexSet closed_neighbourhood(VertexSet s) const;
  bool is_connected_subset(VertexSet s) const;
  bool is_dominating(VertexSet s) const { return closed_neighbourhood(s) == all(); }
  bool is_connected() const { return vertex_count() > 0 && is_connected_subset(all()); }
  // Components of the subgraph induced by s, sorted by minimum vertex.
  std::vector<VertexSet> components_of(VertexSet s) const;

  SimplicialComplex as_complex() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

// Components of the 1-coloured subgraph, each sorted, ordered by minimum vertex.
std::vector<std::vector<std::uint32_t>> components(const Graph& g, const Colouring& e);

// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<std::uint32_t>& perm);

}  // namespace uberhom
