#include "uberhom/graph.hpp"

#include <bit>

#include "uberhom/error.hpp"

namespace uberhom {

std::vector<std::uint32_t> vertices_of(VertexSet s) {
  std::vector<std::uint32_t> out;
  while (s) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

VertexSet set_of(const std::vector<std::uint32_t>& vertices) {
  VertexSet s = 0;
  for (auto v : vertices) {
    if (v >= 64) throw Error(ErrorCode::kMalformedInput, "vertex index exceeds 63");
    s |= VertexSet{1} << v;
  }
  return s;
}

bool lex_less(VertexSet a, VertexSet b) {
  if (a == b) return false;
  VertexSet diff = a ^ b;
  VertexSet low = diff & (~diff + 1);
  VertexSet upper = ~(low - 1);
  // Below the first difference the tuples agree; a shorter prefix sorts first.
  if ((a & low) != 0) return (b & upper) != 0;
  return (a & upper) == 0;
}

bool size_lex_less(VertexSet a, VertexSet b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return lex_less(a, b);
}

Graph::Graph(std::size_t n) : adjacency_(n, 0) {
  if (n > 64) throw Error(ErrorCode::kGuard, "graphs are limited to 64 vertices");
}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw Error(ErrorCode::kMalformedInput, "edge endpoint out of range");
  }
  if (u == v) throw Error(ErrorCode::kMalformedInput, "loops are not allowed");
  if (adjacent(u, v)) {
    throw Error(ErrorCode::kMalformedInput,
                "repeated edge " + std::to_string(u) + " " + std::to_string(v));
  }
  adjacency_[u] |= VertexSet{1} << v;
  adjacency_[v] |= VertexSet{1} << u;
  ++edge_count_;
}

bool Graph::adjacent(std::uint32_t u, std::uint32_t v) const { return ((adjacency_.at(u) >> v) & 1U) != 0; }

std::size_t Graph::degree(std::uint32_t v) const {
  return static_cast<std::size_t>(std::popcount(adjacency_.at(v)));
}

VertexSet Graph::all() const noexcept {
  return vertex_count() == 64 ? ~VertexSet{0} : (VertexSet{1} << vertex_count()) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::uint32_t u = 0; u < vertex_count(); ++u) {
    for (auto v : vertices_of(adjacency_[u])) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::closed_neighbourhood(VertexSet s) const {
  VertexSet out = s;
  for (VertexSet rest = s; rest; rest &= rest - 1) out |= adjacency_[static_cast<std::size_t>(std::countr_zero(rest))];
  return out;
}

bool Graph::is_connected_subset(VertexSet s) const {
  if (s == 0) return false;
  VertexSet reached = s & (~s + 1);
  VertexSet frontier = reached;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= adjacency_[static_cast<std::size_t>(std::countr_zero(f))];
    next &= s & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

std::vector<VertexSet> Graph::components_of(VertexSet s) const {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (rest) {
    VertexSet reached = rest & (~rest + 1);
    VertexSet frontier = reached;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= adjacency_[static_cast<std::size_t>(std::countr_zero(f))];
      next &= rest & ~reached;
      reached |= next;
      frontier = next;
    }
    out.push_back(reached);
    rest &= ~reached;
  }
  return out;
}

SimplicialComplex Graph::as_complex() const {
  return SimplicialComplex::from_edges(vertex_count(), edges());
}

std::vector<std::vector<std::uint32_t>> components(const Graph& g, const Colouring& e) {
  if (e.length() != g.vertex_count()) {
    throw Error(ErrorCode::kMalformedInput, "colouring length does not match the vertex count");
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (auto c : g.components_of(e.mask())) out.push_back(vertices_of(c));
  return out;
}

Graph relabel(const Graph& g, const std::vector<std::uint32_t>& perm) {
  if (perm.size() != g.vertex_count()) throw Error(ErrorCode::kMalformedInput, "permutation size mismatch");
  Graph out(g.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(perm.at(u), perm.at(v));
  return out;
}

}  // namespace uberhom
