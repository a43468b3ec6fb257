#include "uberhom/domination.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "uberhom/error.hpp"

namespace uberhom {

namespace {

void guard(const Graph& g, bool allow_large) {
  if (g.vertex_count() > 28 && !allow_large) {
    throw Error(ErrorCode::kGuard, "enumeration refused above 28 vertices without override");
  }
}

}  // namespace

std::vector<VertexSet> connected_subsets(const Graph& g, bool allow_large) {
  guard(g, allow_large);
  std::vector<VertexSet> out;
  std::vector<VertexSet> layer;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) layer.push_back(VertexSet{1} << v);
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), lex_less);
    out.insert(out.end(), layer.begin(), layer.end());
    std::unordered_set<VertexSet> next;
    for (VertexSet s : layer) {
      VertexSet grow = g.closed_neighbourhood(s) & ~s;
      for (; grow; grow &= grow - 1) next.insert(s | (grow & (~grow + 1)));
    }
    layer.assign(next.begin(), next.end());
  }
  return out;
}

std::vector<VertexSet> connected_dominating_sets(const Graph& g, bool allow_large) {
  guard(g, allow_large);
  std::vector<VertexSet> out;
  if (!g.is_connected()) return out;
  for (VertexSet s : connected_subsets(g, allow_large)) {
    if (g.is_dominating(s)) out.push_back(s);
  }
  return out;
}

IntPolynomial connected_domination_polynomial(const Graph& g, bool allow_large) {
  std::vector<std::int64_t> coefficients(g.vertex_count() + 1, 0);
  for (VertexSet s : connected_dominating_sets(g, allow_large)) ++coefficients[std::popcount(s)];
  return IntPolynomial(std::move(coefficients));
}

IntPolynomial domination_polynomial(const Graph& g, bool allow_large) {
  guard(g, allow_large);
  if (g.vertex_count() > 40) throw Error(ErrorCode::kGuard, "subset enumeration too large");
  std::vector<std::int64_t> coefficients(g.vertex_count() + 1, 0);
  const VertexSet all = g.all();
  for (VertexSet s = 0;; ++s) {
    if (g.is_dominating(s)) ++coefficients[std::popcount(s)];
    if (s == all) break;
  }
  return IntPolynomial(std::move(coefficients));
}

int connected_domination_number(const Graph& g) {
  return connected_domination_polynomial(g).lowest_degree();
}

}  // namespace uberhom
