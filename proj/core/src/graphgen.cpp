#include "uberhom/graphgen.hpp"

#include <random>
#include <set>
#include <sstream>

#include "uberhom/error.hpp"

namespace uberhom {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::kInvalidSpec, what); }

void expect_params(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    invalid(spec.family + " expects " + std::to_string(count) + " parameter(s)");
  }
}

std::uint32_t checked(long long value, long long lo, long long hi, const std::string& what) {
  if (value < lo || value > hi) {
    invalid(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<std::uint32_t>(value);
}

Graph random_tree(std::uint32_t n, std::mt19937_64& rng) {
  Graph g(n);
  if (n < 2) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  std::vector<std::uint32_t> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::uint32_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::set<std::uint32_t> leaves;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (auto c : code) {
    std::uint32_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  auto last = leaves.begin();
  std::uint32_t u = *last++;
  g.add_edge(u, *last);
  return g;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  const std::string& f = spec.family;
  std::mt19937_64 rng(spec.seed.value_or(1));
  if (f == "complete") {
    expect_params(spec, 1);
    std::uint32_t n = checked(p[0], 1, 64, "n");
    Graph g(n);
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
  }
  if (f == "complete_bipartite") {
    expect_params(spec, 2);
    std::uint32_t m = checked(p[0], 1, 63, "m");
    std::uint32_t n = checked(p[1], 1, 64 - m, "n");
    Graph g(m + n);
    for (std::uint32_t u = 0; u < m; ++u) {
      for (std::uint32_t v = 0; v < n; ++v) g.add_edge(u, m + v);
    }
    return g;
  }
  if (f == "cycle") {
    expect_params(spec, 1);
    std::uint32_t n = checked(p[0], 3, 64, "n");
    Graph g(n);
    for (std::uint32_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
  }
  if (f == "wheel") {
    expect_params(spec, 1);
    std::uint32_t n = checked(p[0], 4, 64, "n");
    return cone(generate({"cycle", {n - 1}, std::nullopt}));
  }
  if (f == "path") {
    expect_params(spec, 1);
    std::uint32_t n = checked(p[0], 1, 64, "n");
    Graph g(n);
    for (std::uint32_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
  }
  if (f == "cube") {
    expect_params(spec, 1);
    std::uint32_t d = checked(p[0], 0, 6, "dimension");
    Graph g(std::size_t{1} << d);
    for (std::uint32_t v = 0; v < (1U << d); ++v) {
      for (std::uint32_t b = 0; b < d; ++b) {
        std::uint32_t w = v ^ (1U << b);
        if (v < w) g.add_edge(v, w);
      }
    }
    return g;
  }
  if (f == "petersen") {
    expect_params(spec, 0);
    return generate({"generalized_petersen", {5, 2}, std::nullopt});
  }
  if (f == "generalized_petersen") {
    expect_params(spec, 2);
    std::uint32_t n = checked(p[0], 3, 32, "n");
    std::uint32_t k = checked(p[1], 1, (n - 1) / 2, "k");
    Graph g(2 * n);
    for (std::uint32_t i = 0; i < n; ++i) {
      g.add_edge(i, (i + 1) % n);
      g.add_edge(i, n + i);
      std::uint32_t a = n + i;
      std::uint32_t b = n + (i + k) % n;
      if (!g.adjacent(a, b)) g.add_edge(a, b);
    }
    return g;
  }
  if (f == "star") {
    expect_params(spec, 1);
    std::uint32_t n = checked(p[0], 1, 64, "n");
    Graph g(n);
    for (std::uint32_t v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
  }
  if (f == "random_tree") {
    expect_params(spec, 1);
    return random_tree(checked(p[0], 1, 64, "n"), rng);
  }
  if (f == "random_connected") {
    expect_params(spec, 2);
    std::uint32_t n = checked(p[0], 1, 64, "n");
    std::uint32_t percent = checked(p[1], 0, 100, "p");
    Graph g = random_tree(n, rng);
    std::uniform_int_distribution<std::uint32_t> roll(0, 99);
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = u + 1; v < n; ++v) {
        if (!g.adjacent(u, v) && roll(rng) < percent) g.add_edge(u, v);
      }
    }
    return g;
  }
  invalid("unknown family '" + f + "'");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const auto m = static_cast<std::uint32_t>(h.vertex_count());
  Graph out(g.vertex_count() * m);
  for (std::uint32_t a = 0; a < g.vertex_count(); ++a) {
    for (auto [b, c] : h.edges()) out.add_edge(a * m + b, a * m + c);
  }
  for (auto [a, c] : g.edges()) {
    for (std::uint32_t b = 0; b < m; ++b) out.add_edge(a * m + b, c * m + b);
  }
  return out;
}

Graph cone(const Graph& g) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  Graph out(n + 1, g.edges());
  for (std::uint32_t v = 0; v < n; ++v) out.add_edge(v, n);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  Graph out(n + h.vertex_count(), g.edges());
  for (auto [u, v] : h.edges()) out.add_edge(n + u, n + v);
  return out;
}

Graph neck_stretch(const Graph& g0, std::uint32_t r0, const Graph& g1, std::uint32_t r1, std::size_t j) {
  if (r0 >= g0.vertex_count() || r1 >= g1.vertex_count()) {
    throw Error(ErrorCode::kInvalidSpec, "neck-stretch root out of range");
  }
  Graph base = disjoint_union(g0, g1);
  const auto n = static_cast<std::uint32_t>(base.vertex_count());
  Graph out(n + j, base.edges());
  std::uint32_t previous = r0;
  for (std::uint32_t k = 0; k < j; ++k) {
    out.add_edge(previous, n + k);
    previous = n + k;
  }
  out.add_edge(previous, static_cast<std::uint32_t>(g0.vertex_count()) + r1);
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n < 0) throw Error(ErrorCode::kMalformedInput, "edge list must start with the vertex count");
  if (n > 64) throw Error(ErrorCode::kGuard, "graphs are limited to 64 vertices");
  Graph g(static_cast<std::size_t>(n));
  long long u = 0;
  long long v = 0;
  while (in >> u) {
    if (!(in >> v)) throw Error(ErrorCode::kMalformedInput, "edge list has a dangling endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorCode::kMalformedInput, "edge endpoint out of range");
    g.add_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  if (!in.eof()) throw Error(ErrorCode::kMalformedInput, "edge list contains a non-integer token");
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace uberhom
