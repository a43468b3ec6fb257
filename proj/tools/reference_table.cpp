#include "reference_table.hpp"

#include <random>

#include "uberhom/graphgen.hpp"

namespace uberhom::cli {

namespace {

using Ranks = std::map<int, std::size_t>;

Graph gen(const std::string& family, std::vector<long long> params, std::optional<std::uint64_t> seed = {}) {
  return generate({family, std::move(params), seed});
}

TableRow fixed(std::string name, std::function<Graph()> make, Ranks ranks, long long chi) {
  return {name, {{name, std::move(make)}}, [ranks](const Graph&) { return ranks; },
          [chi](const Graph&) { return chi; }};
}

TableRow family(std::string name, std::string fam, long long lo, long long hi,
                std::function<Ranks(long long)> ranks, std::function<long long(long long)> chi,
                std::string symbol) {
  TableRow row{name, {}, {}, {}};
  for (long long n = lo; n <= hi; ++n) {
    row.graphs.push_back({symbol + std::to_string(n), [fam, n] { return gen(fam, {n}); }});
  }
  row.expected = [ranks](const Graph& g) { return ranks(static_cast<long long>(g.vertex_count())); };
  row.expected_chi = [chi](const Graph& g) { return chi(static_cast<long long>(g.vertex_count())); };
  return row;
}

Graph product(const std::string& a, long long an, const std::string& b, long long bn) {
  return cartesian_product(gen(a, {an}), gen(b, {bn}));
}

}  // namespace

std::vector<TableRow> reference_rows() {
  std::vector<TableRow> rows;
  rows.push_back(family("K_n, n = 1..7", "complete", 1, 7, [](long long) { return Ranks{{1, 1}}; },
                        [](long long) { return -1LL; }, "K"));

  TableRow bip{"K_m,n, 2 <= m,n <= 4", {}, [](const Graph&) { return Ranks{{2, 1}}; },
               [](const Graph&) { return 1LL; }};
  for (long long m = 2; m <= 4; ++m) {
    for (long long n = 2; n <= 4; ++n) {
      bip.graphs.push_back({"K" + std::to_string(m) + "," + std::to_string(n),
                            [m, n] { return gen("complete_bipartite", {m, n}); }});
    }
  }
  rows.push_back(bip);

  rows.push_back(family("C_n, n = 3..9", "cycle", 3, 9, [](long long n) { return Ranks{{int(n - 2), 1}}; },
                        [](long long n) { return n % 2 ? -1LL : 1LL; }, "C"));
  rows.push_back(family("W_n, n = 4..9", "wheel", 4, 9, [](long long n) { return Ranks{{int(n - 3), 1}}; },
                        [](long long n) { return n % 2 ? 1LL : -1LL; }, "W"));
  rows.push_back(family("L_n, n = 3..9", "path", 3, 9, [](long long) { return Ranks{}; },
                        [](long long) { return 0LL; }, "L"));

  TableRow trees{"trees, 50 random, 3 <= n <= 10", {}, [](const Graph&) { return Ranks{}; },
                 [](const Graph&) { return 0LL; }};
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 50; ++t) {
    long long n = 3 + static_cast<long long>(rng() % 8);
    auto seed = rng();
    trees.graphs.push_back({"tree" + std::to_string(t), [n, seed] { return gen("random_tree", {n}, seed); }});
  }
  rows.push_back(trees);

  rows.push_back(fixed("Cube(2) = C4", [] { return gen("cube", {2}); }, {{2, 1}}, 1));
  rows.push_back(fixed("Cube(3)", [] { return gen("cube", {3}); }, {{4, 3}}, 3));
  rows.push_back(fixed("Cube(4)", [] { return gen("cube", {4}); }, {{8, 21}}, 21));
  rows.push_back(fixed("Petersen", [] { return gen("petersen", {}); }, {{4, 1}}, 1));
  rows.push_back(fixed("K3 x L2", [] { return product("complete", 3, "path", 2); }, {{2, 1}}, 1));
  rows.push_back(fixed("K4 x L2", [] { return product("complete", 4, "path", 2); }, {{2, 1}}, 1));
  rows.push_back(fixed("K3 x C4", [] { return product("complete", 3, "cycle", 4); }, {{5, 1}, {6, 2}}, 1));
  rows.push_back(fixed("K4 x C4", [] { return product("complete", 4, "cycle", 4); }, {{5, 1}, {7, 2}}, -3));
  rows.push_back(fixed("K3 x K3", [] { return product("complete", 3, "complete", 3); }, {{4, 5}}, 5));
  rows.push_back(fixed("C3 x L2", [] { return product("cycle", 3, "path", 2); }, {{2, 1}}, 1));
  rows.push_back(fixed("C5 x L2", [] { return product("cycle", 5, "path", 2); }, {{4, 1}}, 1));
  rows.push_back(fixed("C6 x L2", [] { return product("cycle", 6, "path", 2); }, {{6, 1}}, 1));
  rows.push_back(fixed("C7 x L2", [] { return product("cycle", 7, "path", 2); }, {{8, 1}}, 1));
  return rows;
}

std::vector<std::pair<std::string, std::string>> reference_skipped() {
  return {{"Cube(5)", "homology unknown, chi +-455"},
          {"K5 x C4", "homology unknown, chi -1"},
          {"K6 x C4", "homology unknown, chi -3"}};
}

}  // namespace uberhom::cli
