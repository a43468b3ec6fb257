#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "uberhom/bold.hpp"
#include "uberhom/error.hpp"
#include "uberhom/graphgen.hpp"
#include "uberhom/uber.hpp"

using namespace uberhom;

namespace {

using Ranks = std::map<Multidegree, std::size_t>;

SimplicialComplex k2() { return SimplicialComplex(2, {{0, 1}}); }

Ranks level_ranks(const GradedComplex& c, int j) {
  Ranks out;
  for (const auto& d : c.degrees()) {
    if (d[0] == j) out[{d[1], d[2], 0}] = c.size(d);
  }
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kMalformedInput;
}

}  // namespace

TEST_CASE("weights") {
  SimplicialComplex tri(3, {{0, 1, 2}});
  CHECK(weight(tri, {0, 1}, Colouring(3, 0b111)) == 0);
  CHECK(weight(tri, {0, 1}, Colouring(3, 0)) == 2);
  CHECK(weight(tri, {0, 1, 2}, Colouring::parse("101")) == 1);
  CHECK(code_of([&] { weight(k2(), {0, 2}, Colouring(2, 0)); }) == ErrorCode::kUnknownSimplex);
}

TEST_CASE("horizontal complexes") {
  std::mt19937_64 rng(1);
  auto x = oracle::random_complex(rng, 5, 4, 2);
  auto zero = horizontal_complex(x, Colouring(5, 0), Field::gf2());
  for (const auto& d : zero.differential_degrees()) CHECK(zero.stored_differential(d)->is_zero());

  auto full = horizontal_complex(x, Colouring(5, 31), Field::rational());
  for (const auto& d : full.degrees()) CHECK(d[1] == 0);
  std::size_t entries = 0;
  for (const auto& d : full.differential_degrees()) entries += full.stored_differential(d)->nnz();
  std::size_t faces = 0;
  for (std::size_t dim = 1; dim <= x.dimension(); ++dim) faces += (dim + 1) * x.simplices(dim).size();
  CHECK(entries == faces);

  auto h = horizontal_complex(k2(), Colouring::parse("10"), Field::rational());
  // Edge has weight 1; deleting the 1-coloured vertex 0 leaves {1}, also weight 1.
  CHECK(h.basis({1, 1, 0}) == std::vector<std::string>{"{0,1}"});
  CHECK(h.basis({0, 1, 0}) == std::vector<std::string>{"{1}"});
  CHECK(h.differential({1, 1, 0}) == SparseMatrix::from_dense({{1}}));
}

TEST_CASE("horizontal homology") {
  std::mt19937_64 rng(2);
  auto x = oracle::random_complex(rng, 5, 3, 2);
  auto zero = horizontal_homology(x, Colouring(5, 0), Field::gf2());
  for (std::size_t dim = 0; dim <= x.dimension(); ++dim) {
    CHECK(zero.rank({int(dim), int(dim + 1), 0}) == x.simplices(dim).size());
  }
  auto ones = horizontal_homology(generate({"cycle", {5}, {}}).as_complex(), Colouring(5, 31), Field::gf2());
  CHECK(ones.ranks == Ranks{{{0, 0, 0}, 1}, {{1, 0, 0}, 1}});
  CHECK(horizontal_homology(k2(), Colouring::parse("10"), Field::gf2()).ranks == Ranks{{{0, 0, 0}, 1}});
}

TEST_CASE("boundary splits into weight-preserving and weight-lowering parts") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = oracle::random_complex(rng, 6, 5, 3);
    Colouring e(6, rng() % 64);
    auto h = horizontal_complex(x, e, Field::rational());
    for (std::size_t dim = 1; dim <= x.dimension(); ++dim) {
      for (const auto& s : x.simplices(dim)) {
        auto w = weight(x, s, e);
        Multidegree d{int(dim), int(w), 0};
        auto col = *h.find(d, simplex_label(s));
        for (std::size_t p = 0; p < s.size(); ++p) {
          Simplex face = s;
          face.erase(face.begin() + static_cast<long>(p));
          auto fw = weight(x, face, e);
          if (e.bit(s[p])) {
            CHECK(fw == w);
            auto row = *h.find({int(dim - 1), int(w), 0}, simplex_label(face));
            CHECK(abs(h.differential(d).at(Index(row), Index(col))) == 1);
          } else {
            CHECK(fw + 1 == w);
          }
        }
      }
    }
  }
}

TEST_CASE("transition maps") {
  auto f = transition_chain_map(k2(), Colouring::parse("00"), Colouring::parse("10"), Field::gf2());
  CHECK(f.commutes());
  CHECK(f.block({0, 1, 0}) == SparseMatrix::from_dense({{0, 1}}));
  CHECK(f.block({1, 2, 0}).is_zero());
  CHECK(code_of([] {
          transition_chain_map(k2(), Colouring::parse("00"), Colouring::parse("11"), Field::gf2());
        }) == ErrorCode::kNotAdjacent);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = oracle::random_complex(rng, 5, 4, 3);
    Colouring a(5, rng() % 32);
    auto ups = covers(a);
    if (ups.empty()) continue;
    CHECK(transition_chain_map(x, a, ups[rng() % ups.size()], Field::rational()).commutes());
  }
}

TEST_CASE("induced maps of injective coloured maps") {
  auto tri = generate({"complete", {3}, {}}).as_complex();
  ColouredMap id{tri, Colouring::parse("101"), tri, Colouring::parse("101"), {0, 1, 2}};
  auto m = induced_injective_map(id, Field::gf2());
  for (const auto& d : m.block_degrees()) CHECK(m.block(d) == SparseMatrix::identity(m.source().size(d)));

  ColouredMap inclusion{k2(), Colouring::parse("10"), tri, Colouring::parse("100"), {0, 1}};
  auto inc = induced_injective_map(inclusion, Field::rational());
  CHECK(inc.commutes());
  for (const auto& d : inc.block_degrees()) {
    CHECK(inc.block(d).nnz() == inc.source().size(d));
    CHECK(inc.target().size(d) >= inc.source().size(d));
  }

  SimplicialComplex face(3, {{0, 1, 2}});
  SimplicialComplex edge(2, {{0, 1}});
  // Vertices 0 and 2 collapse onto vertex 1 of the edge; only 2 is 1-coloured.
  ColouredMap collapse{face, Colouring::parse("001"), edge, Colouring::parse("01"), {1, 0, 1}};
  CHECK(code_of([&] { induced_injective_map(collapse, Field::gf2()); }) == ErrorCode::kUnsupportedMap);

  ColouredMap recoloured{tri, Colouring::parse("101"), tri, Colouring::parse("100"), {0, 1, 2}};
  CHECK(code_of([&] { induced_injective_map(recoloured, Field::gf2()); }) == ErrorCode::kNotColoured);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = oracle::random_complex(rng, 5, 4, 3);
    std::vector<std::uint32_t> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Simplex> image;
    for (std::size_t dim = 0; dim <= x.dimension(); ++dim) {
      for (const auto& s : x.simplices(dim)) {
        Simplex t;
        for (auto v : s) t.push_back(perm[v]);
        image.push_back(t);
      }
    }
    SimplicialComplex y(5, image);
    Colouring a(5, rng() % 32);
    std::uint64_t b = 0;
    for (std::uint32_t v = 0; v < 5; ++v) {
      if (a.bit(v)) b |= 1U << perm[v];
    }
    auto map = induced_injective_map({x, a, y, Colouring(5, b), perm}, Field::rational());
    CHECK(map.commutes());
  }
}

TEST_CASE("degree (0,0) of a graph counts components of the coloured subgraph") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_graph(rng, 6, 40);
    Colouring e(6, rng() % 64);
    CHECK(horizontal_homology(g.as_complex(), e, Field::gf2()).rank({0, 0, 0}) == components(g, e).size());
  }
}

TEST_CASE("covers and signs") {
  CHECK(covers(Colouring::parse("11")).empty());
  auto c = covers(Colouring::parse("00"));
  REQUIRE(c.size() == 2);
  CHECK(c[0] == Colouring::parse("10"));
  CHECK(c[1] == Colouring::parse("01"));
  CHECK(covers(Colouring::parse("101")) == std::vector<Colouring>{Colouring::parse("111")});

  CHECK(sign(Colouring::parse("011"), Colouring::parse("111")) == 0);
  CHECK(sign(Colouring::parse("101"), Colouring::parse("111")) == 1);
  CHECK(code_of([] { sign(Colouring::parse("100"), Colouring::parse("011")); }) == ErrorCode::kNotAdjacent);

  // Every square of B(4), written out directly.
  int squares = 0;
  for (std::uint64_t x = 0; x < 16; ++x) {
    for (int s = 0; s < 4; ++s) {
      for (int t = s + 1; t < 4; ++t) {
        if (((x >> s) & 1U) || ((x >> t) & 1U)) continue;
        auto koszul = [](std::uint64_t from, int bit) { return __builtin_popcountll(from & ((1ULL << bit) - 1)) % 2; };
        int left = koszul(x, s) + koszul(x | (1ULL << s), t);
        int right = koszul(x, t) + koszul(x | (1ULL << t), s);
        CHECK((left + right) % 2 == 1);
        CHECK(sign(Colouring(4, x), Colouring(4, x | (1ULL << s))) == koszul(x, s));
        ++squares;
      }
    }
  }
  CHECK(squares == 24);
  for (std::size_t m = 1; m <= 8; ++m) CHECK(sign_square_condition(m));
}

TEST_CASE("über complex examples") {
  SimplicialComplex point(1, {});
  auto c = uber_complex(point, Field::gf2());
  CHECK(level_ranks(c, 0) == Ranks{{{0, 1, 0}, 1}});
  CHECK(level_ranks(c, 1) == Ranks{{{0, 0, 0}, 1}});
  CHECK(c.differential_degrees().empty());
  CHECK(uber_homology(point, Field::gf2()).ranks == Ranks{{{0, 0, 1}, 1}, {{1, 0, 0}, 1}});

  auto u = uber_complex(k2(), Field::gf2());
  CHECK(level_ranks(u, 0) == Ranks{{{0, 1, 0}, 2}, {{1, 2, 0}, 1}});
  CHECK(level_ranks(u, 1) == Ranks{{{0, 0, 0}, 2}});
  CHECK(level_ranks(u, 2) == Ranks{{{0, 0, 0}, 1}});
  CHECK(u.differential({0, 0, 1}).is_zero());
  CHECK(rank(u.differential({1, 0, 0}), Field::gf2()) == 1);
  CHECK(validate(u).ok);
  auto expected = Ranks{{{0, 0, 1}, 2}, {{0, 1, 2}, 1}, {{1, 0, 0}, 1}};
  CHECK(uber_homology(k2(), Field::gf2()).ranks == expected);
  CHECK(homology(u).ranks == expected);

  auto split = SimplicialComplex(2, {});
  CHECK(code_of([&] { uber_complex(split, Field::gf2()); }) == ErrorCode::kMalformedInput);
}

TEST_CASE("über complexes square to zero and stream to the same ranks") {
  for (const auto& g : oracle::catalogue(4, true)) {
    for (const auto& f : {Field::gf2(), Field::gfp(3), Field::rational()}) {
      auto c = uber_complex(g.as_complex(), f);
      CHECK(validate(c).ok);
      CHECK(homology(c).ranks == uber_homology(g.as_complex(), f).ranks);
    }
  }
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 6; ++trial) {
    auto x = oracle::random_complex(rng, 4, 2, 2);
    auto c = uber_complex(x, Field::rational());
    CHECK(validate(c).ok);
  }
}

TEST_CASE("über (0,0) slice matches bold homology and ignores relabelling") {
  std::mt19937_64 rng(13);
  for (const auto& g : oracle::catalogue(5, true)) {
    auto u = uber_homology(g.as_complex(), Field::gf2());
    std::map<int, std::size_t> slice;
    for (const auto& [d, r] : u.ranks) {
      if (d[1] == 0 && d[2] == 0) slice[d[0]] = r;
    }
    std::map<int, std::size_t> bold;
    for (const auto& [d, r] : bold_homology(g, Field::gf2()).ranks) bold[d[0]] = r;
    CHECK(slice == bold);

    std::vector<std::uint32_t> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(uber_homology(relabel(g, perm).as_complex(), Field::gf2()).ranks == u.ranks);
  }
}
