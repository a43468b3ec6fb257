#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "uberhom/bold.hpp"
#include "uberhom/error.hpp"
#include "uberhom/graphgen.hpp"

using namespace uberhom;

namespace {

using fixture::boolean_cube;
using fixture::cube_matching;
using fixture::ref;

Multidegree d1(int i) { return {i, 0, 0}; }

// Degree 1 {x, y}, degree 2 {u, v}, all coefficients 1.
GradedComplex square() {
  GradedComplex c(Field::gf2(), 1, {1, 0, 0});
  c.add_generators(d1(1), {"x", "y"});
  c.add_generators(d1(2), {"u", "v"});
  c.set_differential(d1(1), SparseMatrix::from_dense({{1, 1}, {1, 1}}));
  return c;
}

void grow_and_check(const GradedComplex& c, std::mt19937_64& rng) {
  auto m = fixture::grow_matching(c, rng);
  CHECK_FALSE(oracle::has_directed_cycle(c, m));
  auto reduced = morse_reduce(c, m);
  CHECK(validate(reduced).ok);
  CHECK(homology(reduced).ranks == homology(c).ranks);
}

}  // namespace

TEST_CASE("matching validation") {
  auto c = boolean_cube(Field::gf2());
  CHECK_NOTHROW(validate_matching(c, MorseMatching{}));
  CHECK_NOTHROW(validate_matching(c, cube_matching(c)));

  MorseMatching shared;
  shared.add(ref(c, 1, "{1}"), ref(c, 2, "{1,2}"));
  shared.add(ref(c, 1, "{1}"), ref(c, 2, "{1,3}"));
  try {
    validate_matching(c, shared);
    FAIL("expected not-a-matching");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAMatching);
  }

  MorseMatching zero;
  zero.add(ref(c, 1, "{1}"), ref(c, 2, "{2,3}"));
  try {
    validate_matching(c, zero);
    FAIL("expected invalid-edge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidEdge);
  }
}

TEST_CASE("acyclicity") {
  auto c = boolean_cube(Field::gf2());
  CHECK(is_acyclic(c, MorseMatching{}));
  CHECK(is_acyclic(c, cube_matching(c)));
  CHECK_FALSE(oracle::has_directed_cycle(c, cube_matching(c)));

  auto sq = square();
  MorseMatching bad;
  bad.add({d1(1), 0}, {d1(2), 0});
  bad.add({d1(1), 1}, {d1(2), 1});
  CHECK_FALSE(is_acyclic(sq, bad));
  CHECK(oracle::has_directed_cycle(sq, bad));
}

TEST_CASE("layered certificate") {
  auto c = boolean_cube(Field::gf2());
  LayerFunction flat;
  for (const auto& d : c.degrees()) {
    flat.phi[d].assign(c.size(d), 0);
    flat.block[d].assign(c.size(d), 0);
  }
  CHECK(layered_acyclicity(c, cube_matching(c), flat).ok);

  auto g = generate({"cycle", {4}, {}});
  auto r = retraction_matching(g);
  CHECK(layered_acyclicity(bold_complex(g, Field::gf2()), r.matching, r.layers).ok);

  auto sq = square();
  MorseMatching bad;
  bad.add({d1(1), 0}, {d1(2), 0});
  bad.add({d1(1), 1}, {d1(2), 1});
  LayerFunction one;
  for (const auto& d : sq.degrees()) {
    one.phi[d].assign(2, 0);
    one.block[d].assign(2, 0);
  }
  auto cert = layered_acyclicity(sq, bad, one);
  CHECK_FALSE(cert.ok);
  CHECK(cert.violated_clause == 1);

  // Splitting the pairs into two blocks breaks the cross-block clause instead.
  LayerFunction split = one;
  split.block[d1(1)] = {0, 1};
  split.block[d1(2)] = {0, 1};
  auto cert2 = layered_acyclicity(sq, bad, split);
  CHECK_FALSE(cert2.ok);
  CHECK(cert2.violated_clause == 3);

  LayerFunction uneven = split;
  uneven.phi[d1(2)] = {1, 0};
  CHECK(layered_acyclicity(sq, bad, uneven).violated_clause == 2);
}

TEST_CASE("reduction examples") {
  auto c = boolean_cube(Field::rational());
  auto same = morse_reduce(c, MorseMatching{});
  for (const auto& d : c.degrees()) {
    CHECK(same.basis(d) == c.basis(d));
    CHECK(same.differential(d) == c.differential(d));
  }
  CHECK(morse_reduce(c, cube_matching(c)).total_size() == 0);

  auto l3 = generate({"path", {3}, {}});
  auto r = retraction_matching(l3);
  auto reduced = morse_reduce(bold_complex(l3, Field::gf2()), r.matching, &r.layers);
  std::vector<std::string> labels;
  for (const auto& d : reduced.degrees()) {
    for (const auto& l : reduced.basis(d)) labels.push_back(l);
  }
  CHECK(labels == std::vector<std::string>{"{1}@010", "{0,1}@110", "{1,2}@011", "{0,1,2}@111"});
  CHECK(homology(reduced).ranks.empty());

  auto sq = square();
  MorseMatching bad;
  bad.add({d1(1), 0}, {d1(2), 0});
  bad.add({d1(1), 1}, {d1(2), 1});
  CHECK_THROWS_AS(morse_reduce(sq, bad), Error);
}

TEST_CASE("reduction keeps homology for randomly grown matchings") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Field f = trial % 3 == 0 ? Field::rational() : (trial % 3 == 1 ? Field::gfp(3) : Field::gf2());
    grow_and_check(bold_complex(oracle::random_graph(rng, 3 + rng() % 3, 50), f), rng);
    auto x = oracle::random_complex(rng, 5, 4, 3);
    grow_and_check(horizontal_complex(x, Colouring(5, 31), f), rng);
  }
}

TEST_CASE("subcomplex critical sets reduce to the restriction") {
  auto g = generate({"wheel", {6}, {}});
  auto r = retraction_matching(g);
  auto reduced = morse_reduce(bold_complex(g, Field::gfp(5)), r.matching, &r.layers);
  auto dh = dominating_complex(g, Field::gfp(5));
  REQUIRE(reduced.degrees() == dh.degrees());
  // Same generators, possibly in another order; compare entries by label.
  auto labelled = [](const GradedComplex& c, const Multidegree& d) {
    std::map<std::pair<std::string, std::string>, Scalar> out;
    for (const auto& t : c.differential(d).triplets()) {
      out[{c.basis(d + c.step())[t.row], c.basis(d)[t.col]}] = t.value;
    }
    return out;
  };
  for (const auto& d : dh.degrees()) {
    auto a = reduced.basis(d);
    auto b = dh.basis(d);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(labelled(reduced, d) == labelled(dh, d));
  }
}

TEST_CASE("global search and layered certificate agree") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_graph(rng, 3 + rng() % 4, 45);
    auto r = retraction_matching(g);
    auto c = bold_complex(g, Field::gf2());
    auto cert = layered_acyclicity(c, r.matching, r.layers);
    CHECK(cert.ok);
    CHECK(is_acyclic(c, r.matching) == cert.ok);
  }
}
