#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "uberhom/bold.hpp"
#include "uberhom/error.hpp"
#include "uberhom/graphgen.hpp"
#include "uberhom/simplicial.hpp"

using namespace uberhom;

namespace {

Multidegree d1(int i) { return {i, 0, 0}; }

// Same complex with the basis of one degree permuted.
GradedComplex permuted(const GradedComplex& c, const Multidegree& target, std::mt19937_64& rng) {
  GradedComplex out(c.field(), c.arity(), c.step());
  std::vector<Index> perm(c.size(target));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (const auto& d : c.degrees()) {
    std::vector<std::string> labels = c.basis(d);
    if (d == target) {
      for (std::size_t i = 0; i < perm.size(); ++i) labels[perm[i]] = c.basis(d)[i];
    }
    out.add_generators(d, labels);
  }
  for (const auto& d : c.differential_degrees()) {
    std::vector<SparseMatrix::Triplet> t;
    for (auto tr : c.stored_differential(d)->triplets()) {
      if (d == target) tr.col = perm[tr.col];
      if (d + c.step() == target) tr.row = perm[tr.row];
      t.push_back(tr);
    }
    out.set_differential(d, SparseMatrix::from_triplets(c.size(d + c.step()), c.size(d), std::move(t)));
  }
  return out;
}

}  // namespace

TEST_CASE("validate") {
  GradedComplex empty(Field::gf2(), 1, {1, 0, 0});
  empty.add_generators(d1(0), {"a"});
  empty.add_generators(d1(1), {"b"});
  CHECK(validate(empty).ok);

  CHECK(validate(bold_complex(generate({"complete", {3}, {}}), Field::gf2())).ok);

  GradedComplex bad(Field::rational(), 1, {1, 0, 0});
  bad.add_generators(d1(0), {"a"});
  bad.add_generators(d1(1), {"b"});
  bad.add_generators(d1(2), {"c"});
  bad.set_differential(d1(0), SparseMatrix::identity(1));
  bad.set_differential(d1(1), SparseMatrix::identity(1));
  auto v = validate(bad);
  CHECK_FALSE(v.ok);
  REQUIRE(v.failing_degree);
  CHECK(*v.failing_degree == d1(0));

  GradedComplex wrong(Field::gf2(), 1, {1, 0, 0});
  wrong.add_generators(d1(0), {"a"});
  wrong.add_generators(d1(1), {"b"});
  wrong.set_differential(d1(0), SparseMatrix(2, 1));
  try {
    validate(wrong);
    FAIL("expected malformed complex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMalformedComplex);
  }
}

TEST_CASE("homology examples") {
  auto circle = generate({"cycle", {3}, {}}).as_complex();
  auto h = homology(horizontal_complex(circle, Colouring(3, 0b111), Field::rational()));
  CHECK(h.ranks == std::map<Multidegree, std::size_t>{{{0, 0, 0}, 1}, {{1, 0, 0}, 1}});

  CHECK(bold_homology(generate({"path", {3}, {}}), Field::gf2(), BoldPath::kBold).ranks.empty());

  // The Petersen class sits in degree 5; four independent computations agree.
  auto petersen = bold_homology(generate({"petersen", {}, {}}), Field::gf2(), BoldPath::kBoth);
  CHECK(petersen.ranks == std::map<Multidegree, std::size_t>{{d1(5), 1}});
}

TEST_CASE("representatives are cycles independent modulo boundaries") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = oracle::random_complex(rng, 5, 4, 2);
    for (const auto& f : {Field::gf2(), Field::gfp(3), Field::rational()}) {
      auto c = std::make_shared<const GradedComplex>(horizontal_complex(x, Colouring(5, rng() % 32), f));
      HomologyBasis basis(c);
      for (const auto& [d, reps] : basis.summary().representatives) {
        CHECK(reps.size() == basis.summary().rank(d));
        for (std::size_t i = 0; i < reps.size(); ++i) {
          CHECK(apply(c->differential(d), reps[i], f).empty());
          CHECK(basis.class_of(d, reps[i]) == Vector::unit(reps.size(), Index(i)));
        }
      }
    }
  }
}

TEST_CASE("induced maps on homology") {
  auto x = generate({"complete", {2}, {}}).as_complex();
  auto c = std::make_shared<const GradedComplex>(horizontal_complex(x, Colouring(2, 0), Field::gf2()));
  for (const auto& [d, m] : induced_map_on_homology(ChainMap::identity(c))) {
    CHECK(m == SparseMatrix::identity(homology(*c).rank(d)));
  }
  ChainMap zero(c, c);
  for (const auto& [d, m] : induced_map_on_homology(zero)) CHECK(m.is_zero());

  // (0,0) -> (1,0) on K2: v0 has the wrong weight, v1 becomes a boundary.
  auto f = transition_chain_map(x, Colouring(2, 0b00), Colouring(2, 0b01), Field::gf2());
  auto blocks = induced_map_on_homology(f);
  REQUIRE(blocks.count({0, 1, 0}));
  CHECK(blocks.at({0, 1, 0}).rows() == 0);
  CHECK(blocks.at({0, 1, 0}).cols() == 2);
  CHECK(blocks.at({0, 1, 0}).is_zero());

  auto d = std::make_shared<const GradedComplex>(horizontal_complex(x, Colouring(2, 0b11), Field::gf2()));
  ChainMap not_chain(d, d);
  not_chain.set_block({1, 0, 0}, SparseMatrix::identity(1));
  CHECK_THROWS_AS(induced_map_on_homology(not_chain), Error);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(GradedComplex(Field::gf2(), 1, {1, 0, 0})) == 0);
  CHECK(euler_characteristic(bold_complex(generate({"cycle", {6}, {}}), Field::gf2()), true) == 1);
  CHECK(euler_characteristic(dominating_complex(generate({"petersen", {}, {}}), Field::gf2()), true) == -1);
}

TEST_CASE("alternating sizes equal alternating ranks") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_graph(rng, 2 + rng() % 5, 50);
    for (const auto& f : {Field::gf2(), Field::gfp(5), Field::rational()}) {
      auto c = bold_complex(g, f);
      CHECK(euler_characteristic(c) == euler_characteristic(homology(c)));
    }
  }
}

TEST_CASE("induced maps compose") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t m = 4;
    auto x = oracle::random_complex(rng, m, 3, 2);
    const Field f = trial % 2 ? Field::rational() : Field::gf2();
    std::uint64_t a = rng() % 16;
    std::vector<std::uint32_t> zeros;
    for (std::uint32_t v = 0; v < m; ++v) {
      if (!((a >> v) & 1U)) zeros.push_back(v);
    }
    if (zeros.size() < 2) continue;
    std::shuffle(zeros.begin(), zeros.end(), rng);
    Colouring ca(m, a);
    Colouring cb(m, a | (1U << zeros[0]));
    Colouring cc(m, cb.mask() | (1U << zeros[1]));
    auto ha = std::make_shared<const GradedComplex>(horizontal_complex(x, ca, f));
    auto hb = std::make_shared<const GradedComplex>(horizontal_complex(x, cb, f));
    auto hc = std::make_shared<const GradedComplex>(horizontal_complex(x, cc, f));
    auto first = transition_chain_map(x, ca, cb, ha, hb);
    auto second = transition_chain_map(x, cb, cc, hb, hc);
    HomologyBasis ba(ha), bb(hb), bc(hc);
    auto hf = induced_map_on_homology(first, ba, bb);
    auto hg = induced_map_on_homology(second, bb, bc);
    auto hgf = induced_map_on_homology(compose(second, first), ba, bc);
    for (const auto& [d, block] : hgf) {
      // Degrees where the middle homology vanishes are absent from hg.
      if (!hg.count(d)) {
        CHECK(block.is_zero());
        continue;
      }
      CHECK(equal_in(block, multiply(hg.at(d), hf.at(d), f), f));
    }
  }
}

TEST_CASE("ranks survive permuting a basis") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = bold_complex(oracle::random_graph(rng, 5, 55), Field::gf2());
    auto degrees = c.degrees();
    auto target = degrees[rng() % degrees.size()];
    CHECK(homology(permuted(c, target, rng)).ranks == homology(c).ranks);
  }
}
