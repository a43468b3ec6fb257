#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "uberhom/error.hpp"
#include "uberhom/linalg.hpp"

using namespace uberhom;

namespace {

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density_percent,
                           int max_value) {
  std::uniform_int_distribution<int> roll(0, 99);
  std::uniform_int_distribution<int> value(-max_value, max_value);
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (roll(rng) < density_percent) t.push_back({Index(r), Index(c), Scalar(value(rng))});
    }
  }
  return SparseMatrix::from_triplets(rows, cols, std::move(t));
}

// d1 of the triangle: rows are vertices 0..2, columns edges 01, 02, 12.
SparseMatrix triangle_boundary() { return SparseMatrix::from_dense({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}}); }

const std::vector<Field> kFields{Field::gf2(), Field::gfp(3), Field::gfp(7), Field::rational()};

}  // namespace

TEST_CASE("field parsing and reduction") {
  CHECK(Field::parse("2") == Field::gf2());
  CHECK(Field::parse("Q") == Field::rational());
  CHECK(Field::parse("5").characteristic() == 5);
  CHECK_THROWS_AS(Field::parse("4"), Error);
  CHECK(Field::gfp(2) == Field::gf2());
  CHECK(Field::gfp(5).reduce(Scalar(-1)) == 4);
  CHECK(Field::gfp(5).reduce(Scalar(1) / 2) == 3);
  try {
    (void)Field::gfp(3).reduce(Scalar(1) / 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMalformedInput);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(SparseMatrix::identity(3), Field::gf2()) == 3);
  CHECK(rank(SparseMatrix::from_dense({{1, 1}, {1, 1}}), Field::gf2()) == 1);
  auto d1 = triangle_boundary();
  std::vector<std::vector<long long>> dense{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
  CHECK(oracle::minor_rank(dense) == 2);
  CHECK(rank(d1, Field::rational()) == 2);
}

TEST_CASE("rank rejects scalars that do not reduce") {
  SparseMatrix m(1, 1);
  m.add(0, 0, Scalar(1) / 7);
  CHECK_THROWS_AS(rank(m, Field::gfp(7)), Error);
  CHECK(rank(m, Field::gfp(5)) == 1);
}

TEST_CASE("kernel examples") {
  auto zero = kernel_basis(SparseMatrix(2, 3), Field::gf2());
  REQUIRE(zero.size() == 3);
  for (Index i = 0; i < 3; ++i) CHECK(zero[i] == Vector::unit(3, i));

  auto parity = kernel_basis(SparseMatrix::from_dense({{1, 1}}), Field::gf2());
  REQUIRE(parity.size() == 1);
  CHECK(parity[0] == Vector::from_dense({1, 1}));

  auto cycle = kernel_basis(triangle_boundary().reduced(Field::gf2()), Field::gf2());
  REQUIRE(cycle.size() == 1);
  // Exhaustive over all 8 candidate vectors: only (1,1,1) is a nonzero cycle.
  int nonzero_cycles = 0;
  for (int bits = 1; bits < 8; ++bits) {
    Vector v = Vector::from_dense({bits & 1, (bits >> 1) & 1, (bits >> 2) & 1});
    if (apply(triangle_boundary(), v, Field::gf2()).empty()) {
      ++nonzero_cycles;
      CHECK(v == cycle[0]);
    }
  }
  CHECK(nonzero_cycles == 1);
}

TEST_CASE("coordinates in span") {
  std::vector<Vector> one{Vector::from_dense({1, 0})};
  auto c = coordinates_in_span(one, Vector::from_dense({1, 0}), Field::gf2());
  REQUIRE(c);
  CHECK(*c == Vector::from_dense({1}));

  std::vector<Vector> diag{Vector::from_dense({1, 1})};
  CHECK_FALSE(coordinates_in_span(diag, Vector::from_dense({1, 0}), Field::gf2()));

  std::vector<Vector> two{Vector::from_dense({1, 1, 0}), Vector::from_dense({0, 1, 1})};
  Vector target = Vector::from_dense({1, 0, 1});
  auto got = coordinates_in_span(two, target, Field::gf2());
  REQUIRE(got);
  int solutions = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      std::vector<int> sum(3);
      for (int k = 0; k < 3; ++k) sum[k] = (a * (k < 2) + b * (k > 0)) % 2;
      if (sum == std::vector<int>{1, 0, 1}) {
        ++solutions;
        CHECK(*got == Vector::from_dense({a, b}));
      }
    }
  }
  CHECK(solutions == 1);

  CHECK_THROWS_AS(coordinates_in_span(two, Vector::from_dense({1, 0}), Field::gf2()), Error);
}

TEST_CASE("rank equals rank of transpose, rank-nullity, kernel vectors vanish") {
  std::mt19937_64 rng(11);
  for (const auto& f : kFields) {
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t rows = 1 + rng() % 12;
      std::size_t cols = 1 + rng() % 12;
      auto m = random_matrix(rng, rows, cols, 35, 3);
      std::size_t r = rank(m, f);
      CHECK(r == rank(m.transpose(), f));
      auto kernel = kernel_basis(m, f);
      CHECK(cols == r + kernel.size());
      for (const auto& k : kernel) CHECK(apply(m, k, f).empty());
    }
  }
}

TEST_CASE("GF(2) rank agrees with a dense eliminator up to 200x200") {
  std::mt19937_64 rng(5);
  for (std::size_t size : {1, 7, 63, 64, 65, 130, 200}) {
    for (int density : {2, 10, 50}) {
      auto m = random_matrix(rng, size, size - size / 5, density, 1);
      std::vector<std::vector<int>> dense(m.rows(), std::vector<int>(m.cols(), 0));
      for (const auto& t : m.triplets()) dense[t.row][t.col] = static_cast<int>(t.value) & 1;
      CHECK(rank(m, Field::gf2()) == oracle::dense_rank_mod2(dense));
    }
  }
}

TEST_CASE("span tracker coordinates reproduce the vector") {
  std::mt19937_64 rng(3);
  for (const auto& f : kFields) {
    SpanTracker span(6, f);
    std::vector<Vector> inserted;
    for (int k = 0; k < 4; ++k) {
      auto m = random_matrix(rng, 6, 1, 50, 2).reduced(f);
      Vector v(6, m.column(0));
      span.insert(v);
      inserted.push_back(v);
    }
    // Probe inside the span: first plus last.
    std::vector<Scalar> probe(6, Scalar(0));
    for (const auto* v : {&inserted.front(), &inserted.back()}) {
      for (const auto& e : v->entries()) probe[e.index] = f.add(probe[e.index], e.value);
    }
    auto coords = span.coordinates(Vector::from_dense(probe));
    REQUIRE(coords);
    std::vector<Scalar> sum(6, Scalar(0));
    for (const auto& c : coords->entries()) {
      for (const auto& e : inserted[c.index].entries()) sum[e.index] = f.add(sum[e.index], f.mul(c.value, e.value));
    }
    CHECK(sum == probe);
  }
}
