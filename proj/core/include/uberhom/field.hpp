#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace uberhom {

// Matrix and vector entries are exact rationals; each Field maps them onto its
// own elements (GF(p) reduces numerator and denominator modulo p).
using Scalar = boost::multiprecision::cpp_rational;
using Index = std::uint32_t;

class Field {
 public:
  enum class Kind { kGF2, kGFp, kRational };

  static Field gf2() { return Field(Kind::kGF2, 2); }
  // p must be a prime below 2^16; gfp(2) is the same field as gf2().
  static Field gfp(std::uint32_t p);
  static Field rational() { return Field(Kind::kRational, 0); }
  // Accepts "2", any prime "p", or "Q".
  static Field parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  // 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_finite() const noexcept { return kind_ != Kind::kRational; }
  std::string name() const;

  // Canonical representative: an integer in [0, p) for GF(p), unchanged for Q.
  // Throws kMalformedInput when the denominator vanishes mod p.
  Scalar reduce(const Scalar& value) const;
  bool is_zero(const Scalar& value) const { return reduce(value) == 0; }
  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  // Throws kMalformedInput on zero.
  Scalar inv(const Scalar& a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

struct Entry {
  Index index;
  Scalar value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Sparse vector; entries sorted by index, values nonzero.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t length) : length_(length) {}
  Vector(std::size_t length, std::vector<Entry> entries);

  static Vector unit(std::size_t length, Index i);
  static Vector from_dense(std::span<const Scalar> dense);
  static Vector from_dense(std::initializer_list<int> dense);

  std::size_t length() const noexcept { return length_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  Scalar at(Index i) const;
  std::vector<Scalar> dense() const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<Entry> entries_;
};

class SparseMatrix {
 public:
  struct Triplet {
    Index row;
    Index col;
    Scalar value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  // Duplicate positions are summed; entries summing to zero are dropped.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> triplets);
  static SparseMatrix from_dense(const std::vector<std::vector<int>>& rows);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  std::size_t nnz() const noexcept;
  bool is_zero() const noexcept { return nnz() == 0; }

  // Accumulates into (row, col).
  void add(Index row, Index col, const Scalar& value);
  Scalar at(Index row, Index col) const;
  const std::vector<Entry>& column(Index col) const { return columns_.at(col); }
  std::vector<Triplet> triplets() const;

  SparseMatrix transpose() const;
  // Every entry passed through field.reduce; zeros dropped.
  SparseMatrix reduced(const Field& field) const;
  SparseMatrix scaled(const Scalar& factor, const Field& field) const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

// Products and sums carried out in the field; results are canonical representatives.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, const Field& field);
SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, const Field& field);
Vector apply(const SparseMatrix& m, const Vector& v, const Field& field);
// Equality after reduction into the field.
bool equal_in(const SparseMatrix& a, const SparseMatrix& b, const Field& field);

}  // namespace uberhom
