#include "uberhom/field.hpp"

#include <algorithm>
#include <charconv>

#include "uberhom/error.hpp"

namespace uberhom {

namespace {

using boost::multiprecision::cpp_int;

std::uint32_t mod_p(const cpp_int& value, std::uint32_t p) {
  cpp_int r = value % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint32_t>();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::gfp(std::uint32_t p) {
  if (p >= (1u << 16) || !is_prime(p)) {
    throw Error(ErrorCode::kMalformedInput, "GF(p) requires a prime p < 65536, got " +
                                                std::to_string(p));
  }
  return p == 2 ? gf2() : Field(Kind::kGFp, p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rational();
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kMalformedInput, "unknown field '" + std::string(text) + "'");
  }
  return gfp(p);
}

std::string Field::name() const {
  if (kind_ == Kind::kRational) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

Scalar Field::reduce(const Scalar& value) const {
  if (kind_ == Kind::kRational) return value;
  std::uint32_t den = mod_p(denominator(value), p_);
  if (den == 0) {
    throw Error(ErrorCode::kMalformedInput, "denominator divisible by " + std::to_string(p_));
  }
  std::uint32_t num = mod_p(numerator(value), p_);
  std::uint64_t r = (static_cast<std::uint64_t>(num) * inverse_mod(den, p_)) % p_;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  Scalar r = reduce(a);
  if (r == 0) throw Error(ErrorCode::kMalformedInput, "inverse of zero");
  if (kind_ == Kind::kRational) return 1 / r;
  return Scalar(inverse_mod(numerator(r).convert_to<std::uint32_t>(), p_));
}

Vector::Vector(std::size_t length, std::vector<Entry> entries)
    : length_(length), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].index >= length_) {
      throw Error(ErrorCode::kMalformedInput, "vector index out of range");
    }
    if (i > 0 && entries_[i].index == entries_[i - 1].index) {
      throw Error(ErrorCode::kMalformedInput, "duplicate vector index");
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.value == 0; });
}

Vector Vector::unit(std::size_t length, Index i) { return Vector(length, {{i, Scalar(1)}}); }

Vector Vector::from_dense(std::span<const Scalar> dense) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) entries.push_back({static_cast<Index>(i), dense[i]});
  }
  return Vector(dense.size(), std::move(entries));
}

Vector Vector::from_dense(std::initializer_list<int> dense) {
  std::vector<Scalar> values(dense.begin(), dense.end());
  return from_dense(std::span<const Scalar>(values));
}

Scalar Vector::at(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.index < k; });
  return (it != entries_.end() && it->index == i) ? it->value : Scalar(0);
}

std::vector<Scalar> Vector::dense() const {
  std::vector<Scalar> out(length_);
  for (const auto& e : entries_) out[e.index] = e.value;
  return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> triplets) {
  SparseMatrix m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(a.col, a.row) < std::tie(b.col, b.row);
  });
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) {
      throw Error(ErrorCode::kMalformedInput, "matrix entry out of range");
    }
    auto& column = m.columns_[t.col];
    if (!column.empty() && column.back().index == t.row) {
      column.back().value += t.value;
    } else {
      column.push_back({t.row, std::move(t.value)});
    }
  }
  for (auto& column : m.columns_) {
    std::erase_if(column, [](const Entry& e) { return e.value == 0; });
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<int>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Triplet> triplets;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::kMalformedInput, "ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0) {
        triplets.push_back({static_cast<Index>(r), static_cast<Index>(c), Scalar(rows[r][c])});
      }
    }
  }
  return from_triplets(rows.size(), cols, std::move(triplets));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({static_cast<Index>(i), Scalar(1)});
  return m;
}

std::size_t SparseMatrix::nnz() const noexcept {
  std::size_t total = 0;
  for (const auto& column : columns_) total += column.size();
  return total;
}

void SparseMatrix::add(Index row, Index col, const Scalar& value) {
  if (row >= rows_ || col >= columns_.size()) {
    throw Error(ErrorCode::kMalformedInput, "matrix entry out of range");
  }
  auto& column = columns_[col];
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const Entry& e, Index r) { return e.index < r; });
  if (it != column.end() && it->index == row) {
    it->value += value;
    if (it->value == 0) column.erase(it);
  } else if (value != 0) {
    column.insert(it, {row, value});
  }
}

Scalar SparseMatrix::at(Index row, Index col) const {
  const auto& column = columns_.at(col);
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const Entry& e, Index r) { return e.index < r; });
  return (it != column.end() && it->index == row) ? it->value : Scalar(0);
}

std::vector<SparseMatrix::Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& e : columns_[c]) out.push_back({e.index, static_cast<Index>(c), e.value});
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& e : columns_[c]) t.columns_[e.index].push_back({static_cast<Index>(c), e.value});
  }
  return t;
}

SparseMatrix SparseMatrix::reduced(const Field& field) const {
  SparseMatrix out(rows_, cols());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& e : columns_[c]) {
      Scalar v = field.reduce(e.value);
      if (v != 0) out.columns_[c].push_back({e.index, std::move(v)});
    }
  }
  return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& factor, const Field& field) const {
  SparseMatrix out(rows_, cols());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& e : columns_[c]) {
      Scalar v = field.mul(e.value, factor);
      if (v != 0) out.columns_[c].push_back({e.index, std::move(v)});
    }
  }
  return out;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, const Field& field) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kMalformedInput, "dimension mismatch in matrix product");
  }
  std::vector<SparseMatrix::Triplet> triplets;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (const auto& be : b.column(static_cast<Index>(c))) {
      for (const auto& ae : a.column(be.index)) {
        triplets.push_back({ae.index, static_cast<Index>(c), ae.value * be.value});
      }
    }
  }
  return SparseMatrix::from_triplets(a.rows(), b.cols(), std::move(triplets)).reduced(field);
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, const Field& field) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kMalformedInput, "dimension mismatch in matrix sum");
  }
  auto triplets = a.triplets();
  for (auto& t : b.triplets()) triplets.push_back(std::move(t));
  return SparseMatrix::from_triplets(a.rows(), a.cols(), std::move(triplets)).reduced(field);
}

Vector apply(const SparseMatrix& m, const Vector& v, const Field& field) {
  if (m.cols() != v.length()) {
    throw Error(ErrorCode::kMalformedInput, "dimension mismatch in matrix-vector product");
  }
  std::vector<SparseMatrix::Triplet> triplets;
  for (const auto& ve : v.entries()) {
    for (const auto& me : m.column(ve.index)) triplets.push_back({me.index, 0, me.value * ve.value});
  }
  auto column = SparseMatrix::from_triplets(m.rows(), 1, std::move(triplets)).reduced(field);
  return Vector(m.rows(), column.column(0));
}

bool equal_in(const SparseMatrix& a, const SparseMatrix& b, const Field& field) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return a.reduced(field) == b.reduced(field);
}

}  // namespace uberhom
