#pragma once

// Field-generic sparse row echelon machinery shared by linalg and complex.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "uberhom/error.hpp"
#include "uberhom/field.hpp"

namespace uberhom::detail {

struct PrimeOps {
  using Elem = std::uint32_t;
  std::uint32_t p;

  Elem from(const Scalar& s) const {
    auto residue = [this](const boost::multiprecision::cpp_int& v) {
      boost::multiprecision::cpp_int r = v % p;
      if (r < 0) r += p;
      return r.convert_to<std::uint32_t>();
    };
    const auto& den = denominator(s);
    std::uint32_t num = residue(numerator(s));
    if (den == 1) return num;
    std::uint32_t d = residue(den);
    if (d == 0) {
      throw Error(ErrorCode::kMalformedInput, "denominator divisible by " + std::to_string(p));
    }
    return mul(num, inv(d));
  }
  Scalar to(Elem e) const { return Scalar(e); }
  bool is_zero(Elem e) const { return e == 0; }
  Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % p); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + p - b) % p); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} * b) % p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<Elem>(result);
  }
  Elem one() const { return 1; }
};

struct RationalOps {
  using Elem = Scalar;

  Elem from(const Scalar& s) const { return s; }
  Scalar to(const Elem& e) const { return e; }
  bool is_zero(const Elem& e) const { return e == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem one() const { return Elem(1); }
};

template <class Ops>
using SparseRow = std::vector<std::pair<Index, typename Ops::Elem>>;

template <class Ops>
SparseRow<Ops> to_row(const Ops& ops, const std::vector<Entry>& entries) {
  SparseRow<Ops> row;
  row.reserve(entries.size());
  for (const auto& e : entries) {
    auto v = ops.from(e.value);
    if (!ops.is_zero(v)) row.emplace_back(e.index, std::move(v));
  }
  return row;
}

// target <- target + factor * source
template <class Ops>
void axpy(const Ops& ops, SparseRow<Ops>& target, const typename Ops::Elem& factor,
          const SparseRow<Ops>& source) {
  SparseRow<Ops> out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, ops.mul(factor, b->second));
      ++b;
    } else {
      auto v = ops.add(a->second, ops.mul(factor, b->second));
      if (!ops.is_zero(v)) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

template <class Ops>
void scale(const Ops& ops, SparseRow<Ops>& row, const typename Ops::Elem& factor) {
  for (auto& [i, v] : row) v = ops.mul(v, factor);
}

// Row echelon basis keyed by leading index. Each stored row has leading
// coefficient 1. When tracking is on, every stored row also records its
// expression in terms of the inserted vectors.
template <class Ops>
class Echelon {
 public:
  using Elem = typename Ops::Elem;
  using Row = SparseRow<Ops>;

  Echelon(Ops ops, bool track) : ops_(std::move(ops)), track_(track) {}

  const Ops& ops() const { return ops_; }
  std::size_t dimension() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  // Returns true when row is independent of everything inserted so far.
  bool insert(Row row) {
    Row combo;
    if (track_) combo.emplace_back(static_cast<Index>(inserted_), ops_.one());
    ++inserted_;
    reduce(row, track_ ? &combo : nullptr);
    if (row.empty()) return false;
    Elem lead_inv = ops_.inv(row.front().second);
    scale(ops_, row, lead_inv);
    if (track_) scale(ops_, combo, lead_inv);
    pivots_.emplace(row.front().first, rows_.size());
    rows_.push_back(std::move(row));
    combos_.push_back(std::move(combo));
    return true;
  }

  bool contains(Row row) const {
    reduce(row, nullptr);
    return row.empty();
  }

  // Coefficients over inserted vectors with sum equal to row, if it lies in the span.
  std::optional<Row> coordinates(Row row) const {
    Row combo;
    reduce(row, &combo);
    if (!row.empty()) return std::nullopt;
    // row_original - sum c_r stored_r = 0; combo accumulated -c_r * combo_r.
    for (auto& [i, v] : combo) v = ops_.neg(v);
    return combo;
  }

  // Reduced row echelon rows sorted by pivot column.
  std::vector<Row> reduced_rows() const {
    std::vector<std::pair<Index, std::size_t>> order(pivots_.begin(), pivots_.end());
    std::map<Index, Row> done;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Row row = rows_[it->second];
      std::size_t pos = 1;
      while (pos < row.size()) {
        auto found = done.find(row[pos].first);
        if (found == done.end()) {
          ++pos;
          continue;
        }
        Elem factor = ops_.neg(row[pos].second);
        Index at = row[pos].first;
        axpy(ops_, row, factor, found->second);
        pos = static_cast<std::size_t>(
            std::lower_bound(row.begin(), row.end(), at,
                             [](const auto& e, Index k) { return e.first < k; }) -
            row.begin());
      }
      done.emplace(it->first, std::move(row));
    }
    std::vector<Row> out;
    out.reserve(done.size());
    for (auto& [lead, row] : done) out.push_back(std::move(row));
    return out;
  }

 private:
  void reduce(Row& row, Row* combo) const {
    while (!row.empty()) {
      auto found = pivots_.find(row.front().first);
      if (found == pivots_.end()) return;
      Elem factor = ops_.neg(row.front().second);
      axpy(ops_, row, factor, rows_[found->second]);
      if (combo) axpy(ops_, *combo, factor, combos_[found->second]);
    }
  }

  Ops ops_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
  std::vector<Row> combos_;
  std::map<Index, std::size_t> pivots_;
};

template <class Fn>
decltype(auto) dispatch(const Field& field, Fn&& fn) {
  if (field.kind() == Field::Kind::kRational) return fn(RationalOps{});
  return fn(PrimeOps{field.characteristic()});
}

template <class Ops>
Vector to_vector(const Ops& ops, std::size_t length, const SparseRow<Ops>& row) {
  std::vector<Entry> entries;
  entries.reserve(row.size());
  for (const auto& [i, v] : row) entries.push_back({i, ops.to(v)});
  return Vector(length, std::move(entries));
}

}  // namespace uberhom::detail
