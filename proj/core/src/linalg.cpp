#include "uberhom/linalg.hpp"

#include <bit>
#include <variant>

#include "echelon.hpp"
#include "uberhom/error.hpp"

namespace uberhom {

namespace {

using detail::Echelon;
using detail::PrimeOps;
using detail::RationalOps;

void check_length(const Vector& v, std::size_t length) {
  if (v.length() != length) {
    throw Error(ErrorCode::kMalformedInput, "vector length " + std::to_string(v.length()) +
                                                " does not match " + std::to_string(length));
  }
}

bool odd_entry(const Scalar& value) {
  if (!bit_test(denominator(value), 0)) {
    throw Error(ErrorCode::kMalformedInput, "denominator divisible by 2");
  }
  return bit_test(numerator(value), 0);
}

// Columns are inserted into an echelon basis of dense bit rows keyed by the
// lowest set bit.
std::size_t rank_gf2_packed(const SparseMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t words = (n + 63) / 64;
  if (words == 0) return 0;
  std::vector<std::int32_t> pivot_slot(n, -1);
  std::vector<std::uint64_t> store;
  std::vector<std::uint64_t> work(words);
  std::size_t rank = 0;

  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto& column = m.column(static_cast<Index>(c));
    if (column.empty()) continue;
    std::fill(work.begin(), work.end(), 0);
    std::size_t first_word = words;
    for (const auto& e : column) {
      if (!odd_entry(e.value)) continue;
      work[e.index / 64] ^= std::uint64_t{1} << (e.index % 64);
      first_word = std::min<std::size_t>(first_word, e.index / 64);
    }
    for (std::size_t w = first_word; w < words;) {
      if (work[w] == 0) {
        ++w;
        continue;
      }
      std::size_t lead = w * 64 + static_cast<std::size_t>(std::countr_zero(work[w]));
      std::int32_t slot = pivot_slot[lead];
      if (slot < 0) {
        pivot_slot[lead] = static_cast<std::int32_t>(rank);
        store.insert(store.end(), work.begin(), work.end());
        ++rank;
        break;
      }
      const std::uint64_t* pivot = store.data() + static_cast<std::size_t>(slot) * words;
      for (std::size_t k = w; k < words; ++k) work[k] ^= pivot[k];
    }
  }
  return rank;
}

template <class Ops>
std::size_t rank_generic(const Ops& ops, const SparseMatrix& m) {
  Echelon<Ops> echelon(ops, false);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    echelon.insert(detail::to_row(ops, m.column(static_cast<Index>(c))));
  }
  return echelon.dimension();
}

template <class Ops>
std::vector<Vector> kernel_generic(const Ops& ops, const SparseMatrix& m) {
  const std::size_t cols = m.cols();
  Echelon<Ops> echelon(ops, false);
  SparseMatrix rows = m.transpose();
  for (std::size_t r = 0; r < rows.cols(); ++r) {
    echelon.insert(detail::to_row(ops, rows.column(static_cast<Index>(r))));
  }
  auto rref = echelon.reduced_rows();
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : rref) is_pivot[row.front().first] = true;

  std::vector<std::vector<Entry>> kernel(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) kernel[c].push_back({static_cast<Index>(c), Scalar(1)});
  }
  for (const auto& row : rref) {
    Index pivot = row.front().first;
    for (std::size_t k = 1; k < row.size(); ++k) {
      kernel[row[k].first].push_back({pivot, ops.to(ops.neg(row[k].second))});
    }
  }
  std::vector<Vector> out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) out.emplace_back(cols, std::move(kernel[c]));
  }
  return out;
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const Field& field) {
  if (field.kind() == Field::Kind::kGF2) return rank_gf2_packed(m);
  return detail::dispatch(field, [&](const auto& ops) { return rank_generic(ops, m); });
}

std::vector<Vector> kernel_basis(const SparseMatrix& m, const Field& field) {
  return detail::dispatch(field, [&](const auto& ops) { return kernel_generic(ops, m); });
}

std::optional<Vector> coordinates_in_span(std::span<const Vector> basis, const Vector& v,
                                          const Field& field) {
  SpanTracker span(v.length(), field);
  for (const auto& b : basis) span.insert(b);
  return span.coordinates(v);
}

struct SpanTracker::Impl {
  std::size_t length;
  std::variant<Echelon<PrimeOps>, Echelon<RationalOps>> echelon;
};

SpanTracker::SpanTracker(std::size_t length, const Field& field)
    : impl_(field.kind() == Field::Kind::kRational
                ? std::make_unique<Impl>(Impl{length, Echelon<RationalOps>(RationalOps{}, true)})
                : std::make_unique<Impl>(
                      Impl{length, Echelon<PrimeOps>(PrimeOps{field.characteristic()}, true)})) {}

SpanTracker::~SpanTracker() = default;
SpanTracker::SpanTracker(SpanTracker&&) noexcept = default;
SpanTracker& SpanTracker::operator=(SpanTracker&&) noexcept = default;

bool SpanTracker::insert(const Vector& v) {
  check_length(v, impl_->length);
  return std::visit(
      [&](auto& echelon) { return echelon.insert(detail::to_row(echelon.ops(), v.entries())); },
      impl_->echelon);
}

bool SpanTracker::contains(const Vector& v) const {
  check_length(v, impl_->length);
  return std::visit(
      [&](const auto& echelon) {
        return echelon.contains(detail::to_row(echelon.ops(), v.entries()));
      },
      impl_->echelon);
}

std::optional<Vector> SpanTracker::coordinates(const Vector& v) const {
  check_length(v, impl_->length);
  return std::visit(
      [&](const auto& echelon) -> std::optional<Vector> {
        auto combo = echelon.coordinates(detail::to_row(echelon.ops(), v.entries()));
        if (!combo) return std::nullopt;
        return detail::to_vector(echelon.ops(), echelon.inserted(), *combo);
      },
      impl_->echelon);
}

std::size_t SpanTracker::dimension() const {
  return std::visit([](const auto& e) { return e.dimension(); }, impl_->echelon);
}

std::size_t SpanTracker::inserted() const {
  return std::visit([](const auto& e) { return e.inserted(); }, impl_->echelon);
}

}  // namespace uberhom
