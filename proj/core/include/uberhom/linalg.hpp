#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "uberhom/field.hpp"

namespace uberhom {

// Rank over the field. GF(2) uses a 64-bit packed XOR eliminator.
std::size_t rank(const SparseMatrix& m, const Field& field);

// Basis of ker(m) read off the reduced row echelon form, one vector per free
// column in increasing column order. Each vector has a 1 at its free column.
std::vector<Vector> kernel_basis(const SparseMatrix& m, const Field& field);

// Coefficients c with sum c_i * basis_i == v, or nullopt when v is outside
// the span. Free coefficients are zero, so the answer is deterministic even
// for dependent bases.
std::optional<Vector> coordinates_in_span(std::span<const Vector> basis, const Vector& v,
                                          const Field& field);

// Incremental span of vectors of a fixed length. Coordinates are reported
// against the vectors in insertion order.
class SpanTracker {
 public:
  SpanTracker(std::size_t length, const Field& field);
  ~SpanTracker();
  SpanTracker(SpanTracker&&) noexcept;
  SpanTracker& operator=(SpanTracker&&) noexcept;

  // True when v was independent of what had been inserted.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  std::optional<Vector> coordinates(const Vector& v) const;

  std::size_t dimension() const;
  std::size_t inserted() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace uberhom
