#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uberhom/complex.hpp"
#include "uberhom/poset.hpp"

namespace uberhom {

// Sorted vertex tuple.
using Simplex = std::vector<std::uint32_t>;

std::string simplex_label(const Simplex& s);

class SimplicialComplex {
 public:
  // Closes the given simplices under faces; every vertex 0..m-1 is a 0-simplex.
  SimplicialComplex(std::size_t vertex_count, const std::vector<Simplex>& simplices);
  static SimplicialComplex from_edges(std::size_t vertex_count,
                                      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t dimension() const noexcept { return by_dim_.size() - 1; }
  // Simplices of the given dimension in lexicographic order.
  const std::vector<Simplex>& simplices(std::size_t dim) const;
  std::size_t simplex_count() const;
  bool contains(const Simplex& s) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool is_connected() const;

 private:
  std::size_t vertex_count_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, std::size_t> index_;
};

// Number of 0-coloured vertices of s. Throws kUnknownSimplex if s is not in x.
std::size_t weight(const SimplicialComplex& x, const Simplex& s, const Colouring& e);

// Weight-preserving part of the simplicial boundary, graded by (dimension,
// weight). The differential lowers dimension, so the step is (-1, 0).
GradedComplex horizontal_complex(const SimplicialComplex& x, const Colouring& e, const Field& f);
HomologySummary horizontal_homology(const SimplicialComplex& x, const Colouring& e, const Field& f);

// sigma -> sigma when the weight is unchanged, else 0. Throws kNotAdjacent
// unless b covers a.
ChainMap transition_chain_map(const SimplicialComplex& x, const Colouring& a, const Colouring& b,
                              const Field& f);
// Same map between already built horizontal complexes of x at a and b.
ChainMap transition_chain_map(const SimplicialComplex& x, const Colouring& a, const Colouring& b,
                              std::shared_ptr<const GradedComplex> source,
                              std::shared_ptr<const GradedComplex> target);

struct ColouredMap {
  SimplicialComplex source;
  Colouring source_colouring;
  SimplicialComplex target;
  Colouring target_colouring;
  std::vector<std::uint32_t> vertex_map;

  bool injective() const;
};

// sigma -> +-psi(sigma), the sign sorting the image. Throws kNotColoured when
// psi is not simplicial or breaks a colour condition, kUnsupportedMap when it
// is not injective.
ChainMap induced_injective_map(const ColouredMap& psi, const Field& f);

}  // namespace uberhom
