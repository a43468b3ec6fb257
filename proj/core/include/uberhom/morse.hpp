#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uberhom/complex.hpp"

namespace uberhom {

struct GeneratorRef {
  Multidegree degree;
  std::size_t index;

  friend auto operator<=>(const GeneratorRef&, const GeneratorRef&) = default;
};

// Matched pair: lower in degree d, upper in d + step, with <d lower, upper> != 0.
struct MorseEdge {
  GeneratorRef lower;
  GeneratorRef upper;
};

struct MorseMatching {
  std::vector<MorseEdge> edges;

  void add(GeneratorRef lower, GeneratorRef upper) { edges.push_back({lower, upper}); }
  std::size_t size() const noexcept { return edges.size(); }
};

// Throws kNotAMatching for shared endpoints or degree mismatch, kInvalidEdge
// when the differential coefficient vanishes in the field.
void validate_matching(const GradedComplex& c, const MorseMatching& m);

// True iff reversing the matched edges leaves the differential graph without
// directed cycles. Any such cycle alternates between two adjacent degrees, so
// the search runs on that bipartite structure only.
bool is_acyclic(const GradedComplex& c, const MorseMatching& m);

// Layer value and block id for every generator.
struct LayerFunction {
  std::map<Multidegree, std::vector<std::uint64_t>> phi;
  std::map<Multidegree, std::vector<std::uint64_t>> block;

  std::uint64_t phi_of(const GeneratorRef& g) const { return phi.at(g.degree).at(g.index); }
  std::uint64_t block_of(const GeneratorRef& g) const { return block.at(g.degree).at(g.index); }
};

struct LayerCertificate {
  bool ok = true;
  // 1: a block's sub-matching has a cycle; 2: a matched pair straddles blocks
  // or changes phi; 3: an unmatched incidence decreases phi, or keeps it
  // constant while crossing blocks.
  std::optional<int> violated_clause;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

// Sufficient condition for acyclicity: blocks are individually acyclic, phi is
// constant on matched pairs, and phi never decreases along unmatched
// incidences and strictly increases along those that leave a block. A failed
// certificate does not mean the matching is cyclic.
LayerCertificate layered_acyclicity(const GradedComplex& c, const MorseMatching& m,
                                    const LayerFunction& layers);

struct MorseReduction {
  GradedComplex complex;
  // Original indices of the critical generators per degree, in basis order.
  std::map<Multidegree, std::vector<std::size_t>> critical;
};

// Critical complex of an acyclic matching. Coefficients sum over zig-zag paths
// c -> b1 => a1 -> b2 => ... -> c' with weight
// <dc,b1> (-<da1,b1>^-1) <da1,b2> ... <dak,c'>.
// The matching is certified with the layer function when one is supplied,
// falling back to the global search; uncertified matchings throw
// kContractViolation.
MorseReduction morse_reduce_with_map(const GradedComplex& c, const MorseMatching& m,
                                     const LayerFunction* layers = nullptr);
GradedComplex morse_reduce(const GradedComplex& c, const MorseMatching& m,
                           const LayerFunction* layers = nullptr);

}  // namespace uberhom
