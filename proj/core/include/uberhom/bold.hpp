#pragma once

#include <cstdint>
#include <string>

#include "uberhom/complex.hpp"
#include "uberhom/graph.hpp"
#include "uberhom/morse.hpp"
#include "uberhom/polynomial.hpp"

namespace uberhom {

// "{0,1,3}@1101": component, then the colouring with vertex 0 first.
std::string bold_label(VertexSet component, VertexSet colouring, std::size_t n);

// Degree i holds one generator per component of G_e over every colouring e of
// level i, colourings by increasing mask and components by minimum vertex.
// A component x of G_e maps to (-1)^sign(e,e') y for each cover e', where y is
// the component of G_e' containing x. Degree 0 is empty.
GradedComplex bold_complex(const Graph& g, const Field& f);

// Spanned by the connected dominating sets, degree = size, (size, lex) order.
// A subcomplex of bold_complex with identical labels.
GradedComplex dominating_complex(const Graph& g, const Field& f);

enum class BoldPath { kDominating, kBold, kBoth };

// kBoth computes both and throws kContractViolation if they differ.
HomologySummary bold_homology(const Graph& g, const Field& f, BoldPath via = BoldPath::kDominating);

struct RetractionMatching {
  MorseMatching matching;
  // phi = |V(H)| and block = V(H) as a mask, where H is the generator's component.
  LayerFunction layers;
};

// Generators sharing a component H form a Boolean poset over
// R = V minus the closed neighbourhood of H; each class is paired along its
// smallest vertex of R. Critical generators are the connected dominating sets.
RetractionMatching retraction_matching(const Graph& g);

struct EulerReport {
  long long chi = 0;
  long long dc_at_minus1 = 0;
  bool pass = false;
};

// chi from bold homology ranks along the chosen path against D^c(-1) from the
// enumeration polynomial.
EulerReport euler_check(const Graph& g, const Field& f, BoldPath via = BoldPath::kDominating);

}  // namespace uberhom
