#pragma once

#include <cstddef>
#include <map>

#include "uberhom/complex.hpp"
#include "uberhom/simplicial.hpp"

namespace uberhom {

// Ranks keyed by (j, i, k): poset level, dimension, weight.
struct UberSummary {
  std::map<Multidegree, std::size_t> ranks;

  std::size_t rank(int j, int i, int k) const;
};

// Degree (j, i, k) is the sum of horizontal homologies H_{i,k} over the
// colourings of level j; the block from a colouring to a cover is the induced
// transition map times (-1)^sign. Throws kMalformedInput for a disconnected x.
GradedComplex uber_complex(const SimplicialComplex& x, const Field& f);

// Same ranks as homology(uber_complex(x, f)) while holding two levels at a time.
UberSummary uber_homology(const SimplicialComplex& x, const Field& f);

}  // namespace uberhom
