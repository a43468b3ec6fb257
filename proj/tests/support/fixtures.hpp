#pragma once

// Shared complexes and matchings for the unit and acceptance suites.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "uberhom/complex.hpp"
#include "uberhom/error.hpp"
#include "uberhom/morse.hpp"

namespace fixture {

using namespace uberhom;

inline Multidegree deg(int i) { return {i, 0, 0}; }

// Chain complex of the full simplex on {1,2,3} including the empty face,
// graded by size, differential adding a vertex.
inline GradedComplex boolean_cube(const Field& f) {
  GradedComplex c(f, 1, {1, 0, 0});
  std::vector<std::vector<int>> subsets{{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  auto label = [](const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  };
  std::map<std::vector<int>, std::size_t> where;
  for (const auto& s : subsets) where[s] = c.add_generator(deg(static_cast<int>(s.size())), label(s));
  for (int k = 0; k < 3; ++k) {
    std::vector<SparseMatrix::Triplet> t;
    for (const auto& s : subsets) {
      if (static_cast<int>(s.size()) != k) continue;
      for (int v = 1; v <= 3; ++v) {
        if (std::find(s.begin(), s.end(), v) != s.end()) continue;
        auto up = s;
        up.push_back(v);
        std::sort(up.begin(), up.end());
        int below = static_cast<int>(std::count_if(s.begin(), s.end(), [&](int u) { return u < v; }));
        t.push_back({Index(where[up]), Index(where[s]), Scalar(below % 2 ? -1 : 1)});
      }
    }
    c.set_differential(deg(k), SparseMatrix::from_triplets(c.size(deg(k + 1)), c.size(deg(k)), std::move(t)).reduced(f));
  }
  return c;
}

inline GeneratorRef ref(const GradedComplex& c, int degree, const std::string& label) {
  return {deg(degree), *c.find(deg(degree), label)};
}

inline MorseMatching cube_matching(const GradedComplex& c) {
  MorseMatching m;
  m.add(ref(c, 0, "{}"), ref(c, 1, "{3}"));
  m.add(ref(c, 1, "{1}"), ref(c, 2, "{1,3}"));
  m.add(ref(c, 1, "{2}"), ref(c, 2, "{2,3}"));
  m.add(ref(c, 2, "{1,2}"), ref(c, 3, "{1,2,3}"));
  return m;
}

// Greedy random matching: edges of the differential in random order, each
// kept when the result is still a matching and still acyclic.
inline MorseMatching grow_matching(const GradedComplex& c, std::mt19937_64& rng) {
  struct Candidate {
    GeneratorRef lower, upper;
  };
  std::vector<Candidate> candidates;
  for (const auto& d : c.differential_degrees()) {
    for (const auto& t : c.stored_differential(d)->triplets()) {
      if (!c.field().is_zero(t.value)) candidates.push_back({{d, t.col}, {d + c.step(), t.row}});
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  MorseMatching m;
  for (const auto& cand : candidates) {
    MorseMatching trial = m;
    trial.add(cand.lower, cand.upper);
    try {
      validate_matching(c, trial);
    } catch (const Error&) {
      continue;
    }
    if (is_acyclic(c, trial)) m = trial;
  }
  return m;
}

}  // namespace fixture
