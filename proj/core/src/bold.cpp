#include "uberhom/bold.hpp"

#include <bit>
#include <unordered_map>

#include "uberhom/domination.hpp"
#include "uberhom/error.hpp"
#include "uberhom/parallel.hpp"

namespace uberhom {

namespace {

Multidegree deg(int i) { return {i, 0, 0}; }

int koszul(VertexSet lower, std::uint32_t v) {
  return std::popcount(lower & ((VertexSet{1} << v) - 1)) & 1;
}

// Position of every bold generator: colourings of one level are laid out by
// increasing mask, each contributing its components in order.
struct BoldIndex {
  std::size_t n = 0;
  std::vector<std::uint32_t> base;                // first index of each mask inside its degree
  std::vector<std::vector<VertexSet>> parts;      // components of each mask

  explicit BoldIndex(const Graph& g) : n(g.vertex_count()) {
    if (n > 24) throw Error(ErrorCode::kGuard, "bold complex limited to 24 vertices");
    const std::size_t total = std::size_t{1} << n;
    base.assign(total, 0);
    parts.resize(total);
    parallel_for(n + 1, [&](std::size_t level) {
      std::uint32_t next = 0;
      for (VertexSet mask = 0; mask < total; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != level) continue;
        base[mask] = next;
        parts[mask] = g.components_of(mask);
        next += static_cast<std::uint32_t>(parts[mask].size());
      }
    });
  }

  // Index of the component of mask containing vertex v.
  std::uint32_t locate(VertexSet mask, std::uint32_t v) const {
    const auto& p = parts[mask];
    for (std::size_t c = 0; c < p.size(); ++c) {
      if ((p[c] >> v) & 1U) return base[mask] + static_cast<std::uint32_t>(c);
    }
    throw Error(ErrorCode::kContractViolation, "vertex is not coloured");
  }
};

}  // namespace

std::string bold_label(VertexSet component, VertexSet colouring, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (auto v : vertices_of(component)) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  }
  out += "}@";
  for (std::size_t v = 0; v < n; ++v) out += ((colouring >> v) & 1U) ? '1' : '0';
  return out;
}

GradedComplex bold_complex(const Graph& g, const Field& f) {
  BoldIndex index(g);
  const std::size_t n = g.vertex_count();
  const std::size_t total = std::size_t{1} << n;
  GradedComplex c(f, 1, {1, 0, 0});
  std::vector<std::vector<VertexSet>> masks(n + 1);
  for (VertexSet mask = 1; mask < total; ++mask) masks[std::popcount(mask)].push_back(mask);
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::string> labels;
    for (VertexSet mask : masks[i]) {
      for (VertexSet part : index.parts[mask]) labels.push_back(bold_label(part, mask, n));
    }
    c.add_generators(deg(static_cast<int>(i)), std::move(labels));
  }
  const Scalar one(1);
  const Scalar minus = f.reduce(Scalar(-1));
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<SparseMatrix::Triplet> triplets;
    for (VertexSet mask : masks[i]) {
      for (std::size_t k = 0; k < index.parts[mask].size(); ++k) {
        Index col = index.base[mask] + static_cast<Index>(k);
        auto anchor = static_cast<std::uint32_t>(std::countr_zero(index.parts[mask][k]));
        for (VertexSet free = g.all() & ~mask; free; free &= free - 1) {
          auto v = static_cast<std::uint32_t>(std::countr_zero(free));
          VertexSet upper = mask | (VertexSet{1} << v);
          triplets.push_back({index.locate(upper, anchor), col, koszul(mask, v) ? minus : one});
        }
      }
    }
    c.set_differential(deg(static_cast<int>(i)),
                       SparseMatrix::from_triplets(c.size(deg(static_cast<int>(i + 1))),
                                                   c.size(deg(static_cast<int>(i))), std::move(triplets)));
  }
  return c;
}

GradedComplex dominating_complex(const Graph& g, const Field& f) {
  const std::size_t n = g.vertex_count();
  GradedComplex c(f, 1, {1, 0, 0});
  std::vector<std::vector<VertexSet>> sets(n + 1);
  std::unordered_map<VertexSet, Index> position;
  for (VertexSet s : connected_dominating_sets(g)) {
    auto& slot = sets[std::popcount(s)];
    position.emplace(s, static_cast<Index>(slot.size()));
    slot.push_back(s);
  }
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::string> labels;
    for (VertexSet s : sets[k]) labels.push_back(bold_label(s, s, n));
    c.add_generators(deg(static_cast<int>(k)), std::move(labels));
  }
  const Scalar minus = f.reduce(Scalar(-1));
  for (std::size_t k = 1; k < n; ++k) {
    if (sets[k].empty() || sets[k + 1].empty()) continue;
    std::vector<SparseMatrix::Triplet> triplets;
    for (std::size_t col = 0; col < sets[k].size(); ++col) {
      VertexSet s = sets[k][col];
      for (VertexSet free = g.all() & ~s; free; free &= free - 1) {
        auto v = static_cast<std::uint32_t>(std::countr_zero(free));
        triplets.push_back({position.at(s | (VertexSet{1} << v)), static_cast<Index>(col),
                            koszul(s, v) ? minus : Scalar(1)});
      }
    }
    c.set_differential(deg(static_cast<int>(k)),
                       SparseMatrix::from_triplets(sets[k + 1].size(), sets[k].size(), std::move(triplets)));
  }
  return c;
}

HomologySummary bold_homology(const Graph& g, const Field& f, BoldPath via) {
  if (via == BoldPath::kDominating) return homology(dominating_complex(g, f));
  HomologySummary full = homology(bold_complex(g, f));
  if (via == BoldPath::kBoth) {
    HomologySummary reduced = homology(dominating_complex(g, f));
    if (reduced.ranks != full.ranks) {
      throw Error(ErrorCode::kContractViolation, "bold and dominating homology disagree");
    }
  }
  return full;
}

RetractionMatching retraction_matching(const Graph& g) {
  BoldIndex index(g);
  const std::size_t n = g.vertex_count();
  const std::size_t total = std::size_t{1} << n;
  RetractionMatching out;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t count = 0;
    for (VertexSet mask = 1; mask < total; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) == i) count += index.parts[mask].size();
    }
    out.layers.phi[deg(static_cast<int>(i))].assign(count, 0);
    out.layers.block[deg(static_cast<int>(i))].assign(count, 0);
  }
  for (VertexSet mask = 1; mask < total; ++mask) {
    const int level = std::popcount(mask);
    for (std::size_t k = 0; k < index.parts[mask].size(); ++k) {
      VertexSet h = index.parts[mask][k];
      std::size_t idx = index.base[mask] + k;
      out.layers.phi[deg(level)][idx] = static_cast<std::uint64_t>(std::popcount(h));
      out.layers.block[deg(level)][idx] = h;
      VertexSet rest = g.all() & ~g.closed_neighbourhood(h);
      if (rest == 0) continue;
      auto r = static_cast<std::uint32_t>(std::countr_zero(rest));
      if ((mask >> r) & 1U) continue;
      VertexSet upper = mask | (VertexSet{1} << r);
      auto anchor = static_cast<std::uint32_t>(std::countr_zero(h));
      out.matching.add({deg(level), idx}, {deg(level + 1), index.locate(upper, anchor)});
    }
  }
  return out;
}

EulerReport euler_check(const Graph& g, const Field& f, BoldPath via) {
  EulerReport report;
  report.chi = euler_characteristic(bold_homology(g, f, via));
  report.dc_at_minus1 = connected_domination_polynomial(g).evaluate(-1);
  report.pass = report.chi == report.dc_at_minus1;
  return report;
}

}  // namespace uberhom
