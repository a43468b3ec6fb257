#include "uberhom/uber.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <vector>

#include "uberhom/error.hpp"
#include "uberhom/linalg.hpp"
#include "uberhom/parallel.hpp"

namespace uberhom {

namespace {

Multidegree lift(int j, const Multidegree& ik) { return {j, ik[0], ik[1]}; }

// Horizontal homology bases of every colouring at one level, with the offset of
// each colouring's block inside the level's (i, k) slot.
struct Level {
  int j = 0;
  std::vector<Colouring> colourings;
  std::vector<std::shared_ptr<const GradedComplex>> complexes;
  std::vector<std::unique_ptr<HomologyBasis>> bases;
  std::map<Multidegree, std::vector<std::size_t>> offsets;
  std::map<Multidegree, std::size_t> sizes;

  std::size_t index_of(const Colouring& e) const {
    auto it = std::lower_bound(colourings.begin(), colourings.end(), e,
                               [](const Colouring& a, const Colouring& b) { return a.mask() < b.mask(); });
    return static_cast<std::size_t>(it - colourings.begin());
  }
};

Level build_level(const SimplicialComplex& x, const Field& f, int j) {
  Level level;
  level.j = j;
  level.colourings = colourings_of_level(x.vertex_count(), static_cast<std::size_t>(j));
  const std::size_t n = level.colourings.size();
  level.complexes.resize(n);
  level.bases.resize(n);
  parallel_for(n, [&](std::size_t t) {
    level.complexes[t] = std::make_shared<const GradedComplex>(horizontal_complex(x, level.colourings[t], f));
    level.bases[t] = std::make_unique<HomologyBasis>(level.complexes[t]);
  });
  for (std::size_t t = 0; t < n; ++t) {
    for (const auto& [ik, r] : level.bases[t]->summary().ranks) {
      auto& off = level.offsets[ik];
      off.resize(n, 0);
      off[t] = level.sizes[ik];
      level.sizes[ik] += r;
    }
  }
  return level;
}

// Differential from level j to level j+1, one matrix per (i, k).
std::map<Multidegree, SparseMatrix> level_differential(const SimplicialComplex& x, const Level& low,
                                                       const Level& high) {
  const std::size_t n = high.colourings.size();
  std::vector<std::vector<std::pair<Multidegree, SparseMatrix::Triplet>>> parts(n);
  // One task per target so each target basis is queried by a single thread.
  parallel_for(n, [&](std::size_t t) {
    const Colouring& b = high.colourings[t];
    for (std::size_t v = 0; v < b.length(); ++v) {
      if (!b.bit(v)) continue;
      Colouring a(b.length(), b.mask() & ~(std::uint64_t{1} << v));
      std::size_t s = low.index_of(a);
      ChainMap map = transition_chain_map(x, a, b, low.complexes[s], high.complexes[t]);
      Scalar factor = sign(a, b) ? Scalar(-1) : Scalar(1);
      for (const auto& [ik, block] : induced_map_on_homology(map, *low.bases[s], *high.bases[t])) {
        if (block.cols() == 0 || block.rows() == 0) continue;
        std::size_t col0 = low.offsets.at(ik)[s];
        std::size_t row0 = high.offsets.at(ik)[t];
        for (const auto& tr : block.triplets()) {
          parts[t].push_back({ik, {static_cast<Index>(row0 + tr.row), static_cast<Index>(col0 + tr.col),
                                   tr.value * factor}});
        }
      }
    }
  });
  std::map<Multidegree, std::vector<SparseMatrix::Triplet>> merged;
  for (auto& part : parts) {
    for (auto& [ik, tr] : part) merged[ik].push_back(std::move(tr));
  }
  std::map<Multidegree, SparseMatrix> out;
  for (const auto& [ik, cols] : low.sizes) {
    auto rows = high.sizes.find(ik);
    if (rows == high.sizes.end()) continue;
    out.emplace(ik, SparseMatrix::from_triplets(rows->second, cols, std::move(merged[ik]))
                        .reduced(low.complexes.front()->field()));
  }
  return out;
}

void require_connected(const SimplicialComplex& x) {
  if (!x.is_connected()) throw Error(ErrorCode::kMalformedInput, "über homology needs a connected complex");
  if (x.vertex_count() > 30) throw Error(ErrorCode::kGuard, "too many vertices");
}

}  // namespace

std::size_t UberSummary::rank(int j, int i, int k) const {
  auto it = ranks.find({j, i, k});
  return it == ranks.end() ? 0 : it->second;
}

GradedComplex uber_complex(const SimplicialComplex& x, const Field& f) {
  require_connected(x);
  GradedComplex c(f, 3, {1, 0, 0});
  const int m = static_cast<int>(x.vertex_count());
  Level low = build_level(x, f, 0);
  for (int j = 0; j <= m; ++j) {
    for (std::size_t t = 0; t < low.colourings.size(); ++t) {
      const std::string prefix = low.colourings[t].to_string();
      for (const auto& [ik, r] : low.bases[t]->summary().ranks) {
        std::vector<std::string> labels;
        for (std::size_t q = 0; q < r; ++q) {
          labels.push_back(prefix + "/" + to_string(ik, 2) + "/" + std::to_string(q));
        }
        (void)c.add_generators(lift(j, ik), std::move(labels));
      }
    }
    if (j == m) break;
    Level high = build_level(x, f, j + 1);
    for (auto& [ik, block] : level_differential(x, low, high)) {
      if (!block.is_zero()) c.set_differential(lift(j, ik), std::move(block));
    }
    low = std::move(high);
  }
  return c;
}

UberSummary uber_homology(const SimplicialComplex& x, const Field& f) {
  require_connected(x);
  const int m = static_cast<int>(x.vertex_count());
  UberSummary out;
  Level low = build_level(x, f, 0);
  std::map<Multidegree, std::size_t> incoming;  // rank of the differential into the current level
  for (int j = 0; j <= m; ++j) {
    std::map<Multidegree, std::size_t> outgoing;
    std::optional<Level> high;
    if (j < m) {
      high = build_level(x, f, j + 1);
      for (const auto& [ik, block] : level_differential(x, low, *high)) outgoing[ik] = rank(block, f);
    }
    for (const auto& [ik, size] : low.sizes) {
      std::size_t r = size - outgoing[ik] - incoming[ik];
      if (r > 0) out.ranks[lift(j, ik)] = r;
    }
    incoming = std::move(outgoing);
    if (high) low = std::move(*high);
  }
  return out;
}

}  // namespace uberhom
