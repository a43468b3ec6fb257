#include "uberhom/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "uberhom/error.hpp"

namespace uberhom {

namespace {

Multidegree bidegree(std::size_t dim, std::size_t w) {
  return {static_cast<int>(dim), static_cast<int>(w), 0};
}

std::size_t sorting_inversions(const std::vector<std::uint32_t>& v) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (v[a] > v[b]) ++count;
    }
  }
  return count;
}

// Position of each simplex inside its (dimension, weight) slot.
std::map<Simplex, std::size_t> slot_positions(const SimplicialComplex& x, const Colouring& e) {
  std::map<Simplex, std::size_t> pos;
  std::map<Multidegree, std::size_t> next;
  for (std::size_t dim = 0; dim <= x.dimension(); ++dim) {
    for (const auto& s : x.simplices(dim)) {
      pos[s] = next[bidegree(dim, weight(x, s, e))]++;
    }
  }
  return pos;
}

}  // namespace

std::string simplex_label(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, const std::vector<Simplex>& simplices)
    : vertex_count_(vertex_count) {
  if (vertex_count == 0) throw Error(ErrorCode::kMalformedInput, "simplicial complex must be nonempty");
  std::set<Simplex> all;
  for (std::uint32_t v = 0; v < vertex_count; ++v) all.insert({v});
  for (Simplex s : simplices) {
    std::sort(s.begin(), s.end());
    if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end() || s.back() >= vertex_count) {
      throw Error(ErrorCode::kMalformedInput, "bad simplex " + simplex_label(s));
    }
    if (s.size() > 24) throw Error(ErrorCode::kGuard, "simplex too large");
    if (all.count(s)) continue;
    const std::uint32_t n = static_cast<std::uint32_t>(s.size());
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      Simplex face;
      for (std::uint32_t b = 0; b < n; ++b) {
        if ((mask >> b) & 1U) face.push_back(s[b]);
      }
      all.insert(std::move(face));
    }
  }
  for (const auto& s : all) {
    if (by_dim_.size() < s.size()) by_dim_.resize(s.size());
    by_dim_[s.size() - 1].push_back(s);
  }
  for (auto& level : by_dim_) {
    for (std::size_t i = 0; i < level.size(); ++i) index_[level[i]] = i;
  }
}

SimplicialComplex SimplicialComplex::from_edges(
    std::size_t vertex_count, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<Simplex> simplices;
  simplices.reserve(edges.size());
  for (auto [u, v] : edges) simplices.push_back({u, v});
  return SimplicialComplex(vertex_count, simplices);
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t dim) const {
  static const std::vector<Simplex> empty;
  return dim < by_dim_.size() ? by_dim_[dim] : empty;
}

std::size_t SimplicialComplex::simplex_count() const { return index_.size(); }

bool SimplicialComplex::contains(const Simplex& s) const { return index_.count(s) != 0; }

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SimplicialComplex::is_connected() const {
  std::vector<std::size_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : simplices(1)) parent[root(e[0])] = root(e[1]);
  for (std::size_t v = 1; v < vertex_count_; ++v) {
    if (root(v) != root(0)) return false;
  }
  return true;
}

std::size_t weight(const SimplicialComplex& x, const Simplex& s, const Colouring& e) {
  if (e.length() != x.vertex_count()) {
    throw Error(ErrorCode::kMalformedInput, "colouring length does not match the vertex count");
  }
  if (!x.contains(s)) throw Error(ErrorCode::kUnknownSimplex, simplex_label(s) + " is not a simplex");
  std::size_t w = 0;
  for (auto v : s) {
    if (!e.bit(v)) ++w;
  }
  return w;
}

GradedComplex horizontal_complex(const SimplicialComplex& x, const Colouring& e, const Field& f) {
  GradedComplex c(f, 2, {-1, 0, 0});
  auto pos = slot_positions(x, e);
  for (std::size_t dim = 0; dim <= x.dimension(); ++dim) {
    for (const auto& s : x.simplices(dim)) c.add_generator(bidegree(dim, weight(x, s, e)), simplex_label(s));
  }
  std::map<Multidegree, std::vector<SparseMatrix::Triplet>> triplets;
  for (std::size_t dim = 1; dim <= x.dimension(); ++dim) {
    for (const auto& s : x.simplices(dim)) {
      Multidegree d = bidegree(dim, weight(x, s, e));
      auto& out = triplets[d];
      for (std::size_t p = 0; p < s.size(); ++p) {
        if (!e.bit(s[p])) continue;
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(p));
        out.push_back({static_cast<Index>(pos.at(face)), static_cast<Index>(pos.at(s)),
                       Scalar(p % 2 == 0 ? 1 : -1)});
      }
    }
  }
  for (auto& [d, t] : triplets) {
    c.set_differential(d, SparseMatrix::from_triplets(c.size(d + c.step()), c.size(d), std::move(t))
                              .reduced(f));
  }
  return c;
}

HomologySummary horizontal_homology(const SimplicialComplex& x, const Colouring& e, const Field& f) {
  return homology(horizontal_complex(x, e, f), HomologyMode::kRepresentatives);
}

ChainMap transition_chain_map(const SimplicialComplex& x, const Colouring& a, const Colouring& b,
                              std::shared_ptr<const GradedComplex> source,
                              std::shared_ptr<const GradedComplex> target) {
  std::size_t t = flipped_index(a, b);
  auto source_pos = slot_positions(x, a);
  auto target_pos = slot_positions(x, b);
  std::map<Multidegree, std::vector<SparseMatrix::Triplet>> triplets;
  for (std::size_t dim = 0; dim <= x.dimension(); ++dim) {
    for (const auto& s : x.simplices(dim)) {
      if (std::binary_search(s.begin(), s.end(), static_cast<std::uint32_t>(t))) continue;
      triplets[bidegree(dim, weight(x, s, a))].push_back(
          {static_cast<Index>(target_pos.at(s)), static_cast<Index>(source_pos.at(s)), Scalar(1)});
    }
  }
  ChainMap map(source, target);
  for (auto& [d, tr] : triplets) {
    map.set_block(d, SparseMatrix::from_triplets(target->size(d), source->size(d), std::move(tr)));
  }
  return map;
}

ChainMap transition_chain_map(const SimplicialComplex& x, const Colouring& a, const Colouring& b,
                              const Field& f) {
  flipped_index(a, b);
  auto source = std::make_shared<const GradedComplex>(horizontal_complex(x, a, f));
  auto target = std::make_shared<const GradedComplex>(horizontal_complex(x, b, f));
  return transition_chain_map(x, a, b, source, target);
}

bool ColouredMap::injective() const {
  std::set<std::uint32_t> image(vertex_map.begin(), vertex_map.end());
  return image.size() == vertex_map.size();
}

ChainMap induced_injective_map(const ColouredMap& psi, const Field& f) {
  const auto& x = psi.source;
  const auto& y = psi.target;
  if (psi.vertex_map.size() != x.vertex_count() || psi.source_colouring.length() != x.vertex_count() ||
      psi.target_colouring.length() != y.vertex_count()) {
    throw Error(ErrorCode::kMalformedInput, "coloured map sizes do not match");
  }
  for (auto v : psi.vertex_map) {
    if (v >= y.vertex_count()) throw Error(ErrorCode::kNotColoured, "vertex image out of range");
  }
  auto image_of = [&](const Simplex& s) {
    Simplex img;
    for (auto v : s) img.push_back(psi.vertex_map[v]);
    return img;
  };
  for (std::size_t dim = 0; dim <= x.dimension(); ++dim) {
    for (const auto& s : x.simplices(dim)) {
      Simplex img = image_of(s);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (!y.contains(img)) throw Error(ErrorCode::kNotColoured, "map is not simplicial");
    }
  }
  std::vector<int> ones_onto(y.vertex_count(), 0);
  std::vector<bool> in_image(y.vertex_count(), false);
  for (std::uint32_t v = 0; v < x.vertex_count(); ++v) {
    in_image[psi.vertex_map[v]] = true;
    if (psi.source_colouring.bit(v)) ++ones_onto[psi.vertex_map[v]];
  }
  for (std::uint32_t w = 0; w < y.vertex_count(); ++w) {
    if (!in_image[w]) continue;
    if (ones_onto[w] > 1) {
      throw Error(ErrorCode::kNotColoured, "two 1-coloured vertices map to " + std::to_string(w));
    }
    if (psi.target_colouring.bit(w) != (ones_onto[w] == 1)) {
      throw Error(ErrorCode::kNotColoured, "colour of vertex " + std::to_string(w) + " is not induced");
    }
  }
  if (!psi.injective()) throw Error(ErrorCode::kUnsupportedMap, "only injective maps induce chain maps");

  auto source = std::make_shared<const GradedComplex>(horizontal_complex(x, psi.source_colouring, f));
  auto target = std::make_shared<const GradedComplex>(horizontal_complex(y, psi.target_colouring, f));
  auto source_pos = slot_positions(x, psi.source_colouring);
  auto target_pos = slot_positions(y, psi.target_colouring);
  std::map<Multidegree, std::vector<SparseMatrix::Triplet>> triplets;
  for (std::size_t dim = 0; dim <= x.dimension(); ++dim) {
    for (const auto& s : x.simplices(dim)) {
      Simplex img = image_of(s);
      int sgn = sorting_inversions(img) % 2 == 0 ? 1 : -1;
      std::sort(img.begin(), img.end());
      Multidegree d = bidegree(dim, weight(x, s, psi.source_colouring));
      if (bidegree(dim, weight(y, img, psi.target_colouring)) != d) {
        throw Error(ErrorCode::kContractViolation, "injective coloured map changed a weight");
      }
      triplets[d].push_back(
          {static_cast<Index>(target_pos.at(img)), static_cast<Index>(source_pos.at(s)), Scalar(sgn)});
    }
  }
  ChainMap map(source, target);
  for (auto& [d, tr] : triplets) {
    map.set_block(d, SparseMatrix::from_triplets(target->size(d), source->size(d), std::move(tr)).reduced(f));
  }
  if (auto bad = map.first_noncommuting_degree()) {
    throw Error(ErrorCode::kContractViolation, "induced map does not commute at " + to_string(*bad, 2));
  }
  return map;
}

}  // namespace uberhom
