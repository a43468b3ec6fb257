#include "uberhom/morse.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "echelon.hpp"
#include "uberhom/error.hpp"

namespace uberhom {

namespace {

constexpr std::int64_t kUnmatched = -1;

// Partner lookup in both directions for every generator.
struct Pairing {
  std::map<Multidegree, std::vector<std::int64_t>> up;    // as lower: index in d + step
  std::map<Multidegree, std::vector<std::int64_t>> down;  // as upper: index in d - step

  std::int64_t up_of(const Multidegree& d, std::size_t i) const {
    auto it = up.find(d);
    return it == up.end() ? kUnmatched : it->second[i];
  }
  std::int64_t down_of(const Multidegree& d, std::size_t i) const {
    auto it = down.find(d);
    return it == down.end() ? kUnmatched : it->second[i];
  }
};

Pairing build_pairing(const GradedComplex& c, const MorseMatching& m) {
  Pairing p;
  for (const auto& d : c.degrees()) {
    p.up[d].assign(c.size(d), kUnmatched);
    p.down[d].assign(c.size(d), kUnmatched);
  }
  auto used = [&](const GeneratorRef& g) {
    return p.up[g.degree][g.index] != kUnmatched || p.down[g.degree][g.index] != kUnmatched;
  };
  for (const auto& e : m.edges) {
    if (e.upper.degree != e.lower.degree + c.step()) {
      throw Error(ErrorCode::kNotAMatching, "matched pair is not in adjacent degrees");
    }
    if (e.lower.index >= c.size(e.lower.degree) || e.upper.index >= c.size(e.upper.degree)) {
      throw Error(ErrorCode::kNotAMatching, "matched generator out of range");
    }
    if (used(e.lower) || used(e.upper)) {
      throw Error(ErrorCode::kNotAMatching,
                  "generator " + std::to_string(used(e.lower) ? e.lower.index : e.upper.index) +
                      " in degree " +
                      to_string(used(e.lower) ? e.lower.degree : e.upper.degree, c.arity()) +
                      " is matched twice");
    }
    p.up[e.lower.degree][e.lower.index] = static_cast<std::int64_t>(e.upper.index);
    p.down[e.upper.degree][e.upper.index] = static_cast<std::int64_t>(e.lower.index);
  }
  return p;
}

// Graph on the matched lower generators of degree d: a -> a' when the
// differential of a hits the partner of a' (a != a'). Optionally restricted to
// edges inside one block.
std::vector<std::vector<std::size_t>> zigzag_graph(const GradedComplex& c, const Pairing& p,
                                                   const Multidegree& d,
                                                   const LayerFunction* blocks_only) {
  const Field& field = c.field();
  const std::size_t n = c.size(d);
  std::vector<std::vector<std::size_t>> adj(n);
  const SparseMatrix* diff = c.stored_differential(d);
  if (diff == nullptr) return adj;
  const Multidegree upper = d + c.step();
  for (std::size_t a = 0; a < n; ++a) {
    if (p.up_of(d, a) == kUnmatched) continue;
    for (const auto& e : diff->column(static_cast<Index>(a))) {
      std::int64_t target = p.down_of(upper, e.index);
      if (target == kUnmatched || static_cast<std::size_t>(target) == a) continue;
      if (field.is_zero(e.value)) continue;
      if (blocks_only != nullptr &&
          blocks_only->block_of({d, a}) != blocks_only->block_of({d, static_cast<std::size_t>(target)})) {
        continue;
      }
      adj[a].push_back(static_cast<std::size_t>(target));
    }
  }
  return adj;
}

// Kahn ordering of the matched lower generators; nullopt when a cycle exists.
std::optional<std::vector<std::size_t>> topological_order(
    const std::vector<std::vector<std::size_t>>& adj, const std::vector<bool>& active) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> indegree(n, 0);
  std::size_t count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (!active[a]) continue;
    ++count;
    for (auto b : adj[a]) ++indegree[b];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t a = 0; a < n; ++a) {
    if (active[a] && indegree[a] == 0) ready.push(a);
  }
  std::vector<std::size_t> order;
  order.reserve(count);
  while (!ready.empty()) {
    std::size_t a = ready.top();
    ready.pop();
    order.push_back(a);
    for (auto b : adj[a]) {
      if (--indegree[b] == 0) ready.push(b);
    }
  }
  if (order.size() != count) return std::nullopt;
  return order;
}

std::vector<bool> matched_up(const GradedComplex& c, const Pairing& p, const Multidegree& d) {
  std::vector<bool> active(c.size(d));
  for (std::size_t a = 0; a < active.size(); ++a) active[a] = p.up_of(d, a) != kUnmatched;
  return active;
}

bool acyclic_with(const GradedComplex& c, const Pairing& p, const LayerFunction* blocks_only) {
  for (const auto& d : c.degrees()) {
    auto adj = zigzag_graph(c, p, d, blocks_only);
    if (!topological_order(adj, matched_up(c, p, d))) return false;
  }
  return true;
}

template <class Ops>
MorseReduction reduce_impl(const Ops& ops, const GradedComplex& c, const Pairing& p) {
  using Elem = typename Ops::Elem;
  MorseReduction out{GradedComplex(c.field(), c.arity(), c.step()), {}};

  std::map<Multidegree, std::vector<std::int64_t>> new_index;
  for (const auto& d : c.degrees()) {
    auto& slot = new_index[d];
    slot.assign(c.size(d), kUnmatched);
    auto& crit = out.critical[d];
    for (std::size_t i = 0; i < c.size(d); ++i) {
      if (p.up_of(d, i) == kUnmatched && p.down_of(d, i) == kUnmatched) {
        slot[i] = static_cast<std::int64_t>(crit.size());
        crit.push_back(i);
        out.complex.add_generator(d, c.basis(d)[i]);
      }
    }
    if (crit.empty()) out.critical.erase(d);
  }

  for (const auto& [d, crit] : out.critical) {
    const SparseMatrix* diff = c.stored_differential(d);
    const Multidegree upper = d + c.step();
    const std::size_t target_size = out.complex.size(upper);
    if (diff == nullptr || target_size == 0) continue;

    auto adj = zigzag_graph(c, p, d, nullptr);
    auto order = topological_order(adj, matched_up(c, p, d));
    if (!order) throw Error(ErrorCode::kContractViolation, "matching has a cycle");
    std::vector<std::size_t> position(c.size(d), 0);
    for (std::size_t k = 0; k < order->size(); ++k) position[(*order)[k]] = k;

    std::vector<SparseMatrix::Triplet> triplets;
    for (std::size_t col = 0; col < crit.size(); ++col) {
      std::map<Index, Elem> acc;
      std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> pending;
      std::set<std::size_t> queued;
      auto absorb = [&](const std::vector<Entry>& column, const Elem& factor) {
        for (const auto& e : column) {
          Elem v = ops.mul(factor, ops.from(e.value));
          if (ops.is_zero(v)) continue;
          auto [it, inserted] = acc.try_emplace(e.index, v);
          if (!inserted) it->second = ops.add(it->second, v);
          std::int64_t lower = p.down_of(upper, e.index);
          if (lower != kUnmatched) {
            std::size_t pos = position[static_cast<std::size_t>(lower)];
            if (queued.insert(pos).second) pending.push(pos);
          }
        }
      };
      absorb(diff->column(static_cast<Index>(crit[col])), ops.one());
      while (!pending.empty()) {
        std::size_t pos = pending.top();
        pending.pop();
        std::size_t a = (*order)[pos];
        Index b = static_cast<Index>(p.up_of(d, a));
        auto it = acc.find(b);
        if (it == acc.end() || ops.is_zero(it->second)) continue;
        Elem weight = ops.from(diff->at(b, static_cast<Index>(a)));
        Elem factor = ops.neg(ops.mul(it->second, ops.inv(weight)));
        absorb(diff->column(static_cast<Index>(a)), factor);
      }
      for (const auto& [row, value] : acc) {
        std::int64_t target = new_index.at(upper)[row];
        if (target == kUnmatched || ops.is_zero(value)) continue;
        triplets.push_back({static_cast<Index>(target), static_cast<Index>(col), ops.to(value)});
      }
    }
    out.complex.set_differential(
        d, SparseMatrix::from_triplets(target_size, crit.size(), std::move(triplets)));
  }
  return out;
}

}  // namespace

void validate_matching(const GradedComplex& c, const MorseMatching& m) {
  build_pairing(c, m);
  for (const auto& e : m.edges) {
    const SparseMatrix* diff = c.stored_differential(e.lower.degree);
    Scalar coefficient = diff ? diff->at(static_cast<Index>(e.upper.index),
                                         static_cast<Index>(e.lower.index))
                              : Scalar(0);
    if (c.field().is_zero(coefficient)) {
      throw Error(ErrorCode::kInvalidEdge,
                  "matched pair (" + c.basis(e.lower.degree)[e.lower.index] + ", " +
                      c.basis(e.upper.degree)[e.upper.index] + ") has zero coefficient");
    }
  }
}

bool is_acyclic(const GradedComplex& c, const MorseMatching& m) {
  validate_matching(c, m);
  return acyclic_with(c, build_pairing(c, m), nullptr);
}

LayerCertificate layered_acyclicity(const GradedComplex& c, const MorseMatching& m,
                                    const LayerFunction& layers) {
  validate_matching(c, m);
  Pairing p = build_pairing(c, m);
  for (const auto& d : c.degrees()) {
    auto phi = layers.phi.find(d);
    auto block = layers.block.find(d);
    if (phi == layers.phi.end() || block == layers.block.end() ||
        phi->second.size() != c.size(d) || block->second.size() != c.size(d)) {
      throw Error(ErrorCode::kMalformedInput,
                  "layer function is not total at degree " + to_string(d, c.arity()));
    }
  }

  if (!acyclic_with(c, p, &layers)) {
    return {false, 1, "a block sub-matching has a directed cycle"};
  }
  for (const auto& e : m.edges) {
    if (layers.block_of(e.lower) != layers.block_of(e.upper)) {
      return {false, 2, "matched pair crosses blocks at degree " + to_string(e.lower.degree, c.arity())};
    }
    if (layers.phi_of(e.lower) != layers.phi_of(e.upper)) {
      return {false, 2, "phi differs on a matched pair at degree " + to_string(e.lower.degree, c.arity())};
    }
  }
  for (const auto& d : c.differential_degrees()) {
    const SparseMatrix* diff = c.stored_differential(d);
    const Multidegree upper = d + c.step();
    for (std::size_t a = 0; a < diff->cols(); ++a) {
      for (const auto& e : diff->column(static_cast<Index>(a))) {
        if (c.field().is_zero(e.value)) continue;
        if (p.up_of(d, a) == static_cast<std::int64_t>(e.index)) continue;
        GeneratorRef from{d, a};
        GeneratorRef to{upper, e.index};
        auto lo = layers.phi_of(from);
        auto hi = layers.phi_of(to);
        bool crosses = layers.block_of(from) != layers.block_of(to);
        if (hi < lo || (crosses && hi == lo)) {
          return {false, 3,
                  "phi does not increase from " + c.basis(d)[a] + " to " + c.basis(upper)[e.index]};
        }
      }
    }
  }
  return {};
}

MorseReduction morse_reduce_with_map(const GradedComplex& c, const MorseMatching& m,
                                     const LayerFunction* layers) {
  validate_matching(c, m);
  bool certified = layers != nullptr && static_cast<bool>(layered_acyclicity(c, m, *layers));
  if (!certified && !is_acyclic(c, m)) {
    throw Error(ErrorCode::kContractViolation, "matching is not acyclic");
  }
  Pairing p = build_pairing(c, m);
  return detail::dispatch(c.field(), [&](const auto& ops) { return reduce_impl(ops, c, p); });
}

GradedComplex morse_reduce(const GradedComplex& c, const MorseMatching& m,
                           const LayerFunction* layers) {
  return morse_reduce_with_map(c, m, layers).complex;
}

}  // namespace uberhom
