#include "uberhom/complex.hpp"

#include <algorithm>
#include <numeric>

#include "uberhom/error.hpp"
#include "uberhom/parallel.hpp"

namespace uberhom {

Multidegree operator+(const Multidegree& a, const Multidegree& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Multidegree operator-(const Multidegree& a, const Multidegree& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

std::string to_string(const Multidegree& d, std::size_t arity) {
  if (arity <= 1) return std::to_string(d[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < arity; ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

GradedComplex::GradedComplex(Field field, std::size_t arity, Multidegree step)
    : field_(field), arity_(arity), step_(step) {
  if (arity < 1 || arity > 3) {
    throw Error(ErrorCode::kMalformedComplex, "arity must be 1, 2 or 3");
  }
  if (step[0] != 1 && step[0] != -1) {
    throw Error(ErrorCode::kMalformedComplex, "primary step must be +1 or -1");
  }
}

std::size_t GradedComplex::add_generators(const Multidegree& d, std::vector<std::string> labels) {
  auto& basis = basis_[d];
  std::size_t first = basis.size();
  basis.insert(basis.end(), std::make_move_iterator(labels.begin()),
               std::make_move_iterator(labels.end()));
  return first;
}

std::size_t GradedComplex::add_generator(const Multidegree& d, std::string label) {
  auto& basis = basis_[d];
  basis.push_back(std::move(label));
  return basis.size() - 1;
}

void GradedComplex::set_differential(const Multidegree& d, SparseMatrix m) {
  diff_[d] = std::move(m);
}

std::vector<Multidegree> GradedComplex::degrees() const {
  std::vector<Multidegree> out;
  for (const auto& [d, labels] : basis_) {
    if (!labels.empty()) out.push_back(d);
  }
  return out;
}

std::size_t GradedComplex::size(const Multidegree& d) const {
  auto it = basis_.find(d);
  return it == basis_.end() ? 0 : it->second.size();
}

std::size_t GradedComplex::total_size() const {
  std::size_t total = 0;
  for (const auto& [d, labels] : basis_) total += labels.size();
  return total;
}

const std::vector<std::string>& GradedComplex::basis(const Multidegree& d) const {
  static const std::vector<std::string> kEmpty;
  auto it = basis_.find(d);
  return it == basis_.end() ? kEmpty : it->second;
}

std::optional<std::size_t> GradedComplex::find(const Multidegree& d,
                                                const std::string& label) const {
  const auto& labels = basis(d);
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

SparseMatrix GradedComplex::differential(const Multidegree& d) const {
  auto it = diff_.find(d);
  if (it != diff_.end()) return it->second;
  return SparseMatrix(size(d + step_), size(d));
}

const SparseMatrix* GradedComplex::stored_differential(const Multidegree& d) const {
  auto it = diff_.find(d);
  return it == diff_.end() ? nullptr : &it->second;
}

std::vector<Multidegree> GradedComplex::differential_degrees() const {
  std::vector<Multidegree> out;
  for (const auto& [d, m] : diff_) out.push_back(d);
  return out;
}

Validation validate(const GradedComplex& c) {
  for (const auto& d : c.differential_degrees()) {
    const SparseMatrix* m = c.stored_differential(d);
    if (m->cols() != c.size(d) || m->rows() != c.size(d + c.step())) {
      throw Error(ErrorCode::kMalformedComplex,
                  "differential at degree " + to_string(d, c.arity()) + " is " +
                      std::to_string(m->rows()) + "x" + std::to_string(m->cols()) +
                      " but the bases have sizes " + std::to_string(c.size(d + c.step())) +
                      " and " + std::to_string(c.size(d)));
    }
  }
  for (const auto& d : c.differential_degrees()) {
    const SparseMatrix* first = c.stored_differential(d);
    const SparseMatrix* second = c.stored_differential(d + c.step());
    if (first == nullptr || second == nullptr) continue;
    if (!multiply(*second, *first, c.field()).is_zero()) {
      return {false, d, "d∘d != 0 starting at degree " + to_string(d, c.arity())};
    }
  }
  return {};
}

std::size_t HomologySummary::rank(const Multidegree& d) const {
  auto it = ranks.find(d);
  return it == ranks.end() ? 0 : it->second;
}

std::size_t HomologySummary::total_rank() const {
  std::size_t total = 0;
  for (const auto& [d, r] : ranks) total += r;
  return total;
}

namespace {

std::vector<Vector> columns_of(const SparseMatrix& m) {
  std::vector<Vector> out;
  out.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out.emplace_back(m.rows(), m.column(static_cast<Index>(c)));
  return out;
}

void require_valid(const GradedComplex& c) {
  auto report = validate(c);
  if (!report.ok) throw Error(ErrorCode::kMalformedComplex, report.message);
}

}  // namespace

HomologySummary homology(const GradedComplex& c, HomologyMode mode) {
  require_valid(c);
  auto degrees = c.degrees();
  auto stored = c.differential_degrees();

  std::vector<std::size_t> diff_rank(stored.size());
  parallel_for(stored.size(), [&](std::size_t i) {
    diff_rank[i] = rank(*c.stored_differential(stored[i]), c.field());
  });
  auto rank_at = [&](const Multidegree& d) -> std::size_t {
    auto it = std::lower_bound(stored.begin(), stored.end(), d);
    return (it != stored.end() && *it == d) ? diff_rank[static_cast<std::size_t>(it - stored.begin())] : 0;
  };

  HomologySummary out;
  std::vector<std::vector<Vector>> reps(degrees.size());
  if (mode == HomologyMode::kRepresentatives) {
    parallel_for(degrees.size(), [&](std::size_t i) {
      const auto& d = degrees[i];
      SpanTracker span(c.size(d), c.field());
      for (const auto& b : columns_of(c.differential(d - c.step()))) span.insert(b);
      for (auto& z : kernel_basis(c.differential(d), c.field())) {
        if (span.insert(z)) reps[i].push_back(std::move(z));
      }
    });
  }
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const auto& d = degrees[i];
    std::size_t r = c.size(d) - rank_at(d) - rank_at(d - c.step());
    if (mode == HomologyMode::kRepresentatives && reps[i].size() != r) {
      throw Error(ErrorCode::kContractViolation, "representative count disagrees with rank");
    }
    if (r > 0) {
      out.ranks[d] = r;
      if (mode == HomologyMode::kRepresentatives) out.representatives[d] = std::move(reps[i]);
    }
  }
  return out;
}

long long euler_characteristic(const HomologySummary& h) {
  long long chi = 0;
  for (const auto& [d, r] : h.ranks) chi += (d[0] % 2 == 0 ? 1 : -1) * static_cast<long long>(r);
  return chi;
}

long long euler_characteristic(const GradedComplex& c, bool verify) {
  long long chi = 0;
  for (const auto& d : c.degrees()) {
    chi += (d[0] % 2 == 0 ? 1 : -1) * static_cast<long long>(c.size(d));
  }
  if (verify) {
    long long from_homology = euler_characteristic(homology(c));
    if (from_homology != chi) {
      throw Error(ErrorCode::kContractViolation,
                  "Euler characteristic from bases (" + std::to_string(chi) +
                      ") disagrees with homology (" + std::to_string(from_homology) + ")");
    }
  }
  return chi;
}

ChainMap::ChainMap(std::shared_ptr<const GradedComplex> source,
                   std::shared_ptr<const GradedComplex> target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!(source_->field() == target_->field()) || source_->step() != target_->step()) {
    throw Error(ErrorCode::kMalformedComplex, "chain map between incompatible complexes");
  }
}

ChainMap ChainMap::identity(std::shared_ptr<const GradedComplex> c) {
  ChainMap f(c, c);
  for (const auto& d : c->degrees()) f.set_block(d, SparseMatrix::identity(c->size(d)));
  return f;
}

void ChainMap::set_block(const Multidegree& d, SparseMatrix m) {
  if (m.rows() != target_->size(d) || m.cols() != source_->size(d)) {
    throw Error(ErrorCode::kMalformedComplex,
                "chain map block at " + to_string(d, source_->arity()) + " has wrong shape");
  }
  blocks_[d] = std::move(m);
}

SparseMatrix ChainMap::block(const Multidegree& d) const {
  auto it = blocks_.find(d);
  if (it != blocks_.end()) return it->second;
  return SparseMatrix(target_->size(d), source_->size(d));
}

std::vector<Multidegree> ChainMap::block_degrees() const {
  std::vector<Multidegree> out;
  for (const auto& [d, m] : blocks_) out.push_back(d);
  return out;
}

std::optional<Multidegree> ChainMap::first_noncommuting_degree() const {
  const Field& field = source_->field();
  for (const auto& d : source_->degrees()) {
    const Multidegree next = d + source_->step();
    SparseMatrix lhs = multiply(target_->differential(d), block(d), field);
    SparseMatrix rhs = multiply(block(next), source_->differential(d), field);
    if (!(lhs == rhs)) return d;
  }
  return std::nullopt;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (&g.source() != &f.target()) {
    // Accept structurally equal complexes as long as the shapes line up.
    for (const auto& d : f.target().degrees()) {
      if (f.target().size(d) != g.source().size(d)) {
        throw Error(ErrorCode::kMalformedComplex, "maps are not composable");
      }
    }
  }
  ChainMap out(f.source_ptr(), g.target_ptr());
  for (const auto& d : f.source().degrees()) {
    out.set_block(d, multiply(g.block(d), f.block(d), f.source().field()));
  }
  return out;
}

HomologyBasis::HomologyBasis(std::shared_ptr<const GradedComplex> c)
    : complex_(std::move(c)), summary_(homology(*complex_, HomologyMode::kRepresentatives)) {}

HomologyBasis::~HomologyBasis() = default;
HomologyBasis::HomologyBasis(HomologyBasis&&) noexcept = default;
HomologyBasis& HomologyBasis::operator=(HomologyBasis&&) noexcept = default;

Vector HomologyBasis::class_of(const Multidegree& d, const Vector& cycle) const {
  std::size_t r = summary_.rank(d);
  auto it = trackers_.find(d);
  if (it == trackers_.end()) {
    SpanTracker span(complex_->size(d), complex_->field());
    if (r > 0) {
      for (const auto& z : summary_.representatives.at(d)) span.insert(z);
    }
    for (const auto& b : columns_of(complex_->differential(d - complex_->step()))) span.insert(b);
    it = trackers_.emplace(d, std::move(span)).first;
  }
  auto coords = it->second.coordinates(cycle);
  if (!coords) {
    throw Error(ErrorCode::kContractViolation,
                "vector at degree " + to_string(d, complex_->arity()) + " is not a cycle");
  }
  std::vector<Entry> head;
  for (const auto& e : coords->entries()) {
    if (e.index < r) head.push_back(e);
  }
  return Vector(r, std::move(head));
}

std::map<Multidegree, SparseMatrix> induced_map_on_homology(const ChainMap& f,
                                                            const HomologyBasis& source,
                                                            const HomologyBasis& target) {
  if (auto bad = f.first_noncommuting_degree()) {
    throw Error(ErrorCode::kContractViolation,
                "not a chain map at degree " + to_string(*bad, f.source().arity()));
  }
  const Field& field = f.source().field();
  std::map<Multidegree, SparseMatrix> out;
  for (const auto& [d, reps] : source.summary().representatives) {
    std::size_t rows = target.summary().rank(d);
    SparseMatrix block = f.block(d);
    std::vector<SparseMatrix::Triplet> triplets;
    for (std::size_t j = 0; j < reps.size(); ++j) {
      Vector image = apply(block, reps[j], field);
      Vector coords = target.class_of(d, image);
      for (const auto& e : coords.entries()) {
        triplets.push_back({e.index, static_cast<Index>(j), e.value});
      }
    }
    out.emplace(d, SparseMatrix::from_triplets(rows, reps.size(), std::move(triplets)));
  }
  return out;
}

std::map<Multidegree, SparseMatrix> induced_map_on_homology(const ChainMap& f) {
  HomologyBasis source(f.source_ptr());
  HomologyBasis target(f.target_ptr());
  return induced_map_on_homology(f, source, target);
}

}  // namespace uberhom
