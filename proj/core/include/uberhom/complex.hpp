#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uberhom/field.hpp"
#include "uberhom/linalg.hpp"

namespace uberhom {

// Up to three integer gradings; unused trailing components stay 0.
using Multidegree = std::array<int, 3>;

Multidegree operator+(const Multidegree& a, const Multidegree& b);
Multidegree operator-(const Multidegree& a, const Multidegree& b);
std::string to_string(const Multidegree& d, std::size_t arity);

// A chain complex with a labelled basis in each multidegree and a differential
// C_d -> C_{d+step}. The first component of the step is +1 or -1; the other
// components are carried along and usually 0.
class GradedComplex {
 public:
  GradedComplex(Field field, std::size_t arity, Multidegree step);

  const Field& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  const Multidegree& step() const noexcept { return step_; }

  // Returns the index of the first appended generator.
  std::size_t add_generators(const Multidegree& d, std::vector<std::string> labels);
  std::size_t add_generator(const Multidegree& d, std::string label);
  // Matrix has size(d + step) rows and size(d) columns; checked by validate().
  void set_differential(const Multidegree& d, SparseMatrix m);

  // Multidegrees carrying at least one generator, in increasing order.
  std::vector<Multidegree> degrees() const;
  std::size_t size(const Multidegree& d) const;
  std::size_t total_size() const;
  const std::vector<std::string>& basis(const Multidegree& d) const;
  std::optional<std::size_t> find(const Multidegree& d, const std::string& label) const;
  // Stored matrix, or a zero matrix of the right shape.
  SparseMatrix differential(const Multidegree& d) const;
  const SparseMatrix* stored_differential(const Multidegree& d) const;
  std::vector<Multidegree> differential_degrees() const;

 private:
  Field field_;
  std::size_t arity_;
  Multidegree step_;
  std::map<Multidegree, std::vector<std::string>> basis_;
  std::map<Multidegree, SparseMatrix> diff_;
};

struct Validation {
  bool ok = true;
  std::optional<Multidegree> failing_degree;
  std::string message;
};

// Checks d∘d = 0 degree by degree. Shape mismatches throw kMalformedComplex.
Validation validate(const GradedComplex& c);

struct HomologySummary {
  std::map<Multidegree, std::size_t> ranks;  // nonzero ranks only
  // Cycles whose classes form a basis, present in representative mode.
  std::map<Multidegree, std::vector<Vector>> representatives;

  std::size_t rank(const Multidegree& d) const;
  std::size_t total_rank() const;
};

enum class HomologyMode { kRanksOnly, kRepresentatives };

// Throws kMalformedComplex when validate() fails.
HomologySummary homology(const GradedComplex& c, HomologyMode mode = HomologyMode::kRanksOnly);

// Sum over degrees of (-1)^(first component) * size. With verify set, also
// compares against the alternating sum of homology ranks and throws
// kContractViolation on disagreement.
long long euler_characteristic(const GradedComplex& c, bool verify = false);
long long euler_characteristic(const HomologySummary& h);

// Degree-preserving map between two complexes over the same field.
class ChainMap {
 public:
  ChainMap(std::shared_ptr<const GradedComplex> source,
           std::shared_ptr<const GradedComplex> target);

  static ChainMap identity(std::shared_ptr<const GradedComplex> c);

  const GradedComplex& source() const noexcept { return *source_; }
  const GradedComplex& target() const noexcept { return *target_; }
  std::shared_ptr<const GradedComplex> source_ptr() const noexcept { return source_; }
  std::shared_ptr<const GradedComplex> target_ptr() const noexcept { return target_; }

  void set_block(const Multidegree& d, SparseMatrix m);
  SparseMatrix block(const Multidegree& d) const;
  std::vector<Multidegree> block_degrees() const;

  // First degree where diff_target ∘ f != f ∘ diff_source, if any.
  std::optional<Multidegree> first_noncommuting_degree() const;
  bool commutes() const { return !first_noncommuting_degree(); }

 private:
  std::shared_ptr<const GradedComplex> source_;
  std::shared_ptr<const GradedComplex> target_;
  std::map<Multidegree, SparseMatrix> blocks_;
};

// g ∘ f
ChainMap compose(const ChainMap& g, const ChainMap& f);

// Homology with representatives plus the machinery to express any cycle in
// that basis modulo boundaries.
class HomologyBasis {
 public:
  explicit HomologyBasis(std::shared_ptr<const GradedComplex> c);
  ~HomologyBasis();
  HomologyBasis(HomologyBasis&&) noexcept;
  HomologyBasis& operator=(HomologyBasis&&) noexcept;

  const GradedComplex& complex() const noexcept { return *complex_; }
  const HomologySummary& summary() const noexcept { return summary_; }
  // Coordinates of [cycle] against summary().representatives at d.
  // Throws kContractViolation when the vector is not a cycle.
  Vector class_of(const Multidegree& d, const Vector& cycle) const;

 private:
  std::shared_ptr<const GradedComplex> complex_;
  HomologySummary summary_;
  mutable std::map<Multidegree, SpanTracker> trackers_;
};

// Matrix of H(f) per degree, columns indexed by the source representatives and
// rows by the target representatives. Throws kContractViolation if f is not a
// chain map.
std::map<Multidegree, SparseMatrix> induced_map_on_homology(const ChainMap& f);
std::map<Multidegree, SparseMatrix> induced_map_on_homology(const ChainMap& f,
                                                            const HomologyBasis& source,
                                                            const HomologyBasis& target);

}  // namespace uberhom
