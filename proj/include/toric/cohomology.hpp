#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "toric/class_group.hpp"
#include "toric/fan.hpp"
#include "toric/lattice_points.hpp"
#include "toric/simplicial.hpp"

namespace toric {

// Minimal non-faces of the fan complex: the subsets of the ray set that span
// no cone while all their proper subsets do. Sorted by (cardinality, value);
// this order fixes the vertex numbering of every lambda complex.
struct SRSet {
  std::vector<Mask> generators;
};

SRSet stanley_reisner(const SimplicialComplex& fan_complex);

// All distinct unions of nonempty subcollections of generators (the empty
// union is excluded). Fixpoint closure with deduplication; throws
// CapExceededError past `cap` sets.
std::vector<Mask> enumerate_usr(const SRSet& sr, std::size_t cap = std::size_t{1} << 20);

// The complex on the generators contained in I whose faces are the
// subcollections whose union is strictly inside I. Requires I to be a union
// of generators.
SimplicialComplex lambda_complex(Mask support, const SRSet& sr);

// Per-support cache: generators inside I, the lambda complex, its homology
// dimensions, and whether the complement is itself a union of generators.
struct SupportInfo {
  Mask support = 0;
  std::vector<int> generator_indices;
  SimplicialComplex lambda;
  HomologyDims homology;
  bool complement_in_usr = false;
};

class SupportTable {
 public:
  SupportTable() = default;
  SupportTable(const SRSet& sr, std::span<const Mask> usr, int n_vertices);

  const SupportInfo* find(Mask support) const;
  const std::vector<Mask>& keys() const { return keys_; }

 private:
  std::vector<Mask> keys_;
  std::unordered_map<Mask, SupportInfo> entries_;
};

// One contribution to a cohomology dimension, kept for auditability.
struct CohomologyTerm {
  int degree = 0;
  Mask support = 0;
  std::int64_t multiplicity = 0;
  std::int64_t homology_dim = 0;
};

struct CohomologyVector {
  std::vector<std::int64_t> h;  // h^0, ..., h^d
  std::vector<long long> divisor;
  ClassElement divisor_class;
  std::vector<CohomologyTerm> terms;  // filled when requested
};

// The line-bundle cohomology engine for one fan. Construction validates the
// fan, builds the face complex, the Stanley-Reisner generators, the union
// closure and the homology cache; all of that is shared across divisor
// queries, which is where the speed of the method comes from.
class CohomologyEngine {
 public:
  struct Options {
    std::size_t usr_cap;
    Options() : usr_cap(std::size_t{1} << 20) {}
  };

  explicit CohomologyEngine(Fan fan, Options options = Options());
  // Test hook: run the pipeline on a hand-picked generator set.
  CohomologyEngine(Fan fan, SRSet sr, Options options = Options());

  const Fan& fan() const { return fan_; }
  const SimplicialComplex& fan_complex() const { return complex_; }
  const SRSet& sr() const { return sr_; }
  const std::vector<Mask>& usr() const { return usr_; }
  const SupportTable& table() const { return table_; }
  const ClassGroup& class_group() const { return group_; }

  // Theorem-side graded dimension for sheaf degree i >= 1: zero off the union
  // closure, zero under the duality filter when i != dim, and the cached
  // dim H~_{|I|-i-2}(Lambda_I) otherwise.
  std::int64_t graded_dim(Mask support, int i) const;

  // #{ p | Neg(p) = I, [p] = class }. Throws UnboundedError when the region
  // is not a polytope (incomplete or degenerate fans).
  Integer multiplicity(Mask support, const ClassElement& cls) const;
  Integer multiplicity(Mask support, std::span<const long long> divisor) const;
  // Same count restricted to an axis box in exponent space.
  Integer multiplicity_in_box(Mask support, const ClassElement& cls,
                              const Box& box) const;

  CohomologyVector cohomology(std::span<const long long> divisor,
                              bool with_terms = false) const;
  CohomologyVector cohomology_of_class(const ClassElement& cls,
                                       bool with_terms = false) const;

 private:
  void build();
  CohomologyVector compute(const ClassElement& cls, std::vector<long long> divisor,
                           bool with_terms) const;

  Fan fan_;
  Options options_;
  SimplicialComplex complex_;
  SRSet sr_;
  std::vector<Mask> usr_;
  SupportTable table_;
  ClassGroup group_;
};

std::int64_t to_int64_checked(const Integer& x);

}  // namespace toric
