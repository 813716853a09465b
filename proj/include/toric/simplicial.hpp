#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "toric/mask.hpp"

namespace toric {

// Dimensions of reduced simplicial homology over the rationals. Degree -1 is
// first-class: it is nonzero (and equal to 1) exactly for the complex {∅}.
class HomologyDims {
 public:
  HomologyDims() = default;

  void set(int degree, std::int64_t dim);
  std::int64_t at(int degree) const;

  bool all_zero() const;
  // Sorted list of (degree, dim) with dim != 0.
  std::vector<std::pair<int, std::int64_t>> nonzero() const;

  friend bool operator==(const HomologyDims& a, const HomologyDims& b);

 private:
  std::vector<std::int64_t> dims_;  // dims_[j + 1] = dim in degree j
};

// Abstract simplicial complex on the vertex set {0,...,n-1}, held by its
// maximal faces (an antichain in canonical (cardinality, value) order).
//
// Two degenerate values are distinct on purpose:
//   - the void complex has no faces at all (empty maximal-face list);
//   - the irrelevant complex {∅} has the empty set as its only face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex void_complex(int n_vertices);
  static SimplicialComplex irrelevant_complex(int n_vertices);
  static SimplicialComplex full_simplex(int n_vertices);
  // Downward closure of the given faces; the list need not be an antichain.
  static SimplicialComplex from_faces(int n_vertices, std::span<const Mask> faces);

  int vertex_count() const { return n_; }
  const std::vector<Mask>& maximal_faces() const { return maximal_; }

  bool is_void() const { return maximal_.empty(); }
  bool is_irrelevant() const { return maximal_.size() == 1 && maximal_[0] == 0; }

  bool contains(Mask face) const;

  // -1 for {∅}, -2 for the void complex.
  int dimension() const;

  // faces grouped by cardinality: result[k] = sorted masks with k bits.
  // Empty (outer) vector for the void complex.
  std::vector<std::vector<Mask>> faces_by_cardinality() const;

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) = default;

 private:
  int n_ = 0;
  std::vector<Mask> maximal_;
};

// Subcomplex of all faces contained in `allowed`; vertex set unchanged.
SimplicialComplex restriction(const SimplicialComplex& g, Mask allowed);

// link_Γ σ = { τ | τ ∪ σ ∈ Γ, τ ∩ σ = ∅ }. Throws if σ is not a face.
// The result is carried on the same ambient vertex set; the vertices of σ
// simply occur in no face.
SimplicialComplex link(const SimplicialComplex& g, Mask face);

// Alexander dual Γ* = { σ ⊆ V | complement(σ) ∉ Γ }, on the same vertex set.
SimplicialComplex alexander_dual(const SimplicialComplex& g);

// Nerve of a cover: complex on {0,...,m-1}, K a face iff ∩_{k∈K} cover[k] ≠ ∅.
SimplicialComplex nerve(std::span<const Mask> cover);

// Reindexes a complex whose faces all lie inside `subset` onto the vertex set
// {0,...,|subset|-1} (order-preserving).
SimplicialComplex relabel_onto(const SimplicialComplex& g, Mask subset);

// Minimal non-faces, sorted by (cardinality, value). The void complex has
// the single minimal non-face ∅; the full simplex has none.
std::vector<Mask> minimal_nonfaces(const SimplicialComplex& g);

// Exact reduced homology dimensions over the rationals, computed from the
// boundary matrices of the augmented chain complex (the empty face generates
// degree -1). The alternating sum is checked against the reduced Euler
// characteristic on every call.
HomologyDims reduced_homology_dims(const SimplicialComplex& g);

}  // namespace toric
