#pragma once

#include <span>
#include <string>
#include <vector>

#include "toric/exact_linalg.hpp"
#include "toric/fan.hpp"

namespace toric {

// A divisor class in canonical coordinates: the free part lives in
// Z^{n - dim}, the torsion part holds residues in [0, invariant) aligned with
// ClassGroup::torsion_invariants().
struct ClassElement {
  std::vector<Integer> free_part;
  std::vector<Integer> torsion_part;

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const ClassElement& a, const ClassElement& b) = default;
  friend bool operator<(const ClassElement& a, const ClassElement& b);
};

// Cl(X) as the cokernel of the ray matrix, presented by one Smith normal
// form fixed at construction. All class comparisons go through the canonical
// coordinates this presentation induces. Immutable after construction.
class ClassGroup {
 public:
  explicit ClassGroup(const Fan& fan);

  int ray_count() const { return n_; }
  int free_rank() const { return n_ - d_; }
  const std::vector<Integer>& torsion_invariants() const { return torsion_invariants_; }

  // Image of a coefficient vector under the degree map Z^n -> Cl(X).
  ClassElement divisor_class(std::span<const Integer> a) const;
  ClassElement divisor_class(std::span<const long long> a) const;

  // Some p with divisor_class(p) = c; the degree map is surjective onto the
  // presented group, so this never fails.
  std::vector<Integer> particular_preimage(const ClassElement& c) const;

 private:
  int n_ = 0;
  int d_ = 0;
  IntegerMatrix u_;     // from U * A * V = D
  IntegerMatrix uinv_;
  std::vector<Integer> diag_;          // d_1, ..., d_dim (all nonzero)
  std::vector<int> torsion_rows_;      // rows k with d_k > 1
  std::vector<Integer> torsion_invariants_;
};

// The d columns of the ray matrix, i.e. the images of a basis of the dual
// lattice M under n |-> (<n, u_ρ>)_ρ. They generate all degree-0 shifts of
// exponent vectors.
std::vector<std::vector<Integer>> kernel_basis(const Fan& fan);

}  // namespace toric
