#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toric/exact_linalg.hpp"
#include "toric/mask.hpp"
#include "toric/simplicial.hpp"

namespace toric {

// A simplicial complete fan: primitive integer rays plus the ray sets of the
// maximal cones. Ray indexing is 0-based and order-preserving from the input
// document; every vertex subset elsewhere in the library refers to these
// indices.
struct Fan {
  int dim = 0;
  std::vector<std::vector<long long>> rays;
  std::vector<Mask> max_cones;

  int ray_count() const { return static_cast<int>(rays.size()); }

  friend bool operator==(const Fan& a, const Fan& b) = default;
};

struct FanDiagnostics {
  bool is_simplicial = false;
  bool spans = false;
  bool ridge_counts_ok = false;
  std::vector<std::string> messages;

  bool ok() const { return is_simplicial && spans && ridge_counts_ok; }
};

// Parses the JSON fan document
//   {"dim": d, "rays": [[...], ...], "max_cones": [[...], ...]}
// (integers only). Throws ParseError on malformed documents, rays of the
// wrong length, cone indices out of range, duplicate rays, and non-primitive
// rays (inputs must already be primitive; nothing is silently rescaled).
Fan parse_fan(std::string_view text);

// Canonical JSON for the same format; parse_fan(serialize_fan(f)) == f.
std::string serialize_fan(const Fan& fan);

// Checks simpliciality (each maximal cone has exactly `dim` linearly
// independent rays), that the rays span, and the completeness proxy: every
// ridge ((dim-1)-subset of a maximal cone) lies in exactly two maximal cones.
// Projectivity is not decided; findings are reported, never thrown.
FanDiagnostics validate(const Fan& fan);

// The face complex P = { σ(1) | σ ∈ Δ } on the ray set: the complex whose
// maximal faces are the maximal cones' ray sets. Requires a simplicial fan.
SimplicialComplex fan_complex(const Fan& fan);

// n x d matrix whose row ρ is the ray vector u_ρ.
IntegerMatrix ray_matrix(const Fan& fan);

}  // namespace toric
