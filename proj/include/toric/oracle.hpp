#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "toric/class_group.hpp"
#include "toric/cohomology.hpp"
#include "toric/fan.hpp"
#include "toric/lattice_points.hpp"
#include "toric/simplicial.hpp"

namespace toric {

// Ground truth computed from restrictions of the fan complex alone. This
// path deliberately knows nothing about Stanley-Reisner generators, union
// closures, or lambda complexes, so agreement with CohomologyEngine is
// evidence rather than tautology.
class OracleContext {
 public:
  struct Options {
    // cohomology() scans all 2^n sign patterns; refuse unreasonable n.
    int max_scan_vertices;
    Options() : max_scan_vertices(16) {}
  };

  explicit OracleContext(Fan fan, Options options = Options());

  const Fan& fan() const { return fan_; }

  // dim H~_{d-1-i}(P restricted to the complement of I), for sheaf degree
  // i >= 1. Depends only on the sign pattern I, never on magnitudes.
  std::int64_t graded_dim(Mask negative_set, int i) const;

  // Exhaustive h-vector for one divisor: h^0 by direct count of nonnegative
  // exponent vectors of the right class inside the box, higher degrees by
  // summing graded_dim over the box. The box must contain the full support
  // of every contributing sign pattern; safe bounds are recomputed here with
  // the same Fourier-Motzkin machinery and violations throw BoxTooSmallError.
  std::vector<std::int64_t> cohomology(std::span<const long long> divisor,
                                       const Box& box) const;

 private:
  const HomologyDims& restriction_dims(Mask allowed) const;
  std::vector<Mask> contributing_patterns() const;

  Fan fan_;
  Options options_;
  SimplicialComplex complex_;
  ClassGroup group_;
  mutable std::map<Mask, HomologyDims> cache_;
};

struct OracleMismatch {
  std::string kind;  // "graded" or "bundle"
  std::vector<long long> p;
  int degree = 0;
  std::int64_t algorithm_value = 0;
  std::int64_t oracle_value = 0;
};

struct OracleReport {
  std::string fan_id;
  Box box;
  std::vector<OracleMismatch> mismatches;  // capped; see total_mismatches
  std::int64_t total_mismatches = 0;
  std::int64_t match_count = 0;
  std::int64_t classes_compared = 0;
  std::int64_t classes_skipped = 0;  // support sticks out of the box
  std::vector<std::string> messages;

  bool ok() const { return total_mismatches == 0; }
};

// Default scan box: [-(d+2), d+1] per coordinate.
Box default_box(const Fan& fan);

struct VerifyOptions {
  std::size_t max_recorded_mismatches = 200;
};

// Compares the engine against the oracle over a box: graded dimensions for
// every p in the box and 1 <= i <= dim, and full h-vectors for every divisor
// class realized in the box whose contributing support fits inside it.
// Mismatches are data, not failures.
OracleReport verify(const CohomologyEngine& engine, const Box& box,
                    std::string fan_id = {}, const VerifyOptions& options = {});

}  // namespace toric
