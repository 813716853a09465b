#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "toric/exact_linalg.hpp"
#include "toric/mask.hpp"

namespace toric {

// One inequality a · x <= b.
struct IneqRow {
  std::vector<Integer> a;
  Integer b;
};

// Conjunction of integer linear inequalities over x in Z^nvars.
struct IneqSystem {
  std::size_t nvars = 0;
  std::vector<IneqRow> rows;
};

enum class RegionStatus { kEmpty, kBounded, kUnbounded };

struct CountResult {
  RegionStatus status = RegionStatus::kEmpty;
  Integer count;  // valid when status == kBounded
};

struct EnumerateResult {
  RegionStatus status = RegionStatus::kEmpty;
  std::vector<std::vector<Integer>> points;  // valid when status == kBounded
};

// Exact Fourier-Motzkin elimination chain over the rationals (carried in
// integer arithmetic). Feasibility and boundedness are decided exactly; the
// lattice points of a bounded region are enumerated level by level.
class FourierMotzkinChain {
 public:
  explicit FourierMotzkinChain(const IneqSystem& sys, std::size_t max_rows = 200000);

  bool feasible() const { return !infeasible_; }
  // Meaningful only when feasible(): whether the real solution set is bounded.
  bool bounded() const;

  Integer count() const;
  void enumerate(const std::function<void(const std::vector<Integer>&)>& emit) const;

 private:
  template <typename Visit>
  void walk(Visit&& visit) const;

  std::size_t nvars_ = 0;
  bool infeasible_ = false;
  // levels_[k] = projected system over the first k variables, k in [0, nvars]
  std::vector<std::vector<IneqRow>> levels_;
};

CountResult count_lattice_points(const IneqSystem& sys);
EnumerateResult enumerate_lattice_points(const IneqSystem& sys,
                                         std::size_t max_points = 5000000);

// Axis-aligned integer box, one [lo, hi] range per coordinate.
struct Box {
  std::vector<std::pair<long long, long long>> ranges;

  std::size_t size() const { return ranges.size(); }
  bool contains(std::span<const Integer> p) const;
  // Calls f(p) for every integer point of the box.
  void for_each_point(const std::function<void(const std::vector<long long>&)>& f) const;
};

// Inequalities over m in Z^dim describing
//   { m | Neg(pstar + R m) = I }
// for the ray matrix R: coordinates in I are <= -1, the rest are >= 0.
// When box is non-null, the constraints lo <= pstar + R m <= hi are added.
IneqSystem sign_pattern_system(const std::vector<std::vector<long long>>& rays,
                               std::span<const Integer> pstar, Mask negative_set,
                               const Box* box = nullptr);

}  // namespace toric
