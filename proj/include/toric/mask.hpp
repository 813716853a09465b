#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace toric {

// Vertex subsets (rays, simplices, sign patterns) are fixed-width bit masks.
// Everything in this library lives on at most 64 vertices.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask mask_bit(int v) { return Mask{1} << v; }

constexpr Mask full_mask(int n) {
  return n >= kMaxVertices ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr bool mask_contains(Mask m, int v) { return (m >> v) & Mask{1}; }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr Mask complement_in(Mask m, int n) { return full_mask(n) & ~m; }

inline int mask_size(Mask m) { return std::popcount(m); }

std::vector<int> mask_to_indices(Mask m);

Mask mask_from_indices(std::span<const int> indices);

// Canonical order used everywhere masks are listed: cardinality, then value.
inline bool mask_less(Mask a, Mask b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

// Calls f(mask) for every size-k subset of {0,...,n-1}.
template <typename F>
void for_each_subset_of_size(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Mask m = 0;
    for (int v : idx) m |= mask_bit(v);
    f(m);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace toric
