#include "toric/simplicial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "toric/exact_linalg.hpp"

namespace toric {

std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m) {
    int v = std::countr_zero(m);
    out.push_back(v);
    m &= m - 1;
  }
  return out;
}

Mask mask_from_indices(std::span<const int> indices) {
  Mask m = 0;
  for (int v : indices) {
    if (v < 0 || v >= kMaxVertices)
      throw std::invalid_argument("mask_from_indices: vertex out of range");
    m |= mask_bit(v);
  }
  return m;
}

void HomologyDims::set(int degree, std::int64_t dim) {
  if (degree < -1)
    throw std::invalid_argument("HomologyDims: degree must be >= -1");
  const std::size_t idx = static_cast<std::size_t>(degree + 1);
  if (idx >= dims_.size()) dims_.resize(idx + 1, 0);
  dims_[idx] = dim;
}

std::int64_t HomologyDims::at(int degree) const {
  if (degree < -1) return 0;
  const std::size_t idx = static_cast<std::size_t>(degree + 1);
  return idx < dims_.size() ? dims_[idx] : 0;
}

bool HomologyDims::all_zero() const {
  return std::all_of(dims_.begin(), dims_.end(),
                     [](std::int64_t d) { return d == 0; });
}

std::vector<std::pair<int, std::int64_t>> HomologyDims::nonzero() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t i = 0; i < dims_.size(); ++i)
    if (dims_[i] != 0) out.emplace_back(static_cast<int>(i) - 1, dims_[i]);
  return out;
}

bool operator==(const HomologyDims& a, const HomologyDims& b) {
  const std::size_t n = std::max(a.dims_.size(), b.dims_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t da = i < a.dims_.size() ? a.dims_[i] : 0;
    const std::int64_t db = i < b.dims_.size() ? b.dims_[i] : 0;
    if (da != db) return false;
  }
  return true;
}

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("SimplicialComplex: vertex count must be in [0, 64]");
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(int n_vertices) {
  check_vertex_count(n_vertices);
  SimplicialComplex g;
  g.n_ = n_vertices;
  return g;
}

SimplicialComplex SimplicialComplex::irrelevant_complex(int n_vertices) {
  check_vertex_count(n_vertices);
  SimplicialComplex g;
  g.n_ = n_vertices;
  g.maximal_ = {Mask{0}};
  return g;
}

SimplicialComplex SimplicialComplex::full_simplex(int n_vertices) {
  check_vertex_count(n_vertices);
  SimplicialComplex g;
  g.n_ = n_vertices;
  g.maximal_ = {full_mask(n_vertices)};
  return g;
}

SimplicialComplex SimplicialComplex::from_faces(int n_vertices,
                                                std::span<const Mask> faces) {
  check_vertex_count(n_vertices);
  SimplicialComplex g;
  g.n_ = n_vertices;
  std::vector<Mask> work(faces.begin(), faces.end());
  for (Mask f : work)
    if (!is_subset(f, full_mask(n_vertices)))
      throw std::invalid_argument("from_faces: face outside vertex set");
  std::sort(work.begin(), work.end(), [](Mask a, Mask b) {
    return std::popcount(a) > std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b);
  });
  work.erase(std::unique(work.begin(), work.end()), work.end());
  for (Mask f : work) {
    bool covered = std::any_of(g.maximal_.begin(), g.maximal_.end(),
                               [f](Mask kept) { return is_subset(f, kept); });
    if (!covered) g.maximal_.push_back(f);
  }
  std::sort(g.maximal_.begin(), g.maximal_.end(), mask_less);
  return g;
}

bool SimplicialComplex::contains(Mask face) const {
  return std::any_of(maximal_.begin(), maximal_.end(),
                     [face](Mask f) { return is_subset(face, f); });
}

int SimplicialComplex::dimension() const {
  if (maximal_.empty()) return -2;
  return std::popcount(maximal_.back()) - 1;
}

std::vector<std::vector<Mask>> SimplicialComplex::faces_by_cardinality() const {
  if (is_void()) return {};
  std::unordered_set<Mask> all;
  for (Mask f : maximal_) {
    Mask s = f;
    while (true) {
      all.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  const int top = dimension() + 1;  // largest cardinality
  std::vector<std::vector<Mask>> levels(static_cast<std::size_t>(top) + 1);
  for (Mask f : all) levels[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& level : levels) std::sort(level.begin(), level.end());
  return levels;
}

SimplicialComplex restriction(const SimplicialComplex& g, Mask allowed) {
  std::vector<Mask> cut;
  cut.reserve(g.maximal_faces().size());
  for (Mask f : g.maximal_faces()) cut.push_back(f & allowed);
  return SimplicialComplex::from_faces(g.vertex_count(), cut);
}

SimplicialComplex link(const SimplicialComplex& g, Mask face) {
  if (!g.contains(face))
    throw std::invalid_argument("link: argument is not a face of the complex");
  std::vector<Mask> out;
  for (Mask f : g.maximal_faces())
    if (is_subset(face, f)) out.push_back(f & ~face);
  return SimplicialComplex::from_faces(g.vertex_count(), out);
}

std::vector<Mask> minimal_nonfaces(const SimplicialComplex& g) {
  const int n = g.vertex_count();
  // Every proper subset of a minimal non-face is a face, so its cardinality
  // is at most dim + 2.
  const int max_card = std::min(n, g.dimension() + 2);
  std::vector<Mask> out;
  for (int k = 0; k <= std::max(max_card, 0); ++k) {
    for_each_subset_of_size(n, k, [&](Mask s) {
      if (g.contains(s)) return;
      Mask rest = s;
      while (rest) {
        const Mask sub = s & ~(rest & (~rest + 1));  // drop lowest set bit
        if (!g.contains(sub)) return;
        rest &= rest - 1;
      }
      out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& g) {
  const int n = g.vertex_count();
  std::vector<Mask> maximal;
  for (Mask nf : minimal_nonfaces(g)) maximal.push_back(complement_in(nf, n));
  return SimplicialComplex::from_faces(n, maximal);
}

SimplicialComplex nerve(std::span<const Mask> cover) {
  if (cover.empty()) throw std::invalid_argument("nerve: cover must be nonempty");
  if (cover.size() > static_cast<std::size_t>(kMaxVertices))
    throw std::invalid_argument("nerve: cover has more than 64 members");
  const int m = static_cast<int>(cover.size());
  Mask universe = 0;
  for (Mask c : cover) universe |= c;
  std::vector<Mask> witnesses;
  for (int v : mask_to_indices(universe)) {
    Mask k = 0;
    for (int i = 0; i < m; ++i)
      if (mask_contains(cover[static_cast<std::size_t>(i)], v)) k |= mask_bit(i);
    witnesses.push_back(k);
  }
  if (witnesses.empty()) return SimplicialComplex::irrelevant_complex(m);
  return SimplicialComplex::from_faces(m, witnesses);
}

SimplicialComplex relabel_onto(const SimplicialComplex& g, Mask subset) {
  for (Mask f : g.maximal_faces())
    if (!is_subset(f, subset))
      throw std::invalid_argument("relabel_onto: complex has faces outside the subset");
  const std::vector<int> verts = mask_to_indices(subset);
  std::vector<int> rank(static_cast<std::size_t>(kMaxVertices), -1);
  for (std::size_t i = 0; i < verts.size(); ++i)
    rank[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  std::vector<Mask> mapped;
  for (Mask f : g.maximal_faces()) {
    Mask out = 0;
    for (int v : mask_to_indices(f)) out |= mask_bit(rank[static_cast<std::size_t>(v)]);
    mapped.push_back(out);
  }
  return SimplicialComplex::from_faces(static_cast<int>(verts.size()), mapped);
}

HomologyDims reduced_homology_dims(const SimplicialComplex& g) {
  HomologyDims h;
  if (g.is_void()) return h;
  const auto levels = g.faces_by_cardinality();
  const int top = static_cast<int>(levels.size()) - 1;  // max cardinality

  // boundary_rank[q] = rank of ∂_q : C_q -> C_{q-1} (C_q has the card-(q+1)
  // faces as basis); defined for q in [0, top-1].
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top) + 1, 0);
  for (int q = 0; q <= top - 1; ++q) {
    const auto& lower = levels[static_cast<std::size_t>(q)];
    const auto& upper = levels[static_cast<std::size_t>(q + 1)];
    IntegerMatrix bd(lower.size(), upper.size());
    for (std::size_t col = 0; col < upper.size(); ++col) {
      const Mask f = upper[col];
      int t = 0;
      for (int v : mask_to_indices(f)) {
        const Mask sub = f & ~mask_bit(v);
        const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
        bd.at(static_cast<std::size_t>(it - lower.begin()), col) = (t % 2 == 0) ? 1 : -1;
        ++t;
      }
    }
    boundary_rank[static_cast<std::size_t>(q)] = rank(bd);
  }

  for (int q = -1; q <= top - 1; ++q) {
    const std::int64_t faces =
        static_cast<std::int64_t>(levels[static_cast<std::size_t>(q + 1)].size());
    const std::int64_t r_out =
        q >= 0 ? static_cast<std::int64_t>(boundary_rank[static_cast<std::size_t>(q)]) : 0;
    const std::int64_t r_in =
        q + 1 <= top - 1
            ? static_cast<std::int64_t>(boundary_rank[static_cast<std::size_t>(q + 1)])
            : 0;
    const std::int64_t dim = faces - r_out - r_in;
    if (dim != 0) h.set(q, dim);
  }

  // alternating sum must reproduce the reduced Euler characteristic
  std::int64_t euler_faces = 0, euler_homology = 0;
  for (int q = -1; q <= top - 1; ++q) {
    const std::int64_t sign = (q % 2 == 0) ? 1 : -1;  // q odd (incl. -1) -> -1
    euler_faces +=
        sign * static_cast<std::int64_t>(levels[static_cast<std::size_t>(q + 1)].size());
    euler_homology += sign * h.at(q);
  }
  if (euler_faces != euler_homology)
    throw std::logic_error("reduced_homology_dims: Euler characteristic mismatch");
  return h;
}

}  // namespace toric
