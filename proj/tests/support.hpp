#pragma once

// Shared helpers for the test suites: fixture loading, brute-force oracles
// built straight from the definitions, and a deterministic random-complex
// generator.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "toric/class_group.hpp"
#include "toric/cohomology.hpp"
#include "toric/fan.hpp"
#include "toric/simplicial.hpp"

namespace toric::test {

inline std::string fans_dir() {
#ifdef TORIC_FANS_DIR
  return TORIC_FANS_DIR;
#else
  return "fans";
#endif
}

inline Fan load_fan(const std::string& name) {
  const std::string path = fans_dir() + "/" + name + ".json";
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("fixture not found: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fan(ss.str());
}

inline std::vector<std::string> fixture_names() {
  return {"p2", "p1xp1", "hirzebruch1", "hirzebruch2", "p112", "p3", "p1xp1xp1"};
}

// Alexander dual straight from the definition: all sigma whose complement is
// not a face.
inline SimplicialComplex brute_alexander_dual(const SimplicialComplex& g) {
  const int n = g.vertex_count();
  std::vector<Mask> faces;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (!g.contains(complement_in(s, n))) faces.push_back(s);
  return SimplicialComplex::from_faces(n, faces);
}

// Minimal non-faces straight from the definition, by scanning all subsets.
inline std::vector<Mask> brute_minimal_nonfaces(const SimplicialComplex& g) {
  const int n = g.vertex_count();
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (g.contains(s)) continue;
    bool minimal = true;
    for (int v : mask_to_indices(s))
      if (!g.contains(s & ~mask_bit(v))) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

// Lambda complex straight from the definition: faces are the subcollections
// of the generators inside I whose union is not all of I.
inline SimplicialComplex brute_lambda(Mask support, const SRSet& sr) {
  std::vector<Mask> inside;
  for (Mask g : sr.generators)
    if (is_subset(g, support)) inside.push_back(g);
  const int m = static_cast<int>(inside.size());
  std::vector<Mask> faces;
  for (Mask k = 0; k < (Mask{1} << m); ++k) {
    Mask u = 0;
    for (int b : mask_to_indices(k)) u |= inside[static_cast<std::size_t>(b)];
    if (u != support) faces.push_back(k);
  }
  return SimplicialComplex::from_faces(m, faces);
}

inline SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices = 7) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> nf(0, 8);
  const int k = nf(rng);
  std::uniform_int_distribution<Mask> face(0, full_mask(n));
  std::vector<Mask> faces;
  for (int i = 0; i < k; ++i) faces.push_back(face(rng));
  return SimplicialComplex::from_faces(n, faces);
}

inline Integer binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

inline Mask neg_mask(std::span<const long long> p) {
  Mask m = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 0) m |= mask_bit(static_cast<int>(i));
  return m;
}

// A complete simplicial surface fan with Cl = Z^2 + Z/2 (rays on the
// diagonals), used wherever torsion coverage is needed.
inline Fan torsion_fan() {
  return parse_fan(
      R"({"dim": 2, "rays": [[1,1],[1,-1],[-1,1],[-1,-1]],)"
      R"( "max_cones": [[0,1],[0,2],[2,3],[1,3]]})");
}

}  // namespace toric::test
