#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "toric/errors.hpp"

namespace toric {

namespace {

using nlohmann::json;

long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

const json& require_key(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("fan document: missing key \"") + key + "\"");
  return *it;
}

long long require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw ParseError("fan document: " + where + " must be an integer");
  return j.get<long long>();
}

}  // namespace

Fan parse_fan(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("fan document: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("fan document: top level must be an object");

  Fan fan;
  fan.dim = static_cast<int>(require_int(require_key(doc, "dim"), "\"dim\""));
  if (fan.dim < 1) throw ParseError("fan document: \"dim\" must be positive");

  const json& rays = require_key(doc, "rays");
  if (!rays.is_array() || rays.empty())
    throw ParseError("fan document: \"rays\" must be a nonempty array");
  if (rays.size() > static_cast<std::size_t>(kMaxVertices))
    throw ParseError("fan document: at most 64 rays are supported");
  for (std::size_t r = 0; r < rays.size(); ++r) {
    const json& ray = rays[r];
    if (!ray.is_array() || ray.size() != static_cast<std::size_t>(fan.dim))
      throw ParseError("fan document: ray " + std::to_string(r) +
                       " must have length " + std::to_string(fan.dim));
    std::vector<long long> v;
    v.reserve(ray.size());
    for (const json& e : ray)
      v.push_back(require_int(e, "ray " + std::to_string(r) + " entry"));
    long long g = 0;
    for (long long e : v) g = gcd_ll(g, e);
    if (g == 0)
      throw ParseError("fan document: ray " + std::to_string(r) + " is zero");
    if (g != 1)
      throw ParseError("fan document: non-primitive ray at index " +
                       std::to_string(r) + " (gcd " + std::to_string(g) + ")");
    fan.rays.push_back(std::move(v));
  }
  for (std::size_t a = 0; a < fan.rays.size(); ++a)
    for (std::size_t b = a + 1; b < fan.rays.size(); ++b)
      if (fan.rays[a] == fan.rays[b])
        throw ParseError("fan document: duplicate rays at indices " +
                         std::to_string(a) + " and " + std::to_string(b));

  const json& cones = require_key(doc, "max_cones");
  if (!cones.is_array())
    throw ParseError("fan document: \"max_cones\" must be an array");
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const json& cone = cones[c];
    if (!cone.is_array())
      throw ParseError("fan document: cone " + std::to_string(c) +
                       " must be an array of ray indices");
    Mask m = 0;
    for (const json& e : cone) {
      const long long idx = require_int(e, "cone " + std::to_string(c) + " entry");
      if (idx < 0 || idx >= fan.ray_count())
        throw ParseError("fan document: cone " + std::to_string(c) +
                         ": ray index " + std::to_string(idx) + " out of range");
      if (mask_contains(m, static_cast<int>(idx)))
        throw ParseError("fan document: cone " + std::to_string(c) +
                         ": duplicate ray index " + std::to_string(idx));
      m |= mask_bit(static_cast<int>(idx));
    }
    fan.max_cones.push_back(m);
  }
  return fan;
}

std::string serialize_fan(const Fan& fan) {
  json doc;
  doc["dim"] = fan.dim;
  doc["rays"] = fan.rays;
  json cones = json::array();
  for (Mask c : fan.max_cones) cones.push_back(mask_to_indices(c));
  doc["max_cones"] = std::move(cones);
  return doc.dump();
}

IntegerMatrix ray_matrix(const Fan& fan) {
  IntegerMatrix a(static_cast<std::size_t>(fan.ray_count()),
                  static_cast<std::size_t>(fan.dim));
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    for (std::size_t j = 0; j < fan.rays[i].size(); ++j)
      a.at(i, j) = fan.rays[i][j];
  return a;
}

FanDiagnostics validate(const Fan& fan) {
  FanDiagnostics diag;
  const int d = fan.dim;

  diag.is_simplicial = true;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const Mask cone = fan.max_cones[c];
    if (mask_size(cone) != d) {
      diag.is_simplicial = false;
      diag.messages.push_back("cone " + std::to_string(c) + " has " +
                              std::to_string(mask_size(cone)) + " rays, expected " +
                              std::to_string(d));
      continue;
    }
    IntegerMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    const auto verts = mask_to_indices(cone);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (int j = 0; j < d; ++j)
        m.at(i, static_cast<std::size_t>(j)) =
            fan.rays[static_cast<std::size_t>(verts[i])][static_cast<std::size_t>(j)];
    if (rank(m) != static_cast<std::size_t>(d)) {
      diag.is_simplicial = false;
      diag.messages.push_back("cone " + std::to_string(c) +
                              " has linearly dependent rays");
    }
  }

  diag.spans = rank(ray_matrix(fan)) == static_cast<std::size_t>(d);
  if (!diag.spans)
    diag.messages.push_back("rays do not span the ambient space (rank < dim)");

  if (!diag.is_simplicial) {
    diag.ridge_counts_ok = false;
    diag.messages.push_back("ridge pairing not checked: fan is not simplicial");
  } else {
    // completeness proxy: each ridge of a maximal cone must lie in exactly
    // two maximal cones
    std::map<Mask, int> ridge_count;
    for (Mask cone : fan.max_cones) {
      if (d == 1) {
        ++ridge_count[0];
        continue;
      }
      for (int v : mask_to_indices(cone)) ++ridge_count[cone & ~mask_bit(v)];
    }
    diag.ridge_counts_ok = true;
    for (const auto& [ridge, count] : ridge_count) {
      if (count == 2) continue;
      diag.ridge_counts_ok = false;
      const auto verts = mask_to_indices(ridge);
      std::string s = "{";
      for (std::size_t i = 0; i < verts.size(); ++i)
        s += (i ? "," : "") + std::to_string(verts[i]);
      s += "}";
      diag.messages.push_back("ridge " + s + " lies in " + std::to_string(count) +
                              " maximal cones, expected 2");
    }
  }
  return diag;
}

SimplicialComplex fan_complex(const Fan& fan) {
  return SimplicialComplex::from_faces(fan.ray_count(), fan.max_cones);
}

}  // namespace toric
