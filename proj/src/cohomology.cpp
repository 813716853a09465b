#include "toric/cohomology.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "toric/errors.hpp"

namespace toric {

SRSet stanley_reisner(const SimplicialComplex& fan_complex) {
  return SRSet{minimal_nonfaces(fan_complex)};
}

std::vector<Mask> enumerate_usr(const SRSet& sr, std::size_t cap) {
  std::unordered_set<Mask> seen;
  std::vector<Mask> queue;
  for (Mask g : sr.generators)
    if (seen.insert(g).second) queue.push_back(g);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Mask base = queue[head];
    for (Mask g : sr.generators) {
      const Mask u = base | g;
      if (seen.insert(u).second) {
        if (seen.size() > cap)
          throw CapExceededError("enumerate_usr: union closure exceeded cap");
        queue.push_back(u);
      }
    }
  }
  std::sort(queue.begin(), queue.end(), mask_less);
  return queue;
}

SimplicialComplex lambda_complex(Mask support, const SRSet& sr) {
  std::vector<Mask> inside;
  for (Mask g : sr.generators)
    if (is_subset(g, support)) inside.push_back(g);
  Mask all = 0;
  for (Mask g : inside) all |= g;
  if (inside.empty() || all != support)
    throw std::invalid_argument(
        "lambda_complex: support is not a union of Stanley-Reisner generators");

  const int m = static_cast<int>(inside.size());
  // depth-first extension; once a subcollection covers the support, every
  // extension does too
  std::vector<Mask> faces;
  auto rec = [&](auto&& self, int next, Mask chosen, Mask covered) -> void {
    faces.push_back(chosen);
    for (int k = next; k < m; ++k) {
      const Mask u = covered | inside[static_cast<std::size_t>(k)];
      if (u != support) self(self, k + 1, chosen | mask_bit(k), u);
    }
  };
  rec(rec, 0, 0, 0);
  return SimplicialComplex::from_faces(m, faces);
}

SupportTable::SupportTable(const SRSet& sr, std::span<const Mask> usr, int n_vertices) {
  std::unordered_set<Mask> in_usr(usr.begin(), usr.end());
  for (Mask support : usr) {
    SupportInfo info;
    info.support = support;
    for (std::size_t k = 0; k < sr.generators.size(); ++k)
      if (is_subset(sr.generators[k], support))
        info.generator_indices.push_back(static_cast<int>(k));
    info.lambda = lambda_complex(support, sr);
    info.homology = reduced_homology_dims(info.lambda);
    info.complement_in_usr = in_usr.contains(complement_in(support, n_vertices));
    keys_.push_back(support);
    entries_.emplace(support, std::move(info));
  }
}

const SupportInfo* SupportTable::find(Mask support) const {
  const auto it = entries_.find(support);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

Fan validated(Fan fan) {
  const FanDiagnostics diag = validate(fan);
  if (!diag.ok()) {
    std::string msg = "fan failed validation:";
    for (const std::string& m : diag.messages) msg += "\n  " + m;
    throw ValidationError(msg);
  }
  return fan;
}

}  // namespace

std::int64_t to_int64_checked(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("count does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

CohomologyEngine::CohomologyEngine(Fan fan, Options options)
    : fan_(validated(std::move(fan))),
      options_(options),
      complex_(toric::fan_complex(fan_)),
      group_(fan_) {
  sr_ = stanley_reisner(complex_);
  build();
}

CohomologyEngine::CohomologyEngine(Fan fan, SRSet sr, Options options)
    : fan_(validated(std::move(fan))),
      options_(options),
      complex_(toric::fan_complex(fan_)),
      group_(fan_) {
  sr_ = std::move(sr);
  build();
}

void CohomologyEngine::build() {
  usr_ = enumerate_usr(sr_, options_.usr_cap);
  table_ = SupportTable(sr_, usr_, fan_.ray_count());
}

std::int64_t CohomologyEngine::graded_dim(Mask support, int i) const {
  if (i < 1) throw std::invalid_argument("graded_dim: degree must be >= 1");
  const SupportInfo* info = table_.find(support);
  if (!info) return 0;
  if (i != fan_.dim && !info->complement_in_usr) return 0;
  return info->homology.at(mask_size(support) - i - 2);
}

Integer CohomologyEngine::multiplicity(Mask support, const ClassElement& cls) const {
  const std::vector<Integer> pstar = group_.particular_preimage(cls);
  const auto result =
      count_lattice_points(sign_pattern_system(fan_.rays, pstar, support));
  switch (result.status) {
    case RegionStatus::kEmpty:
      return 0;
    case RegionStatus::kUnbounded:
      throw UnboundedError(
          "multiplicity: unbounded lattice-point region (is the fan complete?)");
    case RegionStatus::kBounded:
      return result.count;
  }
  return 0;
}

Integer CohomologyEngine::multiplicity(Mask support,
                                       std::span<const long long> divisor) const {
  return multiplicity(support, group_.divisor_class(divisor));
}

Integer CohomologyEngine::multiplicity_in_box(Mask support, const ClassElement& cls,
                                              const Box& box) const {
  const std::vector<Integer> pstar = group_.particular_preimage(cls);
  const auto result =
      count_lattice_points(sign_pattern_system(fan_.rays, pstar, support, &box));
  return result.status == RegionStatus::kBounded ? result.count : 0;
}

CohomologyVector CohomologyEngine::cohomology(std::span<const long long> divisor,
                                              bool with_terms) const {
  if (divisor.size() != static_cast<std::size_t>(fan_.ray_count()))
    throw std::invalid_argument("cohomology: divisor length must equal ray count");
  return compute(group_.divisor_class(divisor),
                 std::vector<long long>(divisor.begin(), divisor.end()), with_terms);
}

CohomologyVector CohomologyEngine::cohomology_of_class(const ClassElement& cls,
                                                       bool with_terms) const {
  std::vector<long long> label;
  for (const Integer& x : group_.particular_preimage(cls))
    label.push_back(static_cast<long long>(to_int64_checked(x)));
  return compute(cls, std::move(label), with_terms);
}

CohomologyVector CohomologyEngine::compute(const ClassElement& cls,
                                           std::vector<long long> divisor,
                                           bool with_terms) const {
  const int d = fan_.dim;
  CohomologyVector out;
  out.divisor = std::move(divisor);
  out.divisor_class = cls;
  out.h.assign(static_cast<std::size_t>(d) + 1, 0);

  std::unordered_map<Mask, Integer> mult_cache;
  auto mult_of = [&](Mask support) -> const Integer& {
    auto it = mult_cache.find(support);
    if (it == mult_cache.end())
      it = mult_cache.emplace(support, multiplicity(support, cls)).first;
    return it->second;
  };

  // h^0 is the lattice-point count of the section polytope
  {
    const Integer& m0 = mult_of(0);
    out.h[0] = to_int64_checked(m0);
    if (with_terms && m0 != 0)
      out.terms.push_back(CohomologyTerm{0, 0, to_int64_checked(m0), 1});
  }

  // 0 < i < d carries the duality filter; i = d sums over the whole closure
  Integer acc;
  for (int i = 1; i <= d; ++i) {
    acc = 0;
    for (Mask support : usr_) {
      const SupportInfo* info = table_.find(support);
      if (i != d && !info->complement_in_usr) continue;
      const std::int64_t hdim = info->homology.at(mask_size(support) - i - 2);
      if (hdim == 0) continue;
      const Integer& mult = mult_of(support);
      if (mult == 0) continue;
      acc += mult * hdim;
      if (with_terms)
        out.terms.push_back(
            CohomologyTerm{i, support, to_int64_checked(mult), hdim});
    }
    out.h[static_cast<std::size_t>(i)] = to_int64_checked(acc);
  }
  return out;
}

}  // namespace toric
