#include "toric/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "toric/errors.hpp"

namespace toric {

OracleContext::OracleContext(Fan fan, Options options)
    : fan_(std::move(fan)),
      options_(options),
      complex_(fan_complex(fan_)),
      group_(fan_) {}

const HomologyDims& OracleContext::restriction_dims(Mask allowed) const {
  auto it = cache_.find(allowed);
  if (it == cache_.end())
    it = cache_.emplace(allowed, reduced_homology_dims(restriction(complex_, allowed)))
             .first;
  return it->second;
}

std::int64_t OracleContext::graded_dim(Mask negative_set, int i) const {
  if (i < 1) throw std::invalid_argument("oracle graded_dim: degree must be >= 1");
  const Mask allowed = complement_in(negative_set, fan_.ray_count());
  return restriction_dims(allowed).at(fan_.dim - 1 - i);
}

std::vector<Mask> OracleContext::contributing_patterns() const {
  const int n = fan_.ray_count();
  if (n > options_.max_scan_vertices)
    throw CapExceededError("oracle: too many rays for an exhaustive pattern scan");
  std::vector<Mask> out{0};  // the nonnegative orthant always matters for h^0
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    for (int i = 1; i <= fan_.dim; ++i)
      if (graded_dim(m, i) != 0) {
        out.push_back(m);
        break;
      }
  }
  return out;
}

namespace {

std::vector<Integer> exponent_vector(const std::vector<std::vector<long long>>& rays,
                                     std::span<const Integer> pstar,
                                     std::span<const Integer> m) {
  std::vector<Integer> p(pstar.begin(), pstar.end());
  for (std::size_t rho = 0; rho < rays.size(); ++rho)
    for (std::size_t j = 0; j < m.size(); ++j) p[rho] += Integer(rays[rho][j]) * m[j];
  return p;
}

Mask negative_mask(std::span<const long long> p) {
  Mask m = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 0) m |= mask_bit(static_cast<int>(i));
  return m;
}

}  // namespace

std::vector<std::int64_t> OracleContext::cohomology(std::span<const long long> divisor,
                                                    const Box& box) const {
  const int n = fan_.ray_count();
  const int d = fan_.dim;
  if (divisor.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("oracle cohomology: divisor length mismatch");
  if (box.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("oracle cohomology: box arity mismatch");

  const ClassElement cls = group_.divisor_class(divisor);
  const std::vector<Integer> pstar = group_.particular_preimage(cls);

  // safe bounds: every support point of every contributing pattern must lie
  // inside the user box
  for (Mask pattern : contributing_patterns()) {
    const auto support =
        enumerate_lattice_points(sign_pattern_system(fan_.rays, pstar, pattern));
    if (support.status == RegionStatus::kUnbounded)
      throw UnboundedError("oracle cohomology: unbounded support for a sign pattern");
    for (const auto& m : support.points) {
      const auto p = exponent_vector(fan_.rays, pstar, m);
      if (!box.contains(p))
        throw BoxTooSmallError(
            "oracle cohomology: box does not contain the support of the divisor class");
    }
  }

  std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
  box.for_each_point([&](const std::vector<long long>& p) {
    if (group_.divisor_class(p) != cls) return;
    const Mask neg = negative_mask(p);
    if (neg == 0) ++h[0];
    for (int i = 1; i <= d; ++i) h[static_cast<std::size_t>(i)] += graded_dim(neg, i);
  });
  return h;
}

Box default_box(const Fan& fan) {
  Box box;
  box.ranges.assign(static_cast<std::size_t>(fan.ray_count()),
                    {-(static_cast<long long>(fan.dim) + 2),
                     static_cast<long long>(fan.dim) + 1});
  return box;
}

OracleReport verify(const CohomologyEngine& engine, const Box& box,
                    std::string fan_id, const VerifyOptions& options) {
  const Fan& fan = engine.fan();
  const int n = fan.ray_count();
  const int d = fan.dim;
  if (box.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("verify: box arity must equal the ray count");
  if (n > 20)
    throw CapExceededError("verify: too many rays for an exhaustive box scan");

  OracleContext oracle(fan);
  OracleReport report;
  report.fan_id = std::move(fan_id);
  report.box = box;

  auto record = [&](OracleMismatch m) {
    ++report.total_mismatches;
    if (report.mismatches.size() < options.max_recorded_mismatches)
      report.mismatches.push_back(std::move(m));
  };

  // per-pattern tables, shared by the whole scan
  const Mask npat = Mask{1} << n;
  std::vector<std::vector<std::int64_t>> algo_gd(npat), oracle_gd(npat);
  for (Mask m = 0; m < npat; ++m) {
    algo_gd[m].resize(static_cast<std::size_t>(d) + 1, 0);
    oracle_gd[m].resize(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 1; i <= d; ++i) {
      algo_gd[m][static_cast<std::size_t>(i)] = engine.graded_dim(m, i);
      oracle_gd[m][static_cast<std::size_t>(i)] = oracle.graded_dim(m, i);
    }
  }
  std::vector<Mask> contributing{0};
  for (Mask m = 1; m < npat; ++m)
    if (std::any_of(oracle_gd[m].begin(), oracle_gd[m].end(),
                    [](std::int64_t v) { return v != 0; }))
      contributing.push_back(m);

  // graded comparison for every p in the box, bucketing pattern counts per
  // divisor class along the way
  const ClassGroup& group = engine.class_group();
  std::map<ClassElement, std::unordered_map<Mask, std::int64_t>> buckets;
  box.for_each_point([&](const std::vector<long long>& p) {
    const Mask neg = negative_mask(p);
    ++buckets[group.divisor_class(p)][neg];
    for (int i = 1; i <= d; ++i) {
      const std::int64_t a = algo_gd[neg][static_cast<std::size_t>(i)];
      const std::int64_t o = oracle_gd[neg][static_cast<std::size_t>(i)];
      if (a == o)
        ++report.match_count;
      else
        record(OracleMismatch{"graded", p, i, a, o});
    }
  });

  // bundle-level comparison for every class whose oracle support fits the box
  for (const auto& [cls, pattern_counts] : buckets) {
    const std::vector<Integer> pstar = group.particular_preimage(cls);
    bool adequate = true;
    for (Mask pattern : contributing) {
      const auto support =
          enumerate_lattice_points(sign_pattern_system(fan.rays, pstar, pattern));
      if (support.status == RegionStatus::kUnbounded) {
        report.messages.push_back("class " + cls.to_string() +
                                  ": unbounded support, skipped");
        adequate = false;
        break;
      }
      for (const auto& m : support.points) {
        if (!box.contains(exponent_vector(fan.rays, pstar, m))) {
          adequate = false;
          break;
        }
      }
      if (!adequate) break;
    }
    if (!adequate) {
      ++report.classes_skipped;
      continue;
    }

    const CohomologyVector algo = engine.cohomology_of_class(cls);
    std::vector<std::int64_t> oracle_h(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& [pattern, count] : pattern_counts) {
      if (pattern == 0) oracle_h[0] += count;
      for (int i = 1; i <= d; ++i)
        oracle_h[static_cast<std::size_t>(i)] +=
            count * oracle_gd[pattern][static_cast<std::size_t>(i)];
    }
    for (int i = 0; i <= d; ++i) {
      const std::int64_t a = algo.h[static_cast<std::size_t>(i)];
      const std::int64_t o = oracle_h[static_cast<std::size_t>(i)];
      if (a == o) {
        ++report.match_count;
      } else {
        record(OracleMismatch{"bundle", algo.divisor, i, a, o});
      }
    }
    ++report.classes_compared;
  }
  return report;
}

}  // namespace toric
