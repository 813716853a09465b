#include "toric/lattice_points.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

namespace {

// gcd-tightening plus dedup; constant rows are resolved on the spot.
// Returns false (infeasible) when a constant row is violated.
bool normalize_rows(std::vector<IneqRow>& rows) {
  std::map<std::vector<Integer>, Integer> best;
  for (IneqRow& r : rows) {
    Integer g = 0;
    for (const Integer& c : r.a) g = gcd(g, c);
    if (g == 0) {
      if (r.b < 0) return false;  // 0 <= b with b < 0
      continue;
    }
    if (g > 1) {
      for (Integer& c : r.a) c /= g;
      r.b = floor_div(r.b, g);  // valid tightening for integer points
    }
    auto [it, inserted] = best.try_emplace(r.a, r.b);
    if (!inserted && r.b < it->second) it->second = r.b;
  }
  rows.clear();
  for (auto& [a, b] : best) rows.push_back(IneqRow{a, b});
  return true;
}

}  // namespace

FourierMotzkinChain::FourierMotzkinChain(const IneqSystem& sys, std::size_t max_rows) {
  nvars_ = sys.nvars;
  levels_.resize(nvars_ + 1);
  for (const IneqRow& r : sys.rows) {
    if (r.a.size() != nvars_)
      throw std::invalid_argument("FourierMotzkinChain: row arity mismatch");
    levels_[nvars_].push_back(r);
  }
  if (!normalize_rows(levels_[nvars_])) {
    infeasible_ = true;
    return;
  }
  for (std::size_t k = nvars_; k-- > 0;) {
    const std::size_t var = k;  // eliminate x_var from levels_[k + 1]
    std::vector<const IneqRow*> pos, neg;
    std::vector<IneqRow>& out = levels_[k];
    for (const IneqRow& r : levels_[k + 1]) {
      if (r.a[var] > 0)
        pos.push_back(&r);
      else if (r.a[var] < 0)
        neg.push_back(&r);
      else
        out.push_back(IneqRow{{r.a.begin(), r.a.begin() + static_cast<long>(var)}, r.b});
    }
    for (const IneqRow* p : pos)
      for (const IneqRow* q : neg) {
        // (-c_q) * p + c_p * q cancels x_var; both multipliers are positive
        const Integer mp = -q->a[var];
        const Integer mq = p->a[var];
        IneqRow row;
        row.a.resize(var);
        for (std::size_t j = 0; j < var; ++j) row.a[j] = mp * p->a[j] + mq * q->a[j];
        row.b = mp * p->b + mq * q->b;
        out.push_back(std::move(row));
        if (out.size() > max_rows)
          throw CapExceededError(
              "Fourier-Motzkin elimination exceeded the row cap");
      }
    if (!normalize_rows(out)) {
      infeasible_ = true;
      return;
    }
  }
}

bool FourierMotzkinChain::bounded() const {
  if (infeasible_) return true;
  for (std::size_t k = 0; k < nvars_; ++k) {
    bool has_upper = false, has_lower = false;
    for (const IneqRow& r : levels_[k + 1]) {
      if (r.a[k] > 0) has_upper = true;
      if (r.a[k] < 0) has_lower = true;
    }
    if (!has_upper || !has_lower) return false;
  }
  return true;
}

template <typename Visit>
void FourierMotzkinChain::walk(Visit&& visit) const {
  if (infeasible_) return;
  if (nvars_ == 0) {
    visit(std::vector<Integer>{}, Integer(0), Integer(0), true);
    return;
  }
  std::vector<Integer> prefix(nvars_);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    std::optional<Integer> lo, hi;
    for (const IneqRow& r : levels_[k + 1]) {
      const Integer& c = r.a[k];
      if (c == 0) continue;
      Integer s = r.b;
      for (std::size_t j = 0; j < k; ++j) s -= r.a[j] * prefix[j];
      if (c > 0) {
        Integer bound = floor_div(s, c);
        if (!hi || bound < *hi) hi = std::move(bound);
      } else {
        Integer bound = ceil_div(s, c);
        if (!lo || bound > *lo) lo = std::move(bound);
      }
    }
    // bounded() guarantees both bounds exist on every feasible branch
    if (!lo || !hi || *lo > *hi) return;
    if (k + 1 == nvars_) {
      visit(prefix, *lo, *hi, false);
      return;
    }
    for (Integer v = *lo; v <= *hi; ++v) {
      prefix[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

Integer FourierMotzkinChain::count() const {
  Integer total = 0;
  walk([&](const std::vector<Integer>&, const Integer& lo, const Integer& hi,
           bool zero_vars) {
    if (zero_vars)
      total += 1;
    else
      total += hi - lo + 1;
  });
  return total;
}

void FourierMotzkinChain::enumerate(
    const std::function<void(const std::vector<Integer>&)>& emit) const {
  walk([&](const std::vector<Integer>& prefix, const Integer& lo, const Integer& hi,
           bool zero_vars) {
    if (zero_vars) {
      emit({});
      return;
    }
    std::vector<Integer> point = prefix;
    for (Integer v = lo; v <= hi; ++v) {
      point[nvars_ - 1] = v;
      emit(point);
    }
  });
}

CountResult count_lattice_points(const IneqSystem& sys) {
  FourierMotzkinChain chain(sys);
  if (!chain.feasible()) return {RegionStatus::kEmpty, 0};
  if (!chain.bounded()) return {RegionStatus::kUnbounded, 0};
  return {RegionStatus::kBounded, chain.count()};
}

EnumerateResult enumerate_lattice_points(const IneqSystem& sys,
                                         std::size_t max_points) {
  FourierMotzkinChain chain(sys);
  if (!chain.feasible()) return {RegionStatus::kEmpty, {}};
  if (!chain.bounded()) return {RegionStatus::kUnbounded, {}};
  EnumerateResult out{RegionStatus::kBounded, {}};
  chain.enumerate([&](const std::vector<Integer>& p) {
    if (out.points.size() >= max_points)
      throw CapExceededError("lattice point enumeration exceeded the point cap");
    out.points.push_back(p);
  });
  return out;
}

bool Box::contains(std::span<const Integer> p) const {
  if (p.size() != ranges.size()) return false;
  for (std::size_t i = 0; i < ranges.size(); ++i)
    if (p[i] < ranges[i].first || p[i] > ranges[i].second) return false;
  return true;
}

void Box::for_each_point(
    const std::function<void(const std::vector<long long>&)>& f) const {
  for (const auto& [lo, hi] : ranges)
    if (lo > hi) return;
  std::vector<long long> p(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) p[i] = ranges[i].first;
  while (true) {
    f(p);
    std::size_t i = 0;
    while (i < ranges.size()) {
      if (p[i] < ranges[i].second) {
        ++p[i];
        break;
      }
      p[i] = ranges[i].first;
      ++i;
    }
    if (i == ranges.size()) break;
  }
}

IneqSystem sign_pattern_system(const std::vector<std::vector<long long>>& rays,
                               std::span<const Integer> pstar, Mask negative_set,
                               const Box* box) {
  if (pstar.size() != rays.size())
    throw std::invalid_argument("sign_pattern_system: pstar length mismatch");
  const std::size_t dim = rays.empty() ? 0 : rays[0].size();
  IneqSystem sys;
  sys.nvars = dim;
  for (std::size_t rho = 0; rho < rays.size(); ++rho) {
    IneqRow row;
    row.a.resize(dim);
    if (mask_contains(negative_set, static_cast<int>(rho))) {
      // pstar_ρ + u_ρ·m <= -1
      for (std::size_t j = 0; j < dim; ++j) row.a[j] = rays[rho][j];
      row.b = -1 - pstar[rho];
    } else {
      // pstar_ρ + u_ρ·m >= 0
      for (std::size_t j = 0; j < dim; ++j) row.a[j] = -rays[rho][j];
      row.b = pstar[rho];
    }
    sys.rows.push_back(std::move(row));
  }
  if (box) {
    if (box->size() != rays.size())
      throw std::invalid_argument("sign_pattern_system: box arity mismatch");
    for (std::size_t rho = 0; rho < rays.size(); ++rho) {
      IneqRow up, down;
      up.a.resize(dim);
      down.a.resize(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        up.a[j] = rays[rho][j];
        down.a[j] = -rays[rho][j];
      }
      up.b = Integer(box->ranges[rho].second) - pstar[rho];
      down.b = pstar[rho] - Integer(box->ranges[rho].first);
      sys.rows.push_back(std::move(up));
      sys.rows.push_back(std::move(down));
    }
  }
  return sys;
}

}  // namespace toric
