#include "toric/lattice_points.hpp"

#include <random>

#include "doctest.h"
#include "toric/errors.hpp"

using namespace toric;

namespace {

IneqRow row(std::initializer_list<long long> a, long long b) {
  IneqRow r;
  for (long long c : a) r.a.emplace_back(c);
  r.b = b;
  return r;
}

// brute-force count over a box known to contain the region
Integer brute_count(const IneqSystem& sys, long long lo, long long hi) {
  Integer count = 0;
  std::vector<long long> x(sys.nvars, lo);
  while (true) {
    bool ok = true;
    for (const IneqRow& r : sys.rows) {
      Integer s = 0;
      for (std::size_t j = 0; j < sys.nvars; ++j) s += r.a[j] * x[j];
      if (s > r.b) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < sys.nvars && x[i] == hi) x[i++] = lo;
    if (i == sys.nvars) break;
    ++x[i];
  }
  return count;
}

}  // namespace

TEST_CASE("simplex counting") {
  // x, y >= 0, x + y <= 4: triangular numbers
  IneqSystem sys{2, {row({-1, 0}, 0), row({0, -1}, 0), row({1, 1}, 4)}};
  const auto res = count_lattice_points(sys);
  CHECK(res.status == RegionStatus::kBounded);
  CHECK(res.count == 15);
}

TEST_CASE("empty and unbounded regions are classified") {
  SUBCASE("contradictory constants") {
    IneqSystem sys{1, {row({1}, 0), row({-1}, -1)}};  // x <= 0 and x >= 1
    CHECK(count_lattice_points(sys).status == RegionStatus::kEmpty);
  }
  SUBCASE("half-line") {
    IneqSystem sys{1, {row({-1}, 0)}};  // x >= 0
    CHECK(count_lattice_points(sys).status == RegionStatus::kUnbounded);
  }
  SUBCASE("diagonal line in the plane") {
    IneqSystem sys{2, {row({1, -1}, 0), row({-1, 1}, 0)}};  // x = y
    CHECK(count_lattice_points(sys).status == RegionStatus::kUnbounded);
  }
  SUBCASE("rational strip without lattice points is still unbounded") {
    // 1 <= 3y <= 2 has no integer y; the real region is an unbounded strip.
    // gcd tightening turns it into an exactly empty region.
    IneqSystem sys{2, {row({0, 3}, 2), row({0, -3}, -1)}};
    const auto res = count_lattice_points(sys);
    CHECK(res.status == RegionStatus::kEmpty);
  }
}

TEST_CASE("counts agree with a brute-force box scan on random polytopes") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> nvars_dist(1, 3), coeff(-3, 3), rhs(0, 12);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t nvars = static_cast<std::size_t>(nvars_dist(rng));
    IneqSystem sys{nvars, {}};
    // box constraints keep everything bounded, extra random cuts vary shape
    for (std::size_t j = 0; j < nvars; ++j) {
      IneqRow up, down;
      up.a.assign(nvars, 0);
      down.a.assign(nvars, 0);
      up.a[j] = 1;
      up.b = rhs(rng);
      down.a[j] = -1;
      down.b = rhs(rng);
      sys.rows.push_back(up);
      sys.rows.push_back(down);
    }
    for (int extra = 0; extra < 2; ++extra) {
      IneqRow r;
      for (std::size_t j = 0; j < nvars; ++j) r.a.emplace_back(coeff(rng));
      r.b = rhs(rng) - 6;
      sys.rows.push_back(r);
    }
    const auto res = count_lattice_points(sys);
    REQUIRE(res.status != RegionStatus::kUnbounded);
    CHECK(res.count == brute_count(sys, -15, 15));
  }
}

TEST_CASE("enumerate returns exactly the counted points") {
  IneqSystem sys{2, {row({-1, 0}, 1), row({0, -1}, 1), row({1, 1}, 2)}};
  const auto count = count_lattice_points(sys);
  const auto points = enumerate_lattice_points(sys);
  REQUIRE(points.status == RegionStatus::kBounded);
  CHECK(Integer(points.points.size()) == count.count);
  for (const auto& p : points.points) {
    for (const IneqRow& r : sys.rows) {
      Integer s = 0;
      for (std::size_t j = 0; j < 2; ++j) s += r.a[j] * p[j];
      CHECK(s <= r.b);
    }
  }
}

TEST_CASE("box odometer visits the whole box") {
  Box box{{{-1, 1}, {2, 3}}};
  int visits = 0;
  box.for_each_point([&](const std::vector<long long>& p) {
    CHECK(p.size() == 2);
    ++visits;
  });
  CHECK(visits == 6);
  const std::vector<Integer> inside{0, 2};
  const std::vector<Integer> outside{0, 4};
  CHECK(box.contains(inside));
  CHECK_FALSE(box.contains(outside));
}
