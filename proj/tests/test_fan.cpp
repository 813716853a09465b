#include "toric/fan.hpp"

#include "doctest.h"
#include "support.hpp"
#include "toric/errors.hpp"

using namespace toric;

TEST_CASE("parse_fan echoes a valid document") {
  const Fan fan = test::load_fan("p2");
  CHECK(fan.dim == 2);
  CHECK(fan.ray_count() == 3);
  CHECK(fan.rays[2] == std::vector<long long>{-1, -1});
  CHECK(fan.max_cones == std::vector<Mask>{0b011, 0b110, 0b101});
}

TEST_CASE("parse_fan rejects bad documents") {
  CHECK_THROWS_WITH_AS(
      parse_fan(R"({"dim":2,"rays":[[2,0],[0,1]],"max_cones":[[0,1]]})"),
      doctest::Contains("non-primitive ray"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_fan(R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,3]]})"),
      doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_AS(parse_fan("not json"), ParseError);
  CHECK_THROWS_AS(parse_fan(R"({"dim":2,"rays":[[1,0]]})"), ParseError);  // missing key
  CHECK_THROWS_WITH_AS(
      parse_fan(R"({"dim":2,"rays":[[1,0],[1,0]],"max_cones":[[0,1]]})"),
      doctest::Contains("duplicate rays"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_fan(R"({"dim":2,"rays":[[0,0],[0,1]],"max_cones":[[0,1]]})"),
      doctest::Contains("zero"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_fan(R"({"dim":2,"rays":[[1,0,0],[0,1]],"max_cones":[[0,1]]})"),
      doctest::Contains("length"), ParseError);
}

TEST_CASE("validate") {
  SUBCASE("the shipped fixtures all pass") {
    for (const auto& name : test::fixture_names()) {
      const FanDiagnostics diag = validate(test::load_fan(name));
      INFO(name);
      CHECK(diag.is_simplicial);
      CHECK(diag.spans);
      CHECK(diag.ridge_counts_ok);
      CHECK(diag.ok());
    }
  }
  SUBCASE("a missing cone breaks the ridge pairing") {
    const Fan fan =
        parse_fan(R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1]]})");
    const FanDiagnostics diag = validate(fan);
    CHECK(diag.is_simplicial);
    CHECK(diag.spans);
    CHECK_FALSE(diag.ridge_counts_ok);
    CHECK_FALSE(diag.ok());
  }
  SUBCASE("rays on a line do not span the plane") {
    const Fan fan = parse_fan(R"({"dim":2,"rays":[[1,0],[-1,0]],"max_cones":[[0,1]]})");
    const FanDiagnostics diag = validate(fan);
    CHECK_FALSE(diag.spans);
    CHECK_FALSE(diag.is_simplicial);  // the cone's rays are dependent
  }
  SUBCASE("wrong cone size is flagged") {
    const Fan fan =
        parse_fan(R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1,2]]})");
    CHECK_FALSE(validate(fan).is_simplicial);
  }
}

TEST_CASE("fan_complex") {
  SUBCASE("projective plane gives the triangle boundary") {
    const auto p = fan_complex(test::load_fan("p2"));
    CHECK(p.maximal_faces() == std::vector<Mask>{0b011, 0b101, 0b110});
    CHECK(reduced_homology_dims(p).at(1) == 1);  // a circle
  }
  SUBCASE("product of lines gives the 4-cycle") {
    const auto p = fan_complex(test::load_fan("p1xp1"));
    CHECK(p.maximal_faces() ==
          std::vector<Mask>{0b0011, 0b0110, 0b1001, 0b1100});
  }
  SUBCASE("a single cone gives the full simplex on its rays") {
    const Fan fan = parse_fan(R"({"dim":2,"rays":[[1,0],[0,1]],"max_cones":[[0,1]]})");
    CHECK(fan_complex(fan) == SimplicialComplex::full_simplex(2));
  }
}

TEST_CASE("fan_complex is pure of dimension d-1 on the fixtures") {
  for (const auto& name : test::fixture_names()) {
    const Fan fan = test::load_fan(name);
    const auto p = fan_complex(fan);
    INFO(name);
    for (Mask f : p.maximal_faces()) CHECK(mask_size(f) == fan.dim);
  }
}

TEST_CASE("parse after serialize is the identity on fans") {
  for (const auto& name : test::fixture_names()) {
    const Fan fan = test::load_fan(name);
    CHECK(parse_fan(serialize_fan(fan)) == fan);
  }
}
