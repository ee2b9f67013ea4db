#include <doctest.h>

#include "dsg/errors.hpp"
#include "dsg/resolution.hpp"
#include "dsg_test_util.hpp"

using namespace dsg;
using namespace dsg::test;

TEST_SUITE("resolution") {
  TEST_CASE("Koszul complex on three variables") {
    auto R = quotient("x y z", "x, y, z");
    auto F = resolve_ring(*R);
    CHECK(F.minimal);
    CHECK(F.complete);
    CHECK(F.betti() == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(is_complex(R->ambient(), F));
    CHECK(F.degrees[3] == std::vector<std::int64_t>{3});
  }

  TEST_CASE("Betti numbers of small quotients") {
    CHECK(resolve_ring(*quotient("x y", "x^2, x*y, y^2")).betti() == std::vector<std::size_t>{1, 3, 2});
    CHECK(resolve_ring(*quotient("x y", "x^2 - y^3", "3 2")).betti() == std::vector<std::size_t>{1, 1});
    CHECK(resolve_ring(*free_ring("x y")).betti() == std::vector<std::size_t>{1});
    auto dim41 = resolve_ring(*load("dim41.ring"));
    CHECK(dim41.betti().size() == 4);
    CHECK(is_complex(load("dim41.ring")->ambient(), dim41));
  }

  TEST_CASE("graded depth") {
    CHECK(depth_graded(*load("dim41.ring")) == 1);
    CHECK(depth_graded(*load("egdimsing1.ring")) == 2);
    CHECK(depth_graded(*load("uncountable.ring")) == 2);
    CHECK(depth_graded(*load("dual.ring")) == 1);
    for (int n = 2; n <= 5; ++n) CHECK(depth_graded(*load("depthzero" + std::to_string(n) + ".ring")) == 0);
    CHECK(depth_graded(*free_ring("x y z")) == 3);
  }

  TEST_CASE("unit entries cancel") {
    auto R = free_ring("x y");
    const auto& P = R->ambient();
    PolyMatrix pres(1, 2);
    pres(0, 0) = P.one();
    pres(0, 1) = poly(R, "x");
    auto F = minimal_free_resolution(P, pres, {0}, 8);
    CHECK(F.minimal);
    CHECK(F.betti() == std::vector<std::size_t>{0});
  }

  TEST_CASE("length cap and homogeneity") {
    auto R = quotient("x y z", "x, y, z");
    const auto& P = R->ambient();
    PolyMatrix pres(1, 3);
    pres(0, 0) = poly(R, "x");
    pres(0, 1) = poly(R, "y");
    pres(0, 2) = poly(R, "z");
    auto F = minimal_free_resolution(P, pres, {0}, 2);
    CHECK_FALSE(F.complete);
    CHECK(F.length() == 2);
    pres(0, 2) = poly(R, "z^2 + x");
    CHECK_THROWS_AS(minimal_free_resolution(P, pres, {0}, 4), UnsupportedError);
    CHECK_THROWS_AS(depth_graded(*quotient("x y", "x^2 - y^3")), UnsupportedError);
  }

  TEST_CASE("Ext oracle for grade") {
    auto R = free_ring("x y z");
    CHECK(grade_ext_oracle(ideal(R, "x, y"), 4).value == 2);
    CHECK(grade_ext_oracle(ideal(R, "x*y, x*z"), 4).value == 1);
    auto S = quotient("x y", "x*y");
    CHECK(grade_ext_oracle(ideal(S, "x"), 3).value == 0);
    CHECK(grade_ext_oracle(ideal(S, "x + y"), 3).value == 1);
    CHECK_THROWS_AS(grade_ext_oracle(ideal(R, "1"), 4), DomainError);
  }
}
